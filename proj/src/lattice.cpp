#include "sshh/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "sshh/errors.hpp"

namespace sshh {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::Periodic: return "periodic";
    case Boundary::Open: return "open";
    case Boundary::Twisted: return "twisted";
  }
  return "periodic";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "periodic") return Boundary::Periodic;
  if (s == "open") return Boundary::Open;
  if (s == "twisted") return Boundary::Twisted;
  throw SchemaError("unknown boundary '" + s + "'");
}

bool LatticeSpec::flavor_twisted(int alpha) const {
  if (boundary != Boundary::Twisted) return false;
  if (twist_flavors.empty()) return true;
  return std::find(twist_flavors.begin(), twist_flavors.end(), alpha) != twist_flavors.end();
}

void LatticeSpec::validate() const {
  if (L < 2 || L % 2 != 0) throw ArgumentError("L must be even and >= 2");
  if (!(std::abs(delta) < 1.0)) throw ArgumentError("|delta| must be < 1");
  if (n_flavors < 1) throw ArgumentError("n_flavors must be >= 1");
  if (L > 62) throw ArgumentError("L exceeds the 62-site pattern encoding");
  if (twist_theta < 0.0 || twist_theta >= kTwoPi)
    throw ArgumentError("twist theta must lie in [0, 2pi)");
  for (int f : twist_flavors)
    if (f < 0 || f >= n_flavors) throw ArgumentError("twist flavor out of range");
  if (!hopping_disorder.empty() && static_cast<int>(hopping_disorder.size()) != L)
    throw ArgumentError("hopping_disorder must have length L");
  if (!onsite_disorder.empty() && static_cast<int>(onsite_disorder.size()) != L)
    throw ArgumentError("onsite_disorder must have length L");
}

}  // namespace sshh
