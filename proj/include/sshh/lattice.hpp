#ifndef SSHH_LATTICE_HPP
#define SSHH_LATTICE_HPP

#include <string>
#include <vector>

namespace sshh {

enum class Boundary { Periodic, Open, Twisted };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

/// Full physical configuration of an SU(N) SSH-Hubbard chain.
///
/// Sites are indexed 0..L-1 internally. Bond x connects sites (x, x+1 mod L)
/// and carries amplitude J*[1 + delta*(-1)^(x+1)] + hopping_disorder[x], i.e.
/// bond (0,1) is the weak bond J*(1-delta) for delta > 0. The boundary bond
/// (L-1 -> 0) is absent for open chains and carries the twist phase e^{i theta}
/// for flavors in twist_flavors (empty mask = all flavors) when twisted.
struct LatticeSpec {
  int L = 2;
  double J = 1.0;
  double delta = 0.0;
  double U = 0.0;
  double mu = 0.0;
  int n_flavors = 1;
  Boundary boundary = Boundary::Periodic;
  double twist_theta = 0.0;
  std::vector<int> twist_flavors;        // 0-based flavor indices; empty = all
  std::vector<double> hopping_disorder;  // length L or empty (zeros)
  std::vector<double> onsite_disorder;   // length L or empty (zeros)

  int bond_count() const { return boundary == Boundary::Open ? L - 1 : L; }
  bool flavor_twisted(int alpha) const;
  double hopping_offset(int bond) const {
    return hopping_disorder.empty() ? 0.0 : hopping_disorder[bond];
  }
  double onsite_offset(int site) const {
    return onsite_disorder.empty() ? 0.0 : onsite_disorder[site];
  }

  /// Clean dimerized amplitude of bond x (disorder and twist not included).
  double dimerized_amplitude(int bond) const {
    const int parity = (bond % 2 == 0) ? -1 : +1;
    return J * (1.0 + parity * delta);
  }

  /// Throws ArgumentError on violated invariants (odd L, |delta|>=1, bad
  /// disorder array lengths, flavor mask out of range, theta outside [0,2pi)).
  void validate() const;

  bool operator==(const LatticeSpec&) const = default;
};

}  // namespace sshh

#endif
