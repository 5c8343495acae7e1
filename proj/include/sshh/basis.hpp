#ifndef SSHH_BASIS_HPP
#define SSHH_BASIS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sshh/lattice.hpp"

namespace sshh {

struct FlavorOccupancy {
  std::vector<int> per_flavor;

  int total() const;
  bool operator==(const FlavorOccupancy&) const = default;
};

enum class OpKind { Create, Annihilate };

/// Apply c^dag_site or c_site to a single-flavor occupation pattern.
/// Returns nullopt when Pauli-blocked, otherwise the new pattern and the
/// Jordan-Wigner sign (-1)^(occupied sites below `site`).
std::optional<std::pair<std::uint64_t, int>> fermion_apply(std::uint64_t pattern,
                                                           OpKind op, int site, int L);

/// Fixed-particle-number many-body basis: one L-bit pattern per flavor,
/// canonically ordered lexicographically on the pattern tuple (flavor 0 most
/// significant). Index lookup is arithmetic (combinatorial ranking), no hash.
class FockBasis {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t(1) << 27;

  static FockBasis enumerate(const LatticeSpec& spec, const FlavorOccupancy& occ,
                             std::size_t dimension_cap = kDefaultCap);

  std::size_t dimension() const { return dim_; }
  int sites() const { return L_; }
  int flavors() const { return n_flavors_; }
  const FlavorOccupancy& occupancy() const { return occ_; }
  const LatticeSpec& spec() const { return spec_; }

  /// Pattern of flavor alpha in basis state `index`.
  std::uint64_t pattern(std::size_t index, int alpha) const {
    return states_[index * n_flavors_ + alpha];
  }
  std::span<const std::uint64_t> state(std::size_t index) const {
    return {states_.data() + index * n_flavors_, static_cast<std::size_t>(n_flavors_)};
  }
  std::size_t index_of(std::span<const std::uint64_t> patterns) const;

  /// Number of sites occupied by every flavor at once (diagonal N-ion count).
  int full_sites(std::size_t index) const;

  bool one_per_flavor() const;

 private:
  LatticeSpec spec_;
  FlavorOccupancy occ_;
  int L_ = 0;
  int n_flavors_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> states_;          // dim * n_flavors, flavor-major
  std::vector<std::size_t> flavor_stride_;     // mixed-radix strides
  std::vector<std::vector<std::uint64_t>> binom_;  // binom_[n][k]
  std::size_t rank_pattern(std::uint64_t pattern, int n_particles) const;
};

struct StateVector {
  const FockBasis* basis = nullptr;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Unit basis vector with all N flavors created at `site` (flavor-major
/// creation order). Requires a one-particle-per-flavor sector.
StateVector inject_nion(const FockBasis& basis, int site);

/// General injection: list of (site, flavor) pairs, one creation operator per
/// pair applied in flavor-major order so the global sign is deterministic.
StateVector inject_particles(const FockBasis& basis,
                             std::span<const std::pair<int, int>> site_flavor);

}  // namespace sshh

#endif
