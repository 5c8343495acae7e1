#include "sshh/basis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sshh/errors.hpp"

namespace sshh {

namespace {

std::vector<std::vector<std::uint64_t>> binomial_table(int n_max) {
  std::vector<std::vector<std::uint64_t>> binom(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    binom[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }
  return binom;
}

std::uint64_t choose(const std::vector<std::vector<std::uint64_t>>& binom, int n, int k) {
  if (k < 0 || k > n) return 0;
  return binom[n][k];
}

// Next bit pattern with the same popcount in increasing numeric order.
std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

int FlavorOccupancy::total() const {
  return std::accumulate(per_flavor.begin(), per_flavor.end(), 0);
}

std::optional<std::pair<std::uint64_t, int>> fermion_apply(std::uint64_t pattern,
                                                           OpKind op, int site, int L) {
  if (site < 0 || site >= L) throw ArgumentError("fermion_apply: site out of range");
  const std::uint64_t bit = std::uint64_t(1) << site;
  const bool occupied = pattern & bit;
  if (op == OpKind::Create ? occupied : !occupied) return std::nullopt;
  const int below = std::popcount(pattern & (bit - 1));
  return std::make_pair(pattern ^ bit, (below % 2 == 0) ? +1 : -1);
}

FockBasis FockBasis::enumerate(const LatticeSpec& spec, const FlavorOccupancy& occ,
                               std::size_t dimension_cap) {
  spec.validate();
  if (static_cast<int>(occ.per_flavor.size()) != spec.n_flavors)
    throw ArgumentError("occupancy does not match the number of flavors");
  for (int n : occ.per_flavor)
    if (n < 0 || n > spec.L) throw ArgumentError("per-flavor occupation out of range");

  FockBasis basis;
  basis.spec_ = spec;
  basis.occ_ = occ;
  basis.L_ = spec.L;
  basis.n_flavors_ = spec.n_flavors;
  basis.binom_ = binomial_table(spec.L);

  std::size_t dim = 1;
  for (int n : occ.per_flavor) {
    const std::uint64_t c = choose(basis.binom_, spec.L, n);
    if (c != 0 && dim > dimension_cap / c + 1) {
      throw CapacityError("basis dimension exceeds the cap of " +
                          std::to_string(dimension_cap) + " states");
    }
    dim *= static_cast<std::size_t>(c);
  }
  if (dim > dimension_cap)
    throw CapacityError("basis dimension " + std::to_string(dim) +
                        " exceeds the cap of " + std::to_string(dimension_cap));
  basis.dim_ = dim;

  // Mixed-radix strides, flavor 0 most significant.
  basis.flavor_stride_.assign(spec.n_flavors, 1);
  for (int a = spec.n_flavors - 2; a >= 0; --a)
    basis.flavor_stride_[a] =
        basis.flavor_stride_[a + 1] *
        static_cast<std::size_t>(choose(basis.binom_, spec.L, occ.per_flavor[a + 1]));

  // Per-flavor pattern lists in increasing numeric order.
  std::vector<std::vector<std::uint64_t>> per_flavor(spec.n_flavors);
  for (int a = 0; a < spec.n_flavors; ++a) {
    const int n = occ.per_flavor[a];
    const std::size_t count = static_cast<std::size_t>(choose(basis.binom_, spec.L, n));
    per_flavor[a].reserve(count);
    if (n == 0) {
      per_flavor[a].push_back(0);
    } else {
      std::uint64_t p = (std::uint64_t(1) << n) - 1;
      for (std::size_t i = 0; i < count; ++i) {
        per_flavor[a].push_back(p);
        p = next_same_popcount(p);
      }
    }
  }

  basis.states_.resize(dim * spec.n_flavors);
  std::vector<std::size_t> digit(spec.n_flavors, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (int a = 0; a < spec.n_flavors; ++a)
      basis.states_[i * spec.n_flavors + a] = per_flavor[a][digit[a]];
    for (int a = spec.n_flavors - 1; a >= 0; --a) {
      if (++digit[a] < per_flavor[a].size()) break;
      digit[a] = 0;
    }
  }
  return basis;
}

// Rank of a fixed-popcount pattern in increasing numeric order (colex on the
// ascending list of set positions): sum_i C(pos_i, i).
std::size_t FockBasis::rank_pattern(std::uint64_t pattern, int) const {
  std::size_t rank = 0;
  int i = 1;
  while (pattern) {
    const int pos = std::countr_zero(pattern);
    rank += static_cast<std::size_t>(choose(binom_, pos, i));
    pattern &= pattern - 1;
    ++i;
  }
  return rank;
}

std::size_t FockBasis::index_of(std::span<const std::uint64_t> patterns) const {
  std::size_t index = 0;
  for (int a = 0; a < n_flavors_; ++a)
    index += rank_pattern(patterns[a], occ_.per_flavor[a]) * flavor_stride_[a];
  return index;
}

int FockBasis::full_sites(std::size_t index) const {
  std::uint64_t all = ~std::uint64_t(0);
  for (int a = 0; a < n_flavors_; ++a) all &= pattern(index, a);
  return std::popcount(all);
}

bool FockBasis::one_per_flavor() const {
  return std::all_of(occ_.per_flavor.begin(), occ_.per_flavor.end(),
                     [](int n) { return n == 1; });
}

StateVector inject_nion(const FockBasis& basis, int site) {
  if (!basis.one_per_flavor())
    throw ArgumentError("inject_nion needs a one-particle-per-flavor sector");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(basis.flavors());
  for (int a = 0; a < basis.flavors(); ++a) pairs.emplace_back(site, a);
  return inject_particles(basis, pairs);
}

StateVector inject_particles(const FockBasis& basis,
                             std::span<const std::pair<int, int>> site_flavor) {
  const int L = basis.sites();
  const int N = basis.flavors();
  std::vector<std::uint64_t> patterns(N, 0);
  std::vector<int> count(N, 0);

  // Flavor-major creation order fixes the global sign (flavors commute in the
  // per-flavor encoding; within a flavor the caller's order is kept).
  std::vector<std::pair<int, int>> ordered(site_flavor.begin(), site_flavor.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& lhs, const auto& rhs) { return lhs.second < rhs.second; });

  int sign = 1;
  for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
    const auto [site, flavor] = *it;
    if (site < 0 || site >= L) throw ArgumentError("injection site out of range");
    if (flavor < 0 || flavor >= N) throw ArgumentError("injection flavor out of range");
    auto applied = fermion_apply(patterns[flavor], OpKind::Create, site, L);
    if (!applied) throw ArgumentError("double occupancy of (site, flavor) in injection");
    patterns[flavor] = applied->first;
    sign *= applied->second;
    ++count[flavor];
  }
  for (int a = 0; a < N; ++a)
    if (count[a] != basis.occupancy().per_flavor[a])
      throw ArgumentError("injection does not fill the sector occupancy");

  StateVector psi;
  psi.basis = &basis;
  psi.amplitudes = Eigen::VectorXcd::Zero(basis.dimension());
  psi.amplitudes[basis.index_of(patterns)] = std::complex<double>(sign, 0.0);
  return psi;
}

}  // namespace sshh
