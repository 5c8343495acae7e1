#ifndef SSHH_HAMILTONIAN_HPP
#define SSHH_HAMILTONIAN_HPP

#include <complex>
#include <vector>

#include "sshh/basis.hpp"
#include "sshh/lattice.hpp"
#include "sshh/sparse.hpp"

namespace sshh {

/// Nearest-neighbor hopping amplitudes. amp(bond, flavor) multiplies
/// c^dag_{x+1} c_x; the reverse hop carries the conjugate.
struct BondTable {
  struct Bond {
    int from, to;
    std::complex<double> base;  // dimerized amplitude + disorder, no twist
    bool is_twist_bond;
  };
  std::vector<Bond> bonds;
  std::complex<double> twist_phase{1.0, 0.0};
  std::vector<bool> twisted_flavor;

  static BondTable build(const LatticeSpec& spec);
  std::complex<double> amp(int bond, int flavor) const {
    const Bond& b = bonds[bond];
    return (b.is_twist_bond && twisted_flavor[flavor]) ? b.base * twist_phase : b.base;
  }
};

/// Assemble H = hopping + U sum_x sum_{a<b} n_xa n_xb + sum_x dmu_x n_x - mu N.
/// Rows are built independently (OpenMP) with columns sorted; the serial
/// reference path is selected with parallel=false and must agree exactly.
SparseOperator build_hamiltonian(const LatticeSpec& spec, const FockBasis& basis,
                                 bool parallel = true);

struct ChiralReport {
  bool is_symmetric = false;
  double mu_required = 0.0;
  bool verified = false;  // false when only the analytic value was computed
};

/// mu_required = (N-1)U/2; when the sector pair fits under `dimension_cap`
/// the sorted spectra of occupancy (n_a) and (L-n_a) are compared at that mu.
ChiralReport check_chiral_symmetry(const LatticeSpec& spec,
                                   const FlavorOccupancy& occ,
                                   std::size_t dimension_cap = 1 << 16);

/// True iff [H, I] = 0 within 1e-12 with I the signed permutation x -> L-1-x.
bool check_inversion_symmetry(const LatticeSpec& spec, const FlavorOccupancy& occ);

/// Signed-permutation action of inversion on basis states: index and sign.
void inversion_permutation(const FockBasis& basis, std::vector<std::size_t>& perm,
                           std::vector<int>& sign);

}  // namespace sshh

#endif
