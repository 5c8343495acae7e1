#ifndef SSHH_EFFECTIVE_HPP
#define SSHH_EFFECTIVE_HPP

#include <Eigen/Dense>
#include <vector>

#include "sshh/lattice.hpp"

namespace sshh {

/// Closed-form parameters of the effective single-band N-ion model:
/// onsite E_N with per-bond virtual-fluctuation contributions, hopping
/// profile J_N [1 + delta_N (-1)^(x+1)] equal to the paper's per-bond form.
struct EffectiveParams {
  int N = 2;
  double J = 1.0, U = 1.0, delta = 0.0;
  double E_N = 0.0;      // bulk on-site energy
  double J_N = 0.0;      // effective SSH hopping scale
  double delta_N = 0.0;  // effective dimerization

  /// Hopping amplitude of effective bond x; equals J_N*(1 + delta_N*s_x)
  /// and N J^N (1 + delta s_x)^N / ((N-1)! U^(N-1)) with s_x = (-1)^(x+1).
  double hopping(int bond) const;
  /// On-site energy at site x for the given boundary; open chains get the
  /// single-bond edge correction N J_b^2 / ((N-1) U) instead of the two-bond
  /// bulk sum.
  double onsite(int site, int L, Boundary boundary) const;
  std::vector<double> onsite_profile(int L, Boundary boundary) const;
};

EffectiveParams doublon_params(double J, double U, double delta);
EffectiveParams trion_params(double J, double U, double delta);
EffectiveParams nion_params(int N, double J, double U, double delta);

/// L x L single-particle matrix of the effective chain (tridiagonal plus the
/// corner for periodic boundaries).
Eigen::MatrixXd build_effective_ssh(const EffectiveParams& params, int L, Boundary boundary);

struct BandCompareReport {
  double max_abs_error = 0.0;
  std::vector<double> full_band;        // sorted top-L energies of the full model
  std::vector<double> effective_band;   // sorted effective-model energies (bulk states)
  std::vector<double> edge_state_energies;  // flagged effective-chain edge states (open)
  std::vector<int> edge_indices;            // indices into the effective spectrum
  double band_gap = 0.0;  // separation between the N-ion band and the rest
};

/// Diagonalize the full one-per-flavor sector, extract the top-L band, and
/// compare sorted energies with the effective chain. Under open boundaries
/// edge-localized effective states are flagged and their energies reported
/// separately. Throws when the band is not gap-separated.
BandCompareReport band_compare(const LatticeSpec& spec, const EffectiveParams& params);

}  // namespace sshh

#endif
