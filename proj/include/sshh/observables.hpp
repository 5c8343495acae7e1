#ifndef SSHH_OBSERVABLES_HPP
#define SSHH_OBSERVABLES_HPP

#include <Eigen/Dense>
#include <vector>

#include "sshh/basis.hpp"
#include "sshh/sparse.hpp"

namespace sshh {

/// Unit cells pair internal sites (2m, 2m+1) = (A, B). cell_coordinate(m) =
/// m - origin; the inversion-symmetric choice origin = (L-2)/4 maps cell
/// coordinates to their negatives about the chain center, while walks place
/// the origin on the injection cell so the chiral displacement starts at 0.
struct UnitCellConvention {
  int L = 0;
  double origin = 0.0;

  static UnitCellConvention inversion_symmetric(int L);
  static UnitCellConvention centered_on_site(int L, int site);

  int cell_of(int site) const { return site / 2; }
  bool sublattice_A(int site) const { return site % 2 == 0; }
  double cell_coordinate(int m) const { return m - origin; }
  /// Signed chiral weight of a site: +coord on A, -coord on B.
  double site_weight(int site) const {
    const double c = cell_coordinate(cell_of(site));
    return sublattice_A(site) ? c : -c;
  }
};

/// n(x) = sum_alpha <n_{x,alpha}>, length L.
Eigen::VectorXd density_profile(const StateVector& psi);

/// Per-site N-ion projector density <Phi^dag_x Phi_x>.
Eigen::VectorXd nion_density_profile(const StateVector& psi);

/// Expected N-ion count sum_x <prod_alpha n_{x,alpha}>.
double nion_number(const StateVector& psi);

/// Per-particle chiral polarization sum'_m x_m sum_alpha (n_A - n_B) / N_p.
double chiral_polarization_1(const StateVector& psi, const UnitCellConvention& conv);

/// The same observable as a diagonal operator (second code path; the
/// expectation value divided by the particle count must match
/// chiral_polarization_1 to machine precision).
SparseOperator chiral_displacement_operator(const FockBasis& basis,
                                            const UnitCellConvention& conv);

struct PolarizationN {
  double value = 0.0;        // normalized by the N-ion weight
  double numerator = 0.0;    // unnormalized sum'_m x_m (Phi_A - Phi_B)
  double nion_weight = 0.0;
  bool reliable = true;      // false when nion_weight < floor
};

PolarizationN chiral_polarization_N(const StateVector& psi, const UnitCellConvention& conv,
                                    double weight_floor = 1e-6);

struct PolarizationSeries {
  std::vector<double> times;
  std::vector<double> values;
};

/// Trapezoidal running mean P^c(t) = (1/t) int_0^t P dt'; P^c(0) = P(0).
PolarizationSeries cumulative_average(const PolarizationSeries& series);

/// Noninteracting oracle P1(t) = nu/2 - int dk/4pi cos(2 E_k t) (n x d_k n)_z
/// with the Bloch vector of this artifact's cell convention (nu=1 for delta>0).
double analytic_P1(double delta, double J, double t, int k_grid = 1024);

/// Winding number of the noninteracting chain (0 or 1; 1 for delta > 0).
int winding_number(double delta);

/// Least-squares slope of the furthest site above threshold*peak vs time,
/// discarding the initial transient_fraction of samples. Throws when the
/// profile never exceeds the threshold after the transient.
double front_velocity(const std::vector<double>& times,
                      const std::vector<Eigen::VectorXd>& profiles, int injection_site,
                      double threshold = 1e-3, double transient_fraction = 0.2);

}  // namespace sshh

#endif
