#include "sshh/effective.hpp"

#include <algorithm>
#include <cmath>

#include "sshh/basis.hpp"
#include "sshh/dense.hpp"
#include "sshh/errors.hpp"
#include "sshh/hamiltonian.hpp"

namespace sshh {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int bond_parity(int bond) { return bond % 2 == 0 ? -1 : +1; }

}  // namespace

double EffectiveParams::hopping(int bond) const {
  const double s = bond_parity(bond);
  return N * std::pow(J * (1.0 + delta * s), N) / (factorial(N - 1) * std::pow(U, N - 1));
}

double EffectiveParams::onsite(int site, int L, Boundary boundary) const {
  // Bulk: N J_b^2 / ((N-1) U) from each adjacent bond; a terminal site of an
  // open chain has one bond only, which is the whole edge correction.
  const double base = 0.5 * U * N * (N - 1);
  const double prefactor = N / ((N - 1) * U);
  double fluct = 0.0;
  const int left_bond = (site - 1 + L) % L;
  const bool has_left = boundary != Boundary::Open || site > 0;
  const bool has_right = boundary != Boundary::Open || site < L - 1;
  if (has_left) {
    const double jb = J * (1.0 + delta * bond_parity(left_bond));
    fluct += prefactor * jb * jb;
  }
  if (has_right) {
    const double jb = J * (1.0 + delta * bond_parity(site));
    fluct += prefactor * jb * jb;
  }
  return base + fluct;
}

std::vector<double> EffectiveParams::onsite_profile(int L, Boundary boundary) const {
  std::vector<double> profile(L);
  for (int x = 0; x < L; ++x) profile[x] = onsite(x, L, boundary);
  return profile;
}

EffectiveParams nion_params(int N, double J, double U, double delta) {
  if (N < 2) throw ArgumentError("nion_params needs N >= 2");
  if (U == 0.0) throw ArgumentError("effective theory invalid at U = 0");
  EffectiveParams p;
  p.N = N;
  p.J = J;
  p.U = U;
  p.delta = delta;
  p.E_N = 0.5 * U * N * (N - 1) + (2.0 * N / (N - 1)) * J * J * (1.0 + delta * delta) / U;
  // Equivalent SSH form of the per-bond profile: J_N (1 + delta_N s) equals
  // the base prefactor times (1 + delta s)^N exactly for s = +-1. For N=2 this
  // reduces to J_2 = (2J^2/U)(1+delta^2), delta_2 = 2 delta/(1+delta^2); for
  // N=3 to J_3 = 3J^3(1+3delta^2)/(2U^2), delta_3 = (3+delta^2)delta/(1+3delta^2).
  const double base = N * std::pow(J, N) / (factorial(N - 1) * std::pow(U, N - 1));
  const double plus = std::pow(1.0 + delta, N);
  const double minus = std::pow(1.0 - delta, N);
  p.J_N = base * 0.5 * (plus + minus);
  p.delta_N = (plus - minus) / (plus + minus);
  return p;
}

EffectiveParams doublon_params(double J, double U, double delta) {
  return nion_params(2, J, U, delta);
}

EffectiveParams trion_params(double J, double U, double delta) {
  return nion_params(3, J, U, delta);
}

Eigen::MatrixXd build_effective_ssh(const EffectiveParams& params, int L, Boundary boundary) {
  if (L < 2 || L % 2 != 0) throw ArgumentError("effective chain needs even L >= 2");
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(L, L);
  for (int x = 0; x < L; ++x) H(x, x) = params.onsite(x, L, boundary);
  const int nb = boundary == Boundary::Open ? L - 1 : L;
  for (int x = 0; x < nb; ++x) {
    const int y = (x + 1) % L;
    const double t = params.hopping(x);
    H(x, y) += t;
    H(y, x) += t;
  }
  return H;
}

BandCompareReport band_compare(const LatticeSpec& spec, const EffectiveParams& params) {
  spec.validate();
  if (spec.n_flavors != params.N)
    throw ArgumentError("effective params built for a different flavor count");
  FlavorOccupancy occ;
  occ.per_flavor.assign(spec.n_flavors, 1);
  const FockBasis basis = FockBasis::enumerate(spec, occ);
  const Eigen::VectorXd full = eigvalsh(build_hamiltonian(spec, basis).to_dense());

  const std::size_t D = basis.dimension();
  const int L = spec.L;
  BandCompareReport report;
  report.band_gap = full[D - L] - full[D - L - 1];
  const double band_spread = full[D - 1] - full[D - L];
  if (report.band_gap <= band_spread)
    throw NumericError("N-ion band not gap-separated from the rest (U too small)");

  report.full_band.assign(full.data() + (D - L), full.data() + D);

  const Eigen::MatrixXd Heff = build_effective_ssh(params, L, spec.boundary);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Heff);
  const Eigen::VectorXd eff = solver.eigenvalues();
  report.effective_band.assign(eff.data(), eff.data() + L);

  if (spec.boundary == Boundary::Open) {
    // Edge localization: more than half the weight on the outer two sites of
    // either end marks an edge state.
    for (int j = 0; j < L; ++j) {
      const Eigen::VectorXd v = solver.eigenvectors().col(j).cwiseAbs2();
      const double left = v[0] + v[1];
      const double right = v[L - 2] + v[L - 1];
      if (std::max(left, right) > 0.5) {
        report.edge_indices.push_back(j);
        report.edge_state_energies.push_back(eff[j]);
      }
    }
  }

  for (int j = 0; j < L; ++j)
    report.max_abs_error =
        std::max(report.max_abs_error, std::abs(report.full_band[j] - report.effective_band[j]));
  return report;
}

}  // namespace sshh
