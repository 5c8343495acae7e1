#include "sshh/observables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "sshh/errors.hpp"

namespace sshh {

UnitCellConvention UnitCellConvention::inversion_symmetric(int L) {
  return {L, (L - 2) / 4.0};
}

UnitCellConvention UnitCellConvention::centered_on_site(int L, int site) {
  return {L, static_cast<double>(site / 2)};
}

Eigen::VectorXd density_profile(const StateVector& psi) {
  const FockBasis& basis = *psi.basis;
  const int L = basis.sites();
  const int N = basis.flavors();
  Eigen::VectorXd n = Eigen::VectorXd::Zero(L);
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const double p = std::norm(psi.amplitudes[i]);
    if (p == 0.0) continue;
    for (int a = 0; a < N; ++a) {
      std::uint64_t pat = basis.pattern(i, a);
      while (pat) {
        n[std::countr_zero(pat)] += p;
        pat &= pat - 1;
      }
    }
  }
  return n;
}

Eigen::VectorXd nion_density_profile(const StateVector& psi) {
  const FockBasis& basis = *psi.basis;
  Eigen::VectorXd n = Eigen::VectorXd::Zero(basis.sites());
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const double p = std::norm(psi.amplitudes[i]);
    if (p == 0.0) continue;
    std::uint64_t all = ~std::uint64_t(0);
    for (int a = 0; a < basis.flavors(); ++a) all &= basis.pattern(i, a);
    while (all) {
      n[std::countr_zero(all)] += p;
      all &= all - 1;
    }
  }
  return n;
}

double nion_number(const StateVector& psi) {
  const FockBasis& basis = *psi.basis;
  double total = 0.0;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const double p = std::norm(psi.amplitudes[i]);
    if (p != 0.0) total += p * basis.full_sites(i);
  }
  return total;
}

double chiral_polarization_1(const StateVector& psi, const UnitCellConvention& conv) {
  const Eigen::VectorXd n = density_profile(psi);
  double value = 0.0;
  for (int x = 0; x < conv.L; ++x) value += conv.site_weight(x) * n[x];
  return value / psi.basis->occupancy().total();
}

SparseOperator chiral_displacement_operator(const FockBasis& basis,
                                            const UnitCellConvention& conv) {
  const std::size_t dim = basis.dimension();
  std::vector<std::int64_t> row_ptr(dim + 1);
  std::vector<std::int32_t> col(dim);
  std::vector<std::complex<double>> val(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    row_ptr[i] = static_cast<std::int64_t>(i);
    col[i] = static_cast<std::int32_t>(i);
    double wgt = 0.0;
    for (int a = 0; a < basis.flavors(); ++a) {
      std::uint64_t pat = basis.pattern(i, a);
      while (pat) {
        wgt += conv.site_weight(std::countr_zero(pat));
        pat &= pat - 1;
      }
    }
    val[i] = {wgt, 0.0};
  }
  row_ptr[dim] = static_cast<std::int64_t>(dim);
  return SparseOperator(&basis, dim, std::move(row_ptr), std::move(col), std::move(val), true);
}

PolarizationN chiral_polarization_N(const StateVector& psi, const UnitCellConvention& conv,
                                    double weight_floor) {
  const Eigen::VectorXd n = nion_density_profile(psi);
  PolarizationN result;
  for (int x = 0; x < conv.L; ++x) {
    result.numerator += conv.site_weight(x) * n[x];
    result.nion_weight += n[x];
  }
  result.reliable = result.nion_weight >= weight_floor;
  result.value = result.reliable ? result.numerator / result.nion_weight : 0.0;
  return result;
}

PolarizationSeries cumulative_average(const PolarizationSeries& series) {
  if (series.times.size() < 2) throw ArgumentError("cumulative_average needs >= 2 samples");
  PolarizationSeries out;
  out.times = series.times;
  out.values.resize(series.values.size());
  out.values[0] = series.values[0];
  double integral = 0.0;
  for (std::size_t k = 1; k < series.times.size(); ++k) {
    const double dt = series.times[k] - series.times[k - 1];
    integral += 0.5 * dt * (series.values[k] + series.values[k - 1]);
    out.values[k] = integral / (series.times[k] - series.times[0]);
  }
  return out;
}

int winding_number(double delta) { return delta > 0.0 ? 1 : 0; }

double analytic_P1(double delta, double J, double t, int k_grid) {
  if (!(std::abs(delta) < 1.0)) throw ArgumentError("analytic_P1 needs |delta| < 1");
  if (k_grid < 64) throw ArgumentError("analytic_P1 needs k_grid >= 64");
  // Bloch vector for cells (A,B) = (2m, 2m+1): intra-cell v = J(1-delta),
  // inter-cell w = J(1+delta); (n x d_k n)_z = (w^2 + v w cos k)/E_k^2.
  const double v = J * (1.0 - delta);
  const double w = J * (1.0 + delta);
  double nu = 0.0, osc = 0.0;
  for (int j = 0; j < k_grid; ++j) {
    const double k = 2.0 * std::numbers::pi * j / k_grid;
    const double e2 = v * v + w * w + 2.0 * v * w * std::cos(k);
    const double cross = (w * w + v * w * std::cos(k)) / e2;
    nu += cross;
    osc += std::cos(2.0 * std::sqrt(e2) * t) * cross;
  }
  nu /= k_grid;
  osc /= 2.0 * k_grid;
  return nu / 2.0 - osc;
}

double front_velocity(const std::vector<double>& times,
                      const std::vector<Eigen::VectorXd>& profiles, int injection_site,
                      double threshold, double transient_fraction) {
  if (times.size() < 10 || times.size() != profiles.size())
    throw ArgumentError("front_velocity needs >= 10 matching snapshots");
  if (threshold <= 0.0 || threshold >= 1.0)
    throw ArgumentError("front threshold must lie in (0, 1)");
  double peak = 0.0;
  for (const auto& p : profiles) peak = std::max(peak, p.maxCoeff());
  const double cut = threshold * peak;

  const std::size_t first = static_cast<std::size_t>(times.size() * transient_fraction);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  bool any_front = false;
  for (std::size_t k = first; k < times.size(); ++k) {
    double dist = 0.0;
    for (int x = 0; x < profiles[k].size(); ++x)
      if (profiles[k][x] > cut) {
        dist = std::max(dist, static_cast<double>(std::abs(x - injection_site)));
        any_front = true;
      }
    sx += times[k];
    sy += dist;
    sxx += times[k] * times[k];
    sxy += times[k] * dist;
    ++n;
  }
  if (!any_front) throw NumericError("no front above threshold");
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw NumericError("degenerate time grid in front fit");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace sshh
