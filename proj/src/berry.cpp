#include "sshh/berry.hpp"

#include <Eigen/LU>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "sshh/dense.hpp"
#include "sshh/errors.hpp"
#include "sshh/hamiltonian.hpp"

namespace sshh {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

// Diagonal of the many-body position operator X = sum_{x,a} (x - L/2 + 1/2) n_{x,a}.
Eigen::VectorXd position_diagonal(const FockBasis& basis) {
  const int L = basis.sites();
  Eigen::VectorXd X(basis.dimension());
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    double v = 0.0;
    for (int a = 0; a < basis.flavors(); ++a) {
      std::uint64_t pat = basis.pattern(i, a);
      while (pat) {
        v += std::countr_zero(pat) - L / 2.0 + 0.5;
        pat &= pat - 1;
      }
    }
    X[i] = v;
  }
  return X;
}

// Phase of det(M) through the LU factorization; stable for tiny |det|.
double logdet_phase(const Eigen::MatrixXcd& M) {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
  double arg = 0.0;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    const std::complex<double> u = lu.matrixLU()(i, i);
    if (u == std::complex<double>(0.0, 0.0)) throw NumericError("singular overlap matrix");
    arg += std::arg(u);
  }
  if (lu.permutationP().determinant() < 0) arg += std::numbers::pi;
  return arg;
}

struct AngleData {
  Eigen::MatrixXcd subset;  // eigenvector block, dim x (b-a)
  double gap = 0.0;
};

struct BerrySetup {
  std::size_t a = 0, b = 0;
  double gap_floor = 0.0;
  Eigen::VectorXcd phase_op;  // exp(2pi i X / (M L)) diagonal
};

AngleData diagonalize_at(const LatticeSpec& spec, const FockBasis& basis, double theta,
                         const std::vector<int>& mask, const BerrySetup& setup) {
  if (spec.boundary == Boundary::Open)
    throw ArgumentError("berry_phase needs a ring geometry");
  LatticeSpec twisted = spec;
  twisted.boundary = Boundary::Twisted;
  twisted.twist_theta = theta;
  twisted.twist_flavors = mask;

  const EigenSystem sys = eigh(build_hamiltonian(twisted, basis).to_dense(), true);
  AngleData out;
  const std::size_t D = basis.dimension();
  double gap = std::numeric_limits<double>::infinity();
  if (setup.a > 0) gap = std::min(gap, sys.values[setup.a] - sys.values[setup.a - 1]);
  if (setup.b < D) gap = std::min(gap, sys.values[setup.b] - sys.values[setup.b - 1]);
  out.gap = gap;
  if (gap <= setup.gap_floor)
    throw GapClosureError("subset gap " + std::to_string(gap) + " closed at theta=" +
                          std::to_string(theta), theta);
  out.subset = sys.vectors.middleCols(setup.a, setup.b - setup.a);
  return out;
}

BerrySetup make_setup(const LatticeSpec& spec, const FockBasis& basis,
                      const SubsetSelector& sel, int M, double gap_floor) {
  spec.validate();
  BerrySetup setup;
  auto [a, b] = sel.resolve(basis);
  if (!(a < b && b <= basis.dimension()))
    throw ArgumentError("subset selector outside the spectrum");
  setup.a = a;
  setup.b = b;
  setup.gap_floor = gap_floor < 0 ? 1e-8 * spec.J : gap_floor;
  const Eigen::VectorXd X = position_diagonal(basis);
  setup.phase_op.resize(X.size());
  const double scale = 2.0 * std::numbers::pi / (static_cast<double>(M) * spec.L);
  for (Eigen::Index i = 0; i < X.size(); ++i) setup.phase_op[i] = std::exp(kI * (scale * X[i]));
  return setup;
}

}  // namespace

double TwistGrid::angle(int n) const {
  return 2.0 * std::numbers::pi * n / M;
}

SubsetSelector SubsetSelector::index_range(std::size_t a, std::size_t b) {
  SubsetSelector s;
  s.tag = BandTag::Custom;
  s.a = a;
  s.b = b;
  return s;
}

SubsetSelector SubsetSelector::band(BandTag tag) {
  SubsetSelector s;
  s.tag = tag;
  return s;
}

std::pair<std::size_t, std::size_t> SubsetSelector::resolve(const FockBasis& basis) const {
  const std::size_t D = basis.dimension();
  const std::size_t L = static_cast<std::size_t>(basis.sites());
  switch (tag) {
    case BandTag::Custom:
      return {a, b};
    case BandTag::LowerNion:
      return {D - L, D - L / 2};
    case BandTag::FullNion:
      return {D - L, D};
    case BandTag::AllBelowGap:
      return {0, D - L / 2};
    case BandTag::ScatteringOnly:
      return {0, D - L};
    case BandTag::DoublonBand: {
      if (basis.flavors() == 2) return {D - L, D};
      // SU(3): the middle band, counted as doublon+single configurations.
      const std::size_t scat = L * (L - 1) * (L - 2);
      return {scat, scat + 3 * L * (L - 1)};
    }
  }
  return {a, b};
}

std::string SubsetSelector::describe() const {
  switch (tag) {
    case BandTag::LowerNion: return "lower_trion";
    case BandTag::FullNion: return "full_trion";
    case BandTag::AllBelowGap: return "all_below_gap";
    case BandTag::ScatteringOnly: return "scattering_only";
    case BandTag::DoublonBand: return "doublon_band";
    case BandTag::Custom:
      return "range:" + std::to_string(a) + ":" + std::to_string(b);
  }
  return "custom";
}

double principal_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  if (phi <= -std::numbers::pi) phi += two_pi;
  if (phi > std::numbers::pi) phi -= two_pi;
  return phi;
}

double quantization_distance(double phi) {
  const double d0 = std::abs(principal_phase(phi));
  const double dpi = std::abs(principal_phase(phi - std::numbers::pi));
  return std::min(d0, dpi);
}

BerryPhaseResult berry_phase(const LatticeSpec& spec, const FockBasis& basis,
                             const TwistGrid& grid, const SubsetSelector& sel,
                             double gap_floor) {
  if (grid.M < 1) throw ArgumentError("twist grid needs M >= 1");
  const BerrySetup setup = make_setup(spec, basis, sel, grid.M, gap_floor);

  std::vector<AngleData> data;
  data.reserve(grid.M);
  for (int n = 0; n < grid.M; ++n)
    data.push_back(diagonalize_at(spec, basis, grid.angle(n), grid.flavor_mask, setup));

  BerryPhaseResult result;
  result.M = grid.M;
  result.subset_size = setup.b - setup.a;
  result.min_gap = std::numeric_limits<double>::infinity();
  for (const auto& d : data) result.min_gap = std::min(result.min_gap, d.gap);
  result.trusted = result.min_gap >= 10.0 * setup.gap_floor;

  double total = 0.0;
  for (int n = 0; n < grid.M; ++n) {
    const auto& bra = data[n].subset;
    const auto& ket = data[(n + 1) % grid.M].subset;
    const Eigen::MatrixXcd S = bra.adjoint() * setup.phase_op.asDiagonal() * ket;
    const double step = principal_phase(-logdet_phase(S));
    result.per_step_phases.push_back(step);
    total += step;
  }
  result.gamma = principal_phase(total);
  return result;
}

std::vector<double> berry_phase_per_state(const LatticeSpec& spec, const FockBasis& basis,
                                          const TwistGrid& grid, const SubsetSelector& sel,
                                          double gap_floor) {
  if (grid.M < 1) throw ArgumentError("twist grid needs M >= 1");
  const BerrySetup setup = make_setup(spec, basis, sel, grid.M, gap_floor);

  std::vector<AngleData> data;
  data.reserve(grid.M);
  for (int n = 0; n < grid.M; ++n)
    data.push_back(diagonalize_at(spec, basis, grid.angle(n), grid.flavor_mask, setup));

  const std::size_t size = setup.b - setup.a;
  std::vector<double> phases(size, 0.0);
  for (int n = 0; n < grid.M; ++n) {
    const auto& bra = data[n].subset;
    const auto& ket = data[(n + 1) % grid.M].subset;
    for (std::size_t j = 0; j < size; ++j) {
      const std::complex<double> overlap =
          bra.col(j).dot(setup.phase_op.asDiagonal() * ket.col(j));
      phases[j] += -std::arg(overlap);
    }
  }
  for (double& p : phases) p = principal_phase(p);
  return phases;
}

BerryPhaseResult single_point_berry(const LatticeSpec& spec, const FockBasis& basis,
                                    const SubsetSelector& sel, double gap_floor) {
  TwistGrid grid;
  grid.M = 1;
  return berry_phase(spec, basis, grid, sel, gap_floor);
}

BerryPhaseResult flavor_twist_berry(const LatticeSpec& spec, const FockBasis& basis,
                                    const TwistGrid& grid, const SubsetSelector& sel,
                                    int flavor, double gap_floor) {
  if (flavor < 0 || flavor >= spec.n_flavors)
    throw ArgumentError("flavor index out of range");
  TwistGrid masked = grid;
  masked.flavor_mask = {flavor};
  return berry_phase(spec, basis, masked, sel, gap_floor);
}

}  // namespace sshh
