#include "sshh/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sshh/dense.hpp"
#include "sshh/errors.hpp"

namespace sshh {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

// One Lanczos exponential step: psi <- exp(-i dt H) psi. Full
// reorthogonalization inside the small subspace; recursive step halving when
// the local error estimate exceeds tol.
void krylov_step(const SparseOperator& H, Eigen::VectorXcd& psi, double dt, int m_max,
                 double tol, int depth = 0) {
  const double norm0 = psi.norm();
  if (norm0 == 0.0) return;

  const Eigen::Index dim = psi.size();
  const int m_cap = static_cast<int>(std::min<Eigen::Index>(m_max, dim));
  Eigen::MatrixXcd V(dim, m_cap);
  Eigen::VectorXd alpha(m_cap), beta(m_cap);

  V.col(0) = psi / norm0;
  int m = m_cap;
  double beta_last = 0.0;
  bool breakdown = false;
  for (int j = 0; j < m_cap; ++j) {
    Eigen::VectorXcd w = H.matvec(V.col(j));
    alpha[j] = std::real(V.col(j).dot(w));
    w -= alpha[j] * V.col(j);
    if (j > 0) w -= beta[j - 1] * V.col(j - 1);
    // re-orthogonalize against the whole block once
    w -= V.leftCols(j + 1) * (V.leftCols(j + 1).adjoint() * w);
    const double b = w.norm();
    if (j + 1 < m_cap) {
      beta[j] = b;
      if (b < 1e-13) {  // invariant subspace: the step is exact
        m = j + 1;
        breakdown = true;
        break;
      }
      V.col(j + 1) = w / b;
    } else {
      beta_last = b;
    }
  }
  Eigen::VectorXd tri_d = alpha.head(m);
  Eigen::VectorXd tri_e = m > 1 ? Eigen::VectorXd(beta.head(m - 1)) : Eigen::VectorXd();
  Eigen::VectorXd evals;
  Eigen::MatrixXd evecs;
  eigh_tridiagonal(tri_d, tri_e, evals, evecs);

  Eigen::VectorXcd phases(m);
  for (int j = 0; j < m; ++j) phases[j] = std::exp(-kI * (evals[j] * dt));
  const Eigen::VectorXd e1 = evecs.row(0).transpose();
  Eigen::VectorXcd u = evecs.cast<std::complex<double>>() *
                       (phases.array() * e1.array().cast<std::complex<double>>()).matrix();

  // First-omitted-term estimate of the local error.
  const double err = breakdown ? 0.0 : std::abs(beta_last) * std::abs(u[m - 1]) * std::abs(dt);
  if (err > tol && depth < 30) {
    krylov_step(H, psi, dt / 2, m_max, tol / 2, depth + 1);
    krylov_step(H, psi, dt / 2, m_max, tol / 2, depth + 1);
    return;
  }
  psi = norm0 * (V.leftCols(m) * u);
}

}  // namespace

WalkTrajectory evolve(const SparseOperator& H, const StateVector& psi0,
                      const PropagatorConfig& cfg, const SnapshotCallback& on_snapshot) {
  if (!H.hermitian()) throw ArgumentError("evolve needs a Hermitian operator");
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw ArgumentError("psi0 must be normalized");
  if (cfg.dt <= 0 || cfg.t_max < 0 || cfg.krylov_dim < 2)
    throw ArgumentError("invalid propagator configuration");

  const std::size_t dim = H.dimension();
  WalkTrajectory traj;
  traj.basis = psi0.basis;

  const int n_steps = std::max(1, static_cast<int>(std::ceil(cfg.t_max / cfg.dt - 1e-12)));
  const double dt = cfg.t_max > 0 ? cfg.t_max / n_steps : cfg.dt;
  int stride = cfg.record_stride;
  if (stride <= 0) stride = std::max(1, n_steps / 400);

  auto record = [&](double t, const Eigen::VectorXcd& v) {
    traj.times.push_back(t);
    traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(v.norm() - 1.0));
    if (cfg.store_states) traj.states.push_back(v);
    if (on_snapshot) on_snapshot(t, v);
  };

  if (cfg.method == PropagationMethod::FullSpectrum) {
    if (dim > cfg.dense_cap)
      throw CapacityError("dense propagation refused at dimension " + std::to_string(dim) +
                          "; use the krylov method");
    const EigenSystem sys = eigh(H.to_dense(), true);
    const Eigen::VectorXcd c0 = sys.vectors.adjoint() * psi0.amplitudes;
    record(0.0, psi0.amplitudes);
    if (cfg.t_max > 0) {
      for (int k = stride; k <= n_steps; k += stride) {
        const double t = k * dt;
        Eigen::VectorXcd phase(dim);
        for (std::size_t j = 0; j < dim; ++j)
          phase[j] = std::exp(-kI * (sys.values[j] * t)) * c0[j];
        record(t, sys.vectors * phase);
      }
      if ((n_steps % stride) != 0) {
        Eigen::VectorXcd phase(dim);
        for (std::size_t j = 0; j < dim; ++j)
          phase[j] = std::exp(-kI * (sys.values[j] * cfg.t_max)) * c0[j];
        record(cfg.t_max, sys.vectors * phase);
      }
    }
    return traj;
  }

  Eigen::VectorXcd psi = psi0.amplitudes;
  record(0.0, psi);
  if (cfg.t_max <= 0) return traj;
  for (int k = 1; k <= n_steps; ++k) {
    krylov_step(H, psi, dt, cfg.krylov_dim, cfg.tolerance);
    // exp of the Hermitian tridiagonal is unitary, so any norm drift is pure
    // roundoff; it is recorded before the rescale.
    const double n = psi.norm();
    traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(n - 1.0));
    if (std::abs(n - 1.0) < 1e-6 && n > 0) psi /= n;
    if (k % stride == 0 || k == n_steps) record(k * dt, psi);
  }
  return traj;
}

double boundary_time(const LatticeSpec& spec, int injection_site, double velocity) {
  if (velocity <= 0) throw ArgumentError("boundary_time needs velocity > 0");
  if (injection_site < 0 || injection_site >= spec.L)
    throw ArgumentError("injection site out of range");
  const double dist =
      std::min(injection_site, spec.L - 1 - injection_site);
  return dist / velocity;
}

}  // namespace sshh
