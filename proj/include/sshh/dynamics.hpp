#ifndef SSHH_DYNAMICS_HPP
#define SSHH_DYNAMICS_HPP

#include <functional>
#include <vector>

#include "sshh/basis.hpp"
#include "sshh/sparse.hpp"

namespace sshh {

enum class PropagationMethod { FullSpectrum, Krylov };

struct PropagatorConfig {
  PropagationMethod method = PropagationMethod::Krylov;
  double dt = 0.05;            // units 1/J
  double t_max = 0.0;          // units 1/J
  int krylov_dim = 30;
  double tolerance = 1e-10;    // local error target per step
  int record_stride = 0;       // 0 = auto (~400 snapshots over t_max)
  bool store_states = false;
  std::size_t dense_cap = 20000;

  bool operator==(const PropagatorConfig&) const = default;
};

struct WalkTrajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;  // empty unless store_states
  const FockBasis* basis = nullptr;
  double max_norm_drift = 0.0;
};

using SnapshotCallback = std::function<void(double, const Eigen::VectorXcd&)>;

/// Propagate psi0 under exp(-iHt), recording snapshots every record_stride
/// steps (t=0 and t_max always included). The callback, when given, is invoked
/// for every recorded snapshot; states are also kept when cfg.store_states.
WalkTrajectory evolve(const SparseOperator& H, const StateVector& psi0,
                      const PropagatorConfig& cfg, const SnapshotCallback& on_snapshot = {});

/// Min distance from the injection site to either lattice end over velocity.
double boundary_time(const LatticeSpec& spec, int injection_site, double velocity);

}  // namespace sshh

#endif
