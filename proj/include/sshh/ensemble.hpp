#ifndef SSHH_ENSEMBLE_HPP
#define SSHH_ENSEMBLE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sshh/berry.hpp"
#include "sshh/dynamics.hpp"
#include "sshh/lattice.hpp"

namespace sshh {

enum class DisorderKind { Hopping, Onsite, Both };

std::string to_string(DisorderKind k);
DisorderKind disorder_kind_from_string(const std::string& s);

struct DisorderConfig {
  double W = 0.0;
  DisorderKind kind = DisorderKind::Hopping;
  int realizations = 1;
  std::uint64_t seed = 42;

  bool operator==(const DisorderConfig&) const = default;
};

/// Counter-based uniform draw on [-W/2, W/2], keyed by (seed, realization,
/// site, kind). Any entry is reconstructible without generating predecessors
/// and is identical across platforms.
double disorder_entry(std::uint64_t seed, int realization, int site, int kind, double W);

/// (deltaJ, deltaMu), each length L; entries of the disabled kind are zero.
std::pair<std::vector<double>, std::vector<double>> sample_disorder(const DisorderConfig& cfg,
                                                                    int realization, int L);

struct SweepPoint {
  double axis = 0.0;       // delta value
  double mean = 0.0;       // circular mean for phases, arithmetic otherwise
  double std_error = 0.0;
  double concentration = 1.0;  // |mean resultant| for phases, 1 otherwise
  int n_ok = 0;
  int n_failed = 0;
  bool valid = false;      // >= 80% success
};

struct SweepResult {
  std::string kind;  // "berry" or "polarization"
  std::vector<SweepPoint> points;
};

/// Per delta point: fresh diagonalizations per realization, circular mean
/// arg(sum e^{i gamma}) with resultant length as concentration. Gap-closure
/// failures are counted, never silently dropped. With fold_estimator the
/// arithmetic mean of phases folded to (-pi, pi] is reported instead.
SweepResult disorder_averaged_berry(const LatticeSpec& spec_template,
                                    const std::vector<double>& deltas, const TwistGrid& grid,
                                    const SubsetSelector& sel, const DisorderConfig& cfg,
                                    bool fold_estimator = false, double gap_floor = -1.0);

struct WalkRecipe {
  PropagatorConfig propagator;
  int injection_site = -1;  // -1 = sublattice A of the central cell
  std::vector<std::pair<int, int>> injection;  // explicit (site, flavor); empty = N-ion
};

struct PolarizationSweepPoint {
  double axis = 0.0;
  double p1c_mean = 0.0, p1c_std_error = 0.0;
  double pnc_mean = 0.0, pnc_std_error = 0.0;
  int n_ok = 0, n_failed = 0;
  bool valid = false;
};

struct PolarizationSweepResult {
  std::vector<PolarizationSweepPoint> points;
};

/// Arithmetic mean and standard error of P^c_1(t_inf) and P^c_N(t_inf) per
/// delta point; failed propagations are recorded, excluded and counted.
PolarizationSweepResult disorder_averaged_polarization(const LatticeSpec& spec_template,
                                                       const WalkRecipe& recipe,
                                                       const std::vector<double>& deltas,
                                                       const DisorderConfig& cfg);

}  // namespace sshh

#endif
