#ifndef SSHH_BERRY_HPP
#define SSHH_BERRY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sshh/basis.hpp"
#include "sshh/lattice.hpp"

namespace sshh {

struct TwistGrid {
  int M = 20;
  std::vector<int> flavor_mask;  // empty = twist all flavors

  double angle(int n) const;
};

enum class BandTag { LowerNion, FullNion, AllBelowGap, ScatteringOnly, DoublonBand, Custom };

/// Selects an index range [a, b) of the energy-sorted spectrum. Band tags
/// resolve by state counting: the N-ion band is the top L states, its lower
/// half [D-L, D-L/2); all_below_gap = [0, D-L/2); scattering_only = [0, D-L).
struct SubsetSelector {
  BandTag tag = BandTag::Custom;
  std::size_t a = 0, b = 0;  // used when tag == Custom

  static SubsetSelector index_range(std::size_t a, std::size_t b);
  static SubsetSelector band(BandTag tag);
  std::pair<std::size_t, std::size_t> resolve(const FockBasis& basis) const;
  std::string describe() const;
};

struct BerryPhaseResult {
  double gamma = 0.0;                   // in (-pi, pi]
  std::vector<double> per_step_phases;  // -Im log det S^(n,n+1)
  double min_gap = 0.0;                 // smallest subset/complement gap over angles
  std::size_t subset_size = 0;
  int M = 1;
  bool trusted = true;                  // min_gap >= 10 * gap_floor
};

/// Many-body Berry phase over twisted boundary conditions:
/// gamma = -Im log prod_n det S^(n,n+1),
/// S_{jj'} = <Psi_j(th_n)| exp(2pi i X/(M L)) |Psi_j'(th_{n+1})> with
/// X = sum_{x,alpha} (x - L/2 + 1/2) n_{x,alpha}. gap_floor < 0 selects the
/// default 1e-8*J; pass 0 to disable the gap-closure error.
BerryPhaseResult berry_phase(const LatticeSpec& spec, const FockBasis& basis,
                             const TwistGrid& grid, const SubsetSelector& sel,
                             double gap_floor = -1.0);

/// Large-M diagonal approximation: one accumulated phase per subset state.
std::vector<double> berry_phase_per_state(const LatticeSpec& spec, const FockBasis& basis,
                                          const TwistGrid& grid, const SubsetSelector& sel,
                                          double gap_floor = -1.0);

/// M = 1 special case: gamma = -Im log det <Psi_j| exp(2pi i X/L) |Psi_j'>.
BerryPhaseResult single_point_berry(const LatticeSpec& spec, const FockBasis& basis,
                                    const SubsetSelector& sel, double gap_floor = -1.0);

/// Twist applied to a single flavor's boundary bond.
BerryPhaseResult flavor_twist_berry(const LatticeSpec& spec, const FockBasis& basis,
                                    const TwistGrid& grid, const SubsetSelector& sel,
                                    int flavor, double gap_floor = -1.0);

/// Reduce an angle to (-pi, pi].
double principal_phase(double phi);

/// Distance of phi to the nearest of {0, pi} mod 2pi.
double quantization_distance(double phi);

}  // namespace sshh

#endif
