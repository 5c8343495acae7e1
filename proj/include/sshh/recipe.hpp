#ifndef SSHH_RECIPE_HPP
#define SSHH_RECIPE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sshh/basis.hpp"
#include "sshh/berry.hpp"
#include "sshh/dynamics.hpp"
#include "sshh/ensemble.hpp"
#include "sshh/lattice.hpp"

namespace sshh {

inline constexpr const char* kArtifactName = "sshh";
inline constexpr const char* kArtifactVersion = "0.1.0";

enum class Command { Spectrum, Walk, Berry, Effcmp, Sweep };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

enum class OutputFormat { Csv, Json };

/// A fully-resolved experiment description. Serialization materializes every
/// default so the emitted header block determines the run bit-for-bit.
struct ExperimentRecipe {
  Command command = Command::Spectrum;
  LatticeSpec spec;
  FlavorOccupancy occupancy;

  // injection: explicit (site, flavor) list; empty means an N-ion at
  // injection_site (or sublattice A of the central cell when that is -1).
  std::vector<std::pair<int, int>> injection;
  int injection_site = -1;

  PropagatorConfig propagator;

  // berry
  TwistGrid grid;
  SubsetSelector subset = SubsetSelector::band(BandTag::LowerNion);
  double gap_floor = -1.0;
  bool per_state = false;
  std::vector<double> berry_deltas;  // empty = spec.delta only

  DisorderConfig disorder;

  // sweep
  std::string sweep_kind = "berry";  // "berry" | "walk"
  std::vector<double> sweep_deltas;
  std::vector<double> sweep_W;

  // effcmp
  std::vector<double> effcmp_deltas;
  std::vector<double> effcmp_U;  // extra U values for the error table

  // spectrum
  bool spectrum_vectors = false;

  OutputFormat format = OutputFormat::Csv;
  std::string output_prefix = "run";
  std::uint64_t seed = 42;

  bool operator==(const ExperimentRecipe&) const = default;
};

/// key = value lines with dotted sections; '#' starts a comment. Throws
/// SchemaError on unknown keys or malformed values.
ExperimentRecipe parse_recipe(std::istream& in);
ExperimentRecipe parse_recipe_file(const std::string& path);
/// Canonical form: every field written, fixed key order, full precision.
std::string serialize_recipe(const ExperimentRecipe& recipe);

struct Diagnostic {
  enum class Severity { Info, Warning } severity = Severity::Info;
  std::string message;
};

/// Preflight: dimension and memory estimates, t_max vs boundary_time,
/// subset-gap check at theta=0. Never throws; diagnostics only.
std::vector<Diagnostic> validate(const ExperimentRecipe& recipe);

/// Resolve the injection list (explicit pairs, or the default N-ion).
std::vector<std::pair<int, int>> resolved_injection(const ExperimentRecipe& recipe);
int default_injection_site(const LatticeSpec& spec);

}  // namespace sshh

#endif
