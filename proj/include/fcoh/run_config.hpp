// run_config.hpp: batch run configuration and execution behind the CLI

#pragma once

#include "fcoh/linalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fcoh {

inline constexpr const char* kToolVersion = "0.1.0";

/// Configuration problem; field() names the offending setting.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Every field besides command is optional; resolve_defaults() fills in what
// the command needs. Field names match the JSON schema and the CLI flags.
struct RunConfig {
  std::string command;                 // verify | identity | qfunc | measure-check | compose-check
  std::optional<std::string> target;   // verify: hw|su2|su11|cross|density, identity: jacobi
  std::optional<std::string> group;    // hw|su2|su11 for cross, density, qfunc and the checks
  std::optional<std::string> fiducial;
  std::optional<std::string> fiducial2;
  std::optional<std::string> rho;
  std::optional<std::string> rho0;
  std::optional<double> spin;
  std::optional<double> m;
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> trunc;
  std::optional<double> radius;
  std::optional<int> nr;
  std::optional<int> nphi;
  std::optional<int> levels;
  std::optional<double> s_max;
  std::optional<int> ns;
  std::optional<int> ntheta;
  std::optional<int> interior;
  std::optional<double> tolerance;
  std::optional<int> probes;
  std::optional<double> probe_radius;
  std::optional<double> probe_tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<int> pairs;
  std::optional<double> extent;
  std::optional<int> npts;
  std::optional<int> workers;
  std::optional<std::string> output;

  bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// Fill command-dependent defaults and validate; throws ConfigError.
RunConfig resolve_defaults(const RunConfig& c);

struct ExecResult {
  int status = 0;              // 0 pass, 1 tolerance failure, 2 usage/config error
  nlohmann::json report;       // empty on status 2
  std::string diagnostic;      // set on status 2
};

/// Runs the configured command. Never throws for bad configurations: they
/// come back as status 2 with a diagnostic naming the field.
ExecResult execute(const RunConfig& config);

/// Report without its timings, for reproducibility comparisons.
nlohmann::json strip_timings(nlohmann::json report);

// Fiducial and density mini-languages, exposed for tests.
//   fiducial: fock:<n> | file:<path> | random:<levels>:<seed>
//   density:  file:<path> | mix:[w*]<fiducial>,... | randrho:<dim>:<seed> | <fiducial>
FockVector parse_fiducial(const std::string& spec, const std::string& field);
ComplexMatrix parse_density(const std::string& spec, const std::string& field);

/// "3", "-1.5" or "5/2".
double parse_fraction(const std::string& s, const std::string& field);

}  // namespace fcoh
