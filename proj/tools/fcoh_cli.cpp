// fcoh: batch verification of coherent-state resolutions of the identity
//
//   fcoh verify hw|su2|su11|cross|density [options]
//   fcoh identity jacobi --n N --p P
//   fcoh qfunc --group G --rho SPEC --rho0 SPEC
//   fcoh measure-check [--group G]
//   fcoh compose-check [--group G]
//
// The report (JSON) goes to stdout and to --output when given. Exit status:
// 0 all tolerances met, 1 tolerance failure, 2 usage or configuration error.

#include "fcoh/run_config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using fcoh::ConfigError;
using fcoh::RunConfig;

// Flags as parsed; anything set here overrides the --config file.
struct Flags {
  std::string config_path;
  RunConfig cfg;
  std::optional<std::string> spin;
  std::optional<std::string> m;
};

void add_shared_options(CLI::App& app, Flags& f) {
  RunConfig& c = f.cfg;
  app.add_option("--config", f.config_path, "JSON config file (same schema as the report's config)");
  app.add_option("--group", c.group, "hw, su2 or su11");
  app.add_option("--fiducial", c.fiducial, "fock:<n> | file:<path> | random:<levels>:<seed>");
  app.add_option("--fiducial2", c.fiducial2, "second fiducial for verify cross");
  app.add_option("--rho", c.rho, "density spec for qfunc");
  app.add_option("--rho0", c.rho0, "fiducial density spec");
  app.add_option("--spin", f.spin, "spin S, e.g. 1 or 3/2");
  app.add_option("--m", f.m, "S_z eigenvalue of the SU(2) fiducial");
  app.add_option("--n", c.n, "fiducial index (su11) or Jacobi degree");
  app.add_option("--p", c.p, "Jacobi identity parameter");
  app.add_option("--trunc", c.trunc, "Heisenberg-Weyl Fock truncation");
  app.add_option("--radius", c.radius, "plane grid radius");
  app.add_option("--nr", c.nr, "plane radial nodes");
  app.add_option("--nphi", c.nphi, "azimuthal nodes");
  app.add_option("--levels", c.levels, "SU(1,1) retained levels");
  app.add_option("--s-max,--s_max", c.s_max, "disc grid hyperbolic cutoff");
  app.add_option("--ns", c.ns, "disc radial nodes");
  app.add_option("--ntheta", c.ntheta, "sphere polar nodes");
  app.add_option("--interior", c.interior, "compared interior block size");
  app.add_option("--tolerance", c.tolerance, "asserted tolerance");
  app.add_option("--probes", c.probes, "number of diagonal probe states");
  app.add_option("--probe-radius,--probe_radius", c.probe_radius, "probe sampling radius");
  app.add_option("--probe-tolerance,--probe_tolerance", c.probe_tolerance, "probe tolerance");
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--pairs", c.pairs, "random pairs for the checks");
  app.add_option("--extent", c.extent, "qfunc grid half-width");
  app.add_option("--npts", c.npts, "qfunc points per axis");
  app.add_option("--workers", c.workers, "parallel workers");
  app.add_option("--output", c.output, "also write the report here");
}

template <class T>
void overlay(std::optional<T>& base, const std::optional<T>& flag) {
  if (flag) base = flag;
}

RunConfig merge(const Flags& f, const std::string& command, const std::optional<std::string>& target) {
  RunConfig c;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw ConfigError("config", "cannot open '" + f.config_path + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    c = j.get<RunConfig>();
  }
  const RunConfig& o = f.cfg;
  if (!command.empty()) c.command = command;
  overlay(c.target, target);
  overlay(c.group, o.group);
  overlay(c.fiducial, o.fiducial);
  overlay(c.fiducial2, o.fiducial2);
  overlay(c.rho, o.rho);
  overlay(c.rho0, o.rho0);
  if (f.spin) c.spin = fcoh::parse_fraction(*f.spin, "spin");
  if (f.m) c.m = fcoh::parse_fraction(*f.m, "m");
  overlay(c.n, o.n);
  overlay(c.p, o.p);
  overlay(c.trunc, o.trunc);
  overlay(c.radius, o.radius);
  overlay(c.nr, o.nr);
  overlay(c.nphi, o.nphi);
  overlay(c.levels, o.levels);
  overlay(c.s_max, o.s_max);
  overlay(c.ns, o.ns);
  overlay(c.ntheta, o.ntheta);
  overlay(c.interior, o.interior);
  overlay(c.tolerance, o.tolerance);
  overlay(c.probes, o.probes);
  overlay(c.probe_radius, o.probe_radius);
  overlay(c.probe_tolerance, o.probe_tolerance);
  overlay(c.seed, o.seed);
  overlay(c.pairs, o.pairs);
  overlay(c.extent, o.extent);
  overlay(c.npts, o.npts);
  overlay(c.workers, o.workers);
  overlay(c.output, o.output);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of coherent-state resolutions of the identity"};
  app.fallthrough();
  Flags flags;
  add_shared_options(app, flags);

  std::optional<std::string> target;
  auto* verify = app.add_subcommand("verify", "resolution of the identity by quadrature");
  verify->add_option("target", target, "hw | su2 | su11 | cross | density")->required();
  auto* identity = app.add_subcommand("identity", "integral identities");
  identity->add_option("target", target, "jacobi")->required();
  app.add_subcommand("qfunc", "generalized Q-function on a Cartesian grid, with its normalization");
  app.add_subcommand("measure-check", "invariance of the coset measures under left translation");
  app.add_subcommand("compose-check", "composition laws of the displacement operators");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command;
  if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();

  RunConfig cfg;
  try {
    cfg = merge(flags, command, target);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  }

  const fcoh::ExecResult result = fcoh::execute(cfg);
  if (result.status == 2) {
    std::cerr << "error: " << result.diagnostic << "\n";
    return 2;
  }
  const std::string text = result.report.dump(2) + "\n";
  std::cout << text;
  if (cfg.output) {
    std::ofstream out(*cfg.output);
    if (!out) {
      std::cerr << "error: output: cannot write '" << *cfg.output << "'\n";
      return 2;
    }
    out << text;
  }
  return result.status;
}
