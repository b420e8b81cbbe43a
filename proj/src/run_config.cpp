#include "fcoh/run_config.hpp"

#include "fcoh/checks.hpp"
#include "fcoh/group.hpp"
#include "fcoh/qdist.hpp"
#include "fcoh/special_functions.hpp"
#include "fcoh/states.hpp"
#include "fcoh/verifier.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace fcoh {

using nlohmann::json;

// ---------------------------------------------------------------- JSON I/O

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
    return;
  }
  try {
    v = it->get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(key, std::string("wrong type in config: ") + e.what());
  }
}

const char* const kKnownKeys[] = {"command", "target",   "group",  "fiducial", "fiducial2", "rho",
                                  "rho0",    "spin",     "m",      "n",        "p",         "trunc",
                                  "radius",  "nr",       "nphi",   "levels",   "s_max",     "ns",
                                  "ntheta",  "interior", "tolerance", "probes", "probe_radius",
                                  "probe_tolerance", "seed", "pairs", "extent", "npts", "workers", "output"};

}  // namespace

void to_json(json& j, const RunConfig& c) {
  j = json::object();
  j["command"] = c.command;
  put(j, "target", c.target);
  put(j, "group", c.group);
  put(j, "fiducial", c.fiducial);
  put(j, "fiducial2", c.fiducial2);
  put(j, "rho", c.rho);
  put(j, "rho0", c.rho0);
  put(j, "spin", c.spin);
  put(j, "m", c.m);
  put(j, "n", c.n);
  put(j, "p", c.p);
  put(j, "trunc", c.trunc);
  put(j, "radius", c.radius);
  put(j, "nr", c.nr);
  put(j, "nphi", c.nphi);
  put(j, "levels", c.levels);
  put(j, "s_max", c.s_max);
  put(j, "ns", c.ns);
  put(j, "ntheta", c.ntheta);
  put(j, "interior", c.interior);
  put(j, "tolerance", c.tolerance);
  put(j, "probes", c.probes);
  put(j, "probe_radius", c.probe_radius);
  put(j, "probe_tolerance", c.probe_tolerance);
  put(j, "seed", c.seed);
  put(j, "pairs", c.pairs);
  put(j, "extent", c.extent);
  put(j, "npts", c.npts);
  put(j, "workers", c.workers);
  put(j, "output", c.output);
}

void from_json(const json& j, RunConfig& c) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw ConfigError(key, "unknown config field");
  }
  c = RunConfig{};
  if (const auto it = j.find("command"); it != j.end() && it->is_string()) c.command = it->get<std::string>();
  get(j, "target", c.target);
  get(j, "group", c.group);
  get(j, "fiducial", c.fiducial);
  get(j, "fiducial2", c.fiducial2);
  get(j, "rho", c.rho);
  get(j, "rho0", c.rho0);
  get(j, "spin", c.spin);
  get(j, "m", c.m);
  get(j, "n", c.n);
  get(j, "p", c.p);
  get(j, "trunc", c.trunc);
  get(j, "radius", c.radius);
  get(j, "nr", c.nr);
  get(j, "nphi", c.nphi);
  get(j, "levels", c.levels);
  get(j, "s_max", c.s_max);
  get(j, "ns", c.ns);
  get(j, "ntheta", c.ntheta);
  get(j, "interior", c.interior);
  get(j, "tolerance", c.tolerance);
  get(j, "probes", c.probes);
  get(j, "probe_radius", c.probe_radius);
  get(j, "probe_tolerance", c.probe_tolerance);
  get(j, "seed", c.seed);
  get(j, "pairs", c.pairs);
  get(j, "extent", c.extent);
  get(j, "npts", c.npts);
  get(j, "workers", c.workers);
  get(j, "output", c.output);
}

// ------------------------------------------------------------ fiducial and density parsing

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

long parse_int(const std::string& s, const std::string& field) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError(field, "'" + s + "' is not an integer");
  }
  if (pos != s.size()) throw ConfigError(field, "'" + s + "' is not an integer");
  return v;
}

double parse_double(const std::string& s, const std::string& field) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError(field, "'" + s + "' is not a number");
  }
  if (pos != s.size() || !std::isfinite(v)) throw ConfigError(field, "'" + s + "' is not a finite number");
  return v;
}

json read_json_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw ConfigError(field, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(field, "'" + path + "' is not valid JSON: " + e.what());
  }
}

cplx complex_from_json(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ConfigError(field, "complex entries must be [re, im] pairs");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

double parse_fraction(const std::string& s, const std::string& field) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_double(s, field);
  const double num = parse_double(s.substr(0, slash), field);
  const double den = parse_double(s.substr(slash + 1), field);
  if (den == 0.0) throw ConfigError(field, "zero denominator in '" + s + "'");
  return num / den;
}

FockVector parse_fiducial(const std::string& spec, const std::string& field) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw ConfigError(field, "empty fiducial spec");
  const std::string& kind = parts[0];
  if (kind == "fock" && parts.size() == 2) {
    const long n = parse_int(parts[1], field);
    if (n < 0) throw ConfigError(field, "Fock level must be nonnegative");
    return fock_state(static_cast<int>(n) + 1, static_cast<int>(n));
  }
  if (kind == "random" && parts.size() == 3) {
    const long levels = parse_int(parts[1], field);
    const long seed = parse_int(parts[2], field);
    if (levels < 1) throw ConfigError(field, "random fiducial needs at least one level");
    return random_unit_vector(static_cast<int>(levels), static_cast<std::uint64_t>(seed));
  }
  if (kind == "file" && parts.size() >= 2) {
    const std::string path = spec.substr(5);
    const json arr = read_json_file(path, field);
    if (!arr.is_array() || arr.empty()) throw ConfigError(field, "fiducial file must hold a non-empty array");
    FockVector v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(arr[i], field);
    if (std::abs(v.norm() - 1.0) > kNormTol) {
      throw ConfigError(field, "fiducial in '" + path + "' is not normalized (norm " + std::to_string(v.norm()) + ")");
    }
    return v;
  }
  throw ConfigError(field, "unrecognized fiducial spec '" + spec + "' (fock:<n>, file:<path>, random:<levels>:<seed>)");
}

ComplexMatrix parse_density(const std::string& spec, const std::string& field) {
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    const json rows = read_json_file(path, field);
    if (!rows.is_array() || rows.empty()) throw ConfigError(field, "density file must hold a non-empty matrix");
    const auto dim = static_cast<Eigen::Index>(rows.size());
    ComplexMatrix rho(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
        throw ConfigError(field, "density matrix in '" + path + "' is not square");
      }
      for (Eigen::Index j = 0; j < dim; ++j) rho(i, j) = complex_from_json(row[static_cast<std::size_t>(j)], field);
    }
    return rho;
  }
  if (spec.rfind("randrho:", 0) == 0) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError(field, "expected randrho:<dim>:<seed>");
    const long dim = parse_int(parts[1], field);
    if (dim < 1) throw ConfigError(field, "randrho dimension must be positive");
    return random_density(static_cast<int>(dim), static_cast<std::uint64_t>(parse_int(parts[2], field)));
  }
  if (spec.rfind("mix:", 0) == 0) {
    const auto items = split(spec.substr(4), ',');
    if (items.empty()) throw ConfigError(field, "empty mixture");
    std::vector<std::pair<double, FockVector>> terms;
    int dim = 0;
    double total = 0.0;
    for (const auto& item : items) {
      double weight = 1.0;
      std::string state = item;
      if (const auto star = item.find('*'); star != std::string::npos) {
        weight = parse_double(item.substr(0, star), field);
        state = item.substr(star + 1);
      }
      if (!(weight > 0.0)) throw ConfigError(field, "mixture weights must be positive");
      terms.emplace_back(weight, parse_fiducial(state, field));
      dim = std::max(dim, static_cast<int>(terms.back().second.size()));
      total += weight;
    }
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const auto& [w, f] : terms) {
      const FockVector e = embed(f, dim);
      rho += (w / total) * e * e.adjoint();
    }
    return rho;
  }
  const FockVector f = parse_fiducial(spec, field);
  return f * f.adjoint();
}

// -------------------------------------------------------------- defaults

namespace {

const std::string& require(const std::optional<std::string>& v, const char* field) {
  if (!v || v->empty()) throw ConfigError(field, "is required");
  return *v;
}

template <class T>
void set_default(std::optional<T>& v, T value) {
  if (!v) v = value;
}

void require_positive(const std::optional<int>& v, int min, const char* field) {
  if (v && *v < min) throw ConfigError(field, "must be at least " + std::to_string(min));
}

void require_positive(const std::optional<double>& v, const char* field) {
  if (v && !(*v > 0.0 && std::isfinite(*v))) throw ConfigError(field, "must be positive");
}

double default_tolerance(const std::string& group) {
  if (group == "su2") return 1e-10;
  if (group == "su11") return 1e-4;
  return 1e-6;
}

void apply_group_defaults(RunConfig& c, const std::string& group) {
  if (group == "hw") {
    set_default(c.trunc, 64);
    set_default(c.radius, 6.0);
    set_default(c.nr, 80);
    set_default(c.nphi, 128);
    set_default(c.probe_radius, 1.5);
  } else if (group == "su2") {
    if (!c.spin) throw ConfigError("spin", "is required for su2");
    const Spin s = [&] {
      try {
        return Spin::from_value(*c.spin);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("spin", e.what());
      }
    }();
    set_default(c.ntheta, s.twice * 2 + 8);
    set_default(c.nphi, s.twice * 2 + 8);
    set_default(c.probe_radius, 1.0);
  } else if (group == "su11") {
    set_default(c.levels, 128);
    set_default(c.s_max, 24.0);
    set_default(c.ns, 120);
    set_default(c.nphi, 128);
    set_default(c.probe_radius, 0.5);
  } else {
    throw ConfigError("group", "unknown group '" + group + "' (expected hw, su2 or su11)");
  }
  require_positive(c.trunc, 2, "trunc");
  require_positive(c.radius, "radius");
  require_positive(c.nr, 2, "nr");
  require_positive(c.nphi, 4, "nphi");
  require_positive(c.levels, 2, "levels");
  require_positive(c.s_max, "s_max");
  require_positive(c.ns, 2, "ns");
  require_positive(c.ntheta, 2, "ntheta");
  require_positive(c.interior, 1, "interior");
  require_positive(c.probes, 0, "probes");
  require_positive(c.probe_radius, "probe_radius");
}

}  // namespace

RunConfig resolve_defaults(const RunConfig& in) {
  RunConfig c = in;
  set_default(c.workers, 1);
  require_positive(c.workers, 1, "workers");
  require_positive(c.tolerance, "tolerance");
  require_positive(c.probe_tolerance, "probe_tolerance");

  if (c.command == "verify") {
    const std::string& target = require(c.target, "target");
    if (target == "hw" || target == "su2" || target == "su11") {
      if (c.group && *c.group != target) throw ConfigError("group", "conflicts with target '" + target + "'");
      c.group = target;
    } else if (target == "cross" || target == "density") {
      set_default(c.group, std::string("hw"));
    } else {
      throw ConfigError("target", "unknown verify target '" + target + "'");
    }
    apply_group_defaults(c, *c.group);
    const std::string& g = *c.group;
    if (target == "hw") set_default(c.fiducial, std::string("fock:0"));
    if (target == "su2") set_default(c.m, -*c.spin);
    if (target == "su11") set_default(c.n, 0);
    if (target == "cross") {
      set_default(c.fiducial, std::string("fock:0"));
      set_default(c.fiducial2, std::string("fock:1"));
    }
    if (target == "density") require(c.rho0, "rho0");
    set_default(c.tolerance, target == "density" && g == "hw" ? 1e-5 : default_tolerance(g));
    set_default(c.probes, 0);
    set_default(c.seed, std::uint64_t{1});
    set_default(c.probe_tolerance, *c.tolerance);
    if (c.n && *c.n < 0) throw ConfigError("n", "must be nonnegative");
    const Group g_default = *c.group == "hw"    ? Group{HWGroup{*c.trunc}}
                            : *c.group == "su2" ? Group{SU2Group{Spin::from_value(*c.spin)}}
                                                : Group{SU11Group{*c.levels}};
    set_default(c.interior, default_interior(g_default));
  } else if (c.command == "identity") {
    const std::string& target = require(c.target, "target");
    if (target != "jacobi") throw ConfigError("target", "unknown identity '" + target + "'");
    set_default(c.n, 0);
    set_default(c.p, *c.n);
    if (*c.n < 0) throw ConfigError("n", "must be nonnegative");
    if (*c.p < *c.n) throw ConfigError("p", "must be at least n");
    set_default(c.tolerance, 1e-8);
  } else if (c.command == "qfunc") {
    set_default(c.group, std::string("hw"));
    apply_group_defaults(c, *c.group);
    set_default(c.rho, std::string("fock:0"));
    set_default(c.rho0, std::string("fock:0"));
    set_default(c.extent, *c.group == "su11" ? 0.95 : 3.0);
    set_default(c.npts, 21);
    require_positive(c.npts, 1, "npts");
    require_positive(c.extent, "extent");
    set_default(c.tolerance, *c.group == "su11" ? 1e-4 : 1e-5);
  } else if (c.command == "measure-check" || c.command == "compose-check") {
    if (c.group) (void)parse_group_kind(*c.group);
    const bool measure = c.command == "measure-check";
    set_default(c.pairs, measure ? 100 : 50);
    require_positive(c.pairs, 1, "pairs");
    set_default(c.seed, std::uint64_t{measure ? 7u : 2024u});
  } else if (c.command.empty()) {
    throw ConfigError("command", "is required");
  } else {
    throw ConfigError("command", "unknown command '" + c.command + "'");
  }
  return c;
}

// ------------------------------------------------------------- execution

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

Group make_group(const RunConfig& c) {
  const std::string& g = *c.group;
  if (g == "hw") return HWGroup{*c.trunc};
  if (g == "su2") return SU2Group{Spin::from_value(*c.spin)};
  return SU11Group{*c.levels};
}

MeasureGrid make_grid(const RunConfig& c) {
  const std::string& g = *c.group;
  if (g == "hw") return plane_grid(*c.radius, *c.nr, *c.nphi);
  if (g == "su2") return sphere_grid(*c.ntheta, *c.nphi);
  return disc_grid(*c.s_max, *c.ns, *c.nphi);
}

// Basis vector in the group's own labelling: Fock level for hw, m for su2,
// the odd level 2n+1 for su11 (index n).
FockVector group_fiducial(const RunConfig& c, const Group& g, const std::string& spec, const char* field) {
  FockVector f = parse_fiducial(spec, field);
  if (f.size() > rep_dim(g)) {
    throw ConfigError(field, "needs " + std::to_string(f.size()) + " levels but the representation has " +
                                 std::to_string(rep_dim(g)));
  }
  (void)c;
  return embed(f, rep_dim(g));
}

ComplexMatrix group_density(const Group& g, const std::string& spec, const char* field) {
  ComplexMatrix rho = parse_density(spec, field);
  if (rho.rows() > rep_dim(g)) {
    throw ConfigError(field, "needs " + std::to_string(rho.rows()) + " levels but the representation has " +
                                 std::to_string(rep_dim(g)));
  }
  return embed(rho, rep_dim(g));
}

std::vector<GroupPoint> sample_probes(const RunConfig& c, const Group& g) {
  std::mt19937_64 rng(*c.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<GroupPoint> pts;
  for (int i = 0; i < *c.probes; ++i) {
    const double r = *c.probe_radius * std::sqrt(u(rng));
    pts.push_back({std::polar(r, 2.0 * kPi * u(rng)), group_chart(g)});
  }
  return pts;
}

json grid_json(const GridMeta& m, std::size_t nodes) {
  return {{"kind", std::string(to_string(m.kind))},
          {"radial_cutoff", m.radial_cutoff},
          {"n_radial", m.n_radial},
          {"n_phi", m.n_phi},
          {"nodes", nodes}};
}

json base_report(const RunConfig& c) {
  json r;
  r["command"] = c.command;
  r["target"] = opt_json(c.target);
  r["version"] = kToolVersion;
  r["config"] = c;
  r["measured_constant"] = nullptr;
  r["paper_constant"] = nullptr;
  r["max_dev"] = nullptr;
  r["frob_dev"] = nullptr;
  r["probe_samples"] = json::array();
  r["warnings"] = json::array();
  return r;
}

bool run_verify(const RunConfig& c, json& r) {
  const Group g = make_group(c);
  const MeasureGrid grid = make_grid(c);
  const std::string& target = *c.target;

  WeightOperator w = [&] {
    if (target == "hw") return WeightOperator::pure(group_fiducial(c, g, *c.fiducial, "fiducial"));
    if (target == "su2") {
      const SpinRep rep = spin_ops(std::get<SU2Group>(g).spin);
      int idx = 0;
      try {
        idx = rep.index_of(*c.m);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("m", e.what());
      }
      return WeightOperator::pure(fock_state(rep.dim, idx));
    }
    if (target == "su11") {
      if (*c.n >= rep_dim(g)) throw ConfigError("n", "fiducial level exceeds the retained levels");
      return WeightOperator::pure(fock_state(rep_dim(g), *c.n));
    }
    if (target == "cross") {
      return WeightOperator::cross(group_fiducial(c, g, *c.fiducial, "fiducial"),
                                   group_fiducial(c, g, *c.fiducial2, "fiducial2"));
    }
    try {
      return WeightOperator::density(group_density(g, *c.rho0, "rho0"));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError("rho0", e.what());
    }
  }();

  if (c.interior && *c.interior > rep_dim(g)) throw ConfigError("interior", "exceeds the representation dimension");
  const ResolutionReport rep = assemble_resolution(g, w, grid, {c.interior.value_or(0), *c.workers});

  const bool calibrate = *c.group == "su2";
  const double deviation = calibrate ? rep.calibrated_max_dev : rep.max_dev;
  bool pass = deviation <= *c.tolerance;

  if (*c.probes > 0) {
    const auto pts = sample_probes(c, g);
    const std::optional<double> constant = calibrate ? rep.measured_constant : std::nullopt;
    const auto values = diagonal_probe(g, w, grid, pts, constant, *c.workers);
    const cplx expected = w.target_scale();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      r["probe_samples"].push_back({{"point", complex_json(pts[i].value)}, {"value", complex_json(values[i])}});
      pass = pass && std::abs(values[i] - expected) <= *c.probe_tolerance;
    }
  }

  r["group"] = rep.group;
  r["weight_kind"] = std::string(to_string(rep.kind));
  r["interior"] = rep.interior;
  r["target_scale"] = complex_json(w.target_scale());
  r["measured_constant"] = opt_json(rep.measured_constant);
  r["paper_constant"] = rep.paper_constant;
  r["constant_ratio"] = opt_json(rep.constant_ratio);
  r["max_dev"] = rep.max_dev;
  r["frob_dev"] = rep.frob_dev;
  r["calibrated_max_dev"] = rep.calibrated_max_dev;
  r["calibrated_frob_dev"] = rep.calibrated_frob_dev;
  r["asserted_deviation"] = calibrate ? "calibrated_max_dev" : "max_dev";
  r["cartan_residual"] = rep.cartan_residual;
  r["tail_estimate"] = rep.tail_estimate;
  r["grid"] = grid_json(rep.grid_meta, rep.grid_nodes);
  for (const auto& msg : rep.warnings) r["warnings"].push_back(msg);
  return pass;
}

bool run_identity(const RunConfig& c, json& r) {
  const double value = jacobi_identity_lhs(*c.n, *c.p);
  r["value"] = value;
  r["max_dev"] = std::abs(value - 1.0);
  return std::abs(value - 1.0) <= *c.tolerance;
}

bool run_qfunc(const RunConfig& c, json& r) {
  const Group g = make_group(c);
  const MeasureGrid grid = make_grid(c);
  const ComplexMatrix rho = group_density(g, *c.rho, "rho");
  const ComplexMatrix rho0 = group_density(g, *c.rho0, "rho0");
  try {
    (void)WeightOperator::density(rho);
    (void)WeightOperator::density(rho0);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("rho", e.what());
  }

  std::vector<GroupPoint> pts;
  const int npts = *c.npts;
  for (int i = 0; i < npts; ++i) {
    for (int j = 0; j < npts; ++j) {
      const double step = npts > 1 ? 2.0 * *c.extent / (npts - 1) : 0.0;
      const cplx z(npts > 1 ? -*c.extent + i * step : 0.0, npts > 1 ? -*c.extent + j * step : 0.0);
      if (*c.group == "su11" && std::abs(z) >= 1.0) continue;
      pts.push_back({z, group_chart(g)});
    }
  }
  const QGrid q = q_function(rho, rho0, pts, g, *c.workers);
  const QNormalization norm = q_normalization(rho, rho0, grid, g, std::nullopt, *c.workers);

  json points = json::array();
  json values = json::array();
  double min_value = 0.0;
  for (std::size_t i = 0; i < q.points.size(); ++i) {
    points.push_back(complex_json(q.points[i].value));
    values.push_back(q.values[i]);
    min_value = std::min(min_value, q.values[i]);
  }
  r["group"] = q.group;
  r["points"] = points;
  r["values"] = values;
  r["rho_hash"] = q.rho_hash;
  r["rho0_hash"] = q.rho0_hash;
  r["normalization"] = norm.value;
  r["measured_constant"] = norm.constant;
  r["paper_constant"] = paper_constant(g);
  r["max_dev"] = std::abs(norm.value - 1.0);
  r["grid"] = grid_json(grid.meta, grid.size());
  for (const auto& msg : grid.meta.warnings) r["warnings"].push_back(msg);
  for (const auto& msg : norm.warnings) r["warnings"].push_back(msg);
  return std::abs(norm.value - 1.0) <= *c.tolerance && min_value >= -kQImagTol;
}

std::vector<GroupKind> groups_for(const RunConfig& c, bool include_hw) {
  if (c.group) return {parse_group_kind(*c.group)};
  if (include_hw) return {GroupKind::HW, GroupKind::SU2, GroupKind::SU11};
  return {GroupKind::SU2, GroupKind::SU11};
}

double compose_tolerance(GroupKind g) {
  switch (g) {
    case GroupKind::HW: return 1e-9;
    case GroupKind::SU2: return 1e-10;
    case GroupKind::SU11: return 1e-8;
  }
  return 0.0;
}

bool run_compose(const RunConfig& c, json& r) {
  CompositionCheckParams params;
  params.pairs = *c.pairs;
  params.seed = *c.seed;
  bool pass = true;
  double worst = 0.0;
  json results = json::array();
  for (GroupKind g : groups_for(c, true)) {
    const CompositionCheck chk = composition_check(g, params);
    const double tol = c.tolerance.value_or(compose_tolerance(g));
    const bool ok = chk.max_residual <= tol;
    pass = pass && ok;
    worst = std::max(worst, chk.max_residual);
    json item = {{"group", to_string(g)},
                 {"pairs", chk.pairs},
                 {"interior", chk.interior},
                 {"max_residual", chk.max_residual},
                 {"tolerance", tol},
                 {"pass", ok}};
    if (chk.unconjugated_residual) item["unconjugated_phase_residual"] = *chk.unconjugated_residual;
    results.push_back(item);
  }
  r["results"] = results;
  r["max_dev"] = worst;
  return pass;
}

bool run_measure(const RunConfig& c, json& r) {
  bool pass = true;
  double worst = 0.0;
  const double tol = c.tolerance.value_or(1e-10);
  json results = json::array();
  for (GroupKind g : groups_for(c, false)) {
    const MeasureCheck chk = measure_invariance_check(g, *c.pairs, *c.seed);
    const bool ok = chk.max_relative_residual <= tol;
    pass = pass && ok;
    worst = std::max(worst, chk.max_relative_residual);
    results.push_back({{"group", to_string(g)},
                       {"pairs", chk.pairs},
                       {"max_relative_residual", chk.max_relative_residual},
                       {"tolerance", tol},
                       {"pass", ok}});
  }
  r["results"] = results;
  r["max_dev"] = worst;
  return pass;
}

}  // namespace

ExecResult execute(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ExecResult out;
  try {
    const RunConfig c = resolve_defaults(config);
    json r = base_report(c);
    bool pass = false;
    if (c.command == "verify") {
      pass = run_verify(c, r);
    } else if (c.command == "identity") {
      pass = run_identity(c, r);
    } else if (c.command == "qfunc") {
      pass = run_qfunc(c, r);
    } else if (c.command == "compose-check") {
      pass = run_compose(c, r);
    } else {
      pass = run_measure(c, r);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r["pass"] = pass;
    r["timings"] = {{"total_seconds", seconds}};
    out.status = pass ? 0 : 1;
    out.report = std::move(r);
  } catch (const ConfigError& e) {
    out.status = 2;
    out.diagnostic = e.what();
  } catch (const std::invalid_argument& e) {
    out.status = 2;
    out.diagnostic = std::string("invalid input: ") + e.what();
  } catch (const std::domain_error& e) {
    out.status = 2;
    out.diagnostic = std::string("out of domain: ") + e.what();
  }
  return out;
}

json strip_timings(json report) {
  report.erase("timings");
  return report;
}

}  // namespace fcoh
