#include "dualhelm_cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dualhelm::cli {

using nlohmann::json;

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::solve: return "solve";
    case Subcommand::scalar: return "scalar";
    case Subcommand::phase: return "phase";
    case Subcommand::verify: return "verify";
    case Subcommand::kernel_check: return "kernel-check";
  }
  return "?";
}

Subcommand parse_subcommand(const std::string& name) {
  for (Subcommand s : {Subcommand::solve, Subcommand::scalar, Subcommand::phase, Subcommand::verify,
                       Subcommand::kernel_check})
    if (to_string(s) == name) return s;
  throw ConfigError("unknown subcommand '" + name + "' (expected solve, scalar, phase, verify, kernel-check)");
}

CoefficientProfile CoefficientConfig::make() const {
  if (profile == "constant") return CoefficientProfile(value);
  const double mean = value, amp = amplitude;
  const int ax = axis;
  if (profile == "cosine")
    return CoefficientProfile(
        [mean, amp, ax](std::span<const double> x) { return mean + amp * std::cos(2 * std::numbers::pi * x[ax]); },
        "cosine");
  if (profile == "product")
    return CoefficientProfile(
        [mean, amp](std::span<const double> x) {
          double prod = 1.0;
          for (double xi : x) prod *= std::cos(2 * std::numbers::pi * xi);
          return mean + amp * prod;
        },
        "product");
  throw ConfigError("unknown coefficient profile '" + profile + "' (expected constant, cosine, product)");
}

namespace {

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key())) throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

double get_number(const json& obj, const char* key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  return v.get<double>();
}

long long get_integer(const json& obj, const char* key, const std::string& where, long long fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(where + "." + key + " must be an integer");
  return v.get<long long>();
}

std::string get_string(const json& obj, const char* key, const std::string& where, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

std::vector<double> get_list(const json& obj, const char* key, const std::string& where,
                             const std::vector<double>& fallback, bool allow_bstar) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_array()) throw ConfigError(where + "." + key + " must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (e.is_number()) out.push_back(e.get<double>());
    else if (allow_bstar && e.is_string() && e.get<std::string>() == "bstar")
      out.push_back(std::numeric_limits<double>::quiet_NaN());
    else throw ConfigError(where + "." + key + " entries must be numbers" + (allow_bstar ? " or \"bstar\"" : ""));
  }
  return out;
}

CoefficientConfig parse_coefficient(const json& v, const std::string& where) {
  CoefficientConfig c;
  if (v.is_number()) {
    c.value = v.get<double>();
    return c;
  }
  check_keys(v, where, {"profile", "mean", "amplitude", "axis"});
  c.profile = get_string(v, "profile", where, "constant");
  c.value = get_number(v, "mean", where, 1.0);
  c.amplitude = get_number(v, "amplitude", where, 0.0);
  c.axis = static_cast<int>(get_integer(v, "axis", where, 0));
  c.make();  // rejects unknown names
  return c;
}

json dump_coefficient(const CoefficientConfig& c) {
  if (c.profile == "constant") return c.value;
  return {{"profile", c.profile}, {"mean", c.value}, {"amplitude", c.amplitude}, {"axis", c.axis}};
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(doc, "config",
             {"subcommand", "problem", "grid", "coefficients", "solver", "phase", "verify", "output_dir", "seed",
              "threads"});
  RunConfig c;
  if (doc.contains("subcommand")) c.subcommand = parse_subcommand(get_string(doc, "subcommand", "config", ""));
  if (doc.contains("problem")) {
    const json& p = doc["problem"];
    check_keys(p, "problem", {"N", "p", "mu", "nu", "validity_mode"});
    c.problem.N = static_cast<int>(get_integer(p, "N", "problem", c.problem.N));
    c.problem.p = get_number(p, "p", "problem", c.problem.p);
    c.problem.mu = get_number(p, "mu", "problem", c.problem.mu);
    c.problem.nu = get_number(p, "nu", "problem", c.problem.nu);
    if (p.contains("validity_mode")) {
      try {
        c.problem.validity_mode = parse_validity_mode(get_string(p, "validity_mode", "problem", "strict"));
      } catch (const ConfigError&) {
        throw;
      } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    check_keys(g, "grid", {"n_per_dim", "box_length"});
    c.n_per_dim = static_cast<int>(get_integer(g, "n_per_dim", "grid", c.n_per_dim));
    c.box_length = get_number(g, "box_length", "grid", c.box_length);
  }
  if (doc.contains("coefficients")) {
    const json& k = doc["coefficients"];
    check_keys(k, "coefficients", {"a", "b"});
    if (k.contains("a")) c.a = parse_coefficient(k["a"], "coefficients.a");
    if (k.contains("b")) c.b = parse_coefficient(k["b"], "coefficients.b");
  }
  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    check_keys(s, "solver",
               {"max_iters", "grad_tol", "restarts", "armijo_c1", "backtrack", "tol_ratio", "eta", "ball_radius",
                "epsilon_mu", "epsilon_nu"});
    auto& o = c.solver;
    o.max_iters = static_cast<int>(get_integer(s, "max_iters", "solver", o.max_iters));
    o.grad_tol = get_number(s, "grad_tol", "solver", o.grad_tol);
    o.restarts = static_cast<int>(get_integer(s, "restarts", "solver", o.restarts));
    o.armijo_c1 = get_number(s, "armijo_c1", "solver", o.armijo_c1);
    o.backtrack = get_number(s, "backtrack", "solver", o.backtrack);
    o.tol_ratio = get_number(s, "tol_ratio", "solver", o.tol_ratio);
    o.eta = get_number(s, "eta", "solver", o.eta);
    o.ball_radius = get_number(s, "ball_radius", "solver", o.ball_radius);
    o.epsilon_mu = get_number(s, "epsilon_mu", "solver", o.epsilon_mu);
    o.epsilon_nu = get_number(s, "epsilon_nu", "solver", o.epsilon_nu);
  }
  if (doc.contains("phase")) {
    const json& ph = doc["phase"];
    check_keys(ph, "phase", {"p_values", "b_values", "ratios", "boundary_band", "level_tol"});
    c.phase.p_values = get_list(ph, "p_values", "phase", c.phase.p_values, false);
    c.phase.b_values = get_list(ph, "b_values", "phase", c.phase.b_values, true);
    c.phase.ratios = get_list(ph, "ratios", "phase", c.phase.ratios, false);
    c.phase.boundary_band = get_number(ph, "boundary_band", "phase", c.phase.boundary_band);
    c.phase.level_tol = get_number(ph, "level_tol", "phase", c.phase.level_tol);
  } else {
    c.phase.b_values = {0.5, std::numeric_limits<double>::quiet_NaN(), 3.5};
  }
  if (doc.contains("verify")) {
    const json& v = doc["verify"];
    check_keys(v, "verify", {"fault"});
    c.fault = get_string(v, "fault", "verify", c.fault);
  }
  c.output_dir = get_string(doc, "output_dir", "config", c.output_dir.string());
  long long seed = get_integer(doc, "seed", "config", 1);
  if (seed < 0) throw ConfigError("seed must be >= 0");
  c.seed = static_cast<std::uint64_t>(seed);
  c.threads = static_cast<int>(get_integer(doc, "threads", "config", c.threads));
  c.solver.seed = c.seed;
  c.solver.threads = c.threads;
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_overrides(RunConfig& cfg, const Overrides& o) {
  if (o.subcommand) cfg.subcommand = parse_subcommand(*o.subcommand);
  if (o.output_dir) cfg.output_dir = *o.output_dir;
  if (o.seed) cfg.seed = *o.seed;
  if (o.threads) cfg.threads = *o.threads;
  if (o.max_iters) cfg.solver.max_iters = *o.max_iters;
  cfg.solver.seed = cfg.seed;
  cfg.solver.threads = cfg.threads;
}

void validate(const RunConfig& cfg) {
  try {
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
    cfg.solver.validate();
    Grid g = build_grid(cfg.problem.N, cfg.n_per_dim, cfg.box_length);
    if (cfg.fault != "none" && cfg.fault != "scale_h")
      throw ConfigError("verify.fault must be \"none\" or \"scale_h\"");
    switch (cfg.subcommand) {
      case Subcommand::solve:
      case Subcommand::scalar:
      case Subcommand::kernel_check:
        cfg.problem.validate();
        sample_coefficients(cfg.a.make(), cfg.b.make(), g, cfg.problem.p);
        break;
      case Subcommand::phase:
        if (cfg.phase.p_values.empty()) throw ConfigError("phase.p_values is empty");
        if (cfg.phase.b_values.empty()) throw ConfigError("phase.b_values is empty");
        if (cfg.phase.ratios.empty()) throw ConfigError("phase.ratios is empty");
        if (cfg.a.profile != "constant") throw ConfigError("phase sweeps need a constant coefficient a");
        if (!(cfg.problem.nu > 0.0)) throw ConfigError("problem.nu must be > 0");
        break;
      case Subcommand::verify:
        break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

std::string canonical_dump(const RunConfig& c) {
  json b_values = json::array();
  for (double b : c.phase.b_values) {
    if (std::isnan(b)) b_values.push_back("bstar");
    else b_values.push_back(b);
  }
  const auto& o = c.solver;
  json doc = {
      {"subcommand", to_string(c.subcommand)},
      {"problem",
       {{"N", c.problem.N},
        {"p", c.problem.p},
        {"mu", c.problem.mu},
        {"nu", c.problem.nu},
        {"validity_mode", to_string(c.problem.validity_mode)}}},
      {"grid", {{"n_per_dim", c.n_per_dim}, {"box_length", c.box_length}}},
      {"coefficients", {{"a", dump_coefficient(c.a)}, {"b", dump_coefficient(c.b)}}},
      {"solver",
       {{"max_iters", o.max_iters},
        {"grad_tol", o.grad_tol},
        {"restarts", o.restarts},
        {"armijo_c1", o.armijo_c1},
        {"backtrack", o.backtrack},
        {"tol_ratio", o.tol_ratio},
        {"eta", o.eta},
        {"ball_radius", o.ball_radius},
        {"epsilon_mu", o.epsilon_mu},
        {"epsilon_nu", o.epsilon_nu}}},
      {"phase",
       {{"p_values", c.phase.p_values},
        {"b_values", b_values},
        {"ratios", c.phase.ratios},
        {"boundary_band", c.phase.boundary_band},
        {"level_tol", c.phase.level_tol}}},
      {"verify", {{"fault", c.fault}}},
      {"seed", c.seed},
      {"threads", c.threads},
  };
  return doc.dump();
}

std::string config_hash(const RunConfig& cfg) {
  // results do not depend on the thread count
  RunConfig c = cfg;
  c.threads = 1;
  c.solver.threads = 1;
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_dump(c)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dualhelm::cli
