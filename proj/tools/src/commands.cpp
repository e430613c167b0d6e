#include "dualhelm_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "dualhelm/phase.hpp"
#include "json.hpp"

namespace dualhelm::cli {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string eps_string(double mu, double nu) { return mu == nu ? fmt(mu) : fmt(mu) + ";" + fmt(nu); }

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
}

json record_json(const GroundStateRecord& r) {
  json restarts = json::array();
  for (const auto& q : r.restarts)
    restarts.push_back({{"seed_kind", q.seed_kind},
                        {"admissible", q.admissible},
                        {"level", q.admissible ? json(q.level) : json(nullptr)},
                        {"classification", to_string(q.classification)},
                        {"grad_norm", q.admissible ? json(q.grad_norm) : json(nullptr)},
                        {"iterations", q.iterations},
                        {"converged", q.converged}});
  return {{"level", r.level},
          {"classification", to_string(r.classification)},
          {"component_norms", {r.component_norms.first, r.component_norms.second}},
          {"fixed_point_residual", {r.fixed_point_residual.first, r.fixed_point_residual.second}},
          {"critical_scale", r.critical_scale},
          {"grad_norm", r.grad_norm},
          {"iterations", r.iterations},
          {"restarts_used", r.restarts_used},
          {"best_restart", r.best_restart},
          {"converged", r.converged},
          {"epsilon_used", {{"mu", r.epsilon_mu}, {"nu", r.epsilon_nu}}},
          {"restarts", restarts}};
}

std::string history_csv(const GroundStateRecord& r, const std::string& hash) {
  std::string s = "# config_hash=" + hash + ", epsilon=" + eps_string(r.epsilon_mu, r.epsilon_nu) + "\n";
  s += "iteration,level,grad_norm,step\n";
  for (const auto& h : r.history)
    s += std::to_string(h.iteration) + "," + fmt(h.level) + "," + fmt(h.grad_norm) + "," + fmt(h.step) + "\n";
  return s;
}

void write_record(const GroundStateRecord& r, const RunConfig& cfg, const std::string& name, bool scalar) {
  const std::string hash = config_hash(cfg);
  const auto& dir = cfg.output_dir;
  ensure_dir(dir);
  json doc = record_json(r);
  doc["config_hash"] = hash;
  doc["subcommand"] = to_string(cfg.subcommand);
  doc["config"] = json::parse(canonical_dump(cfg));
  write_text(dir / (name + ".json"), doc.dump(2) + "\n");
  write_text(dir / "history.csv", history_csv(r, hash));
  std::vector<std::pair<std::string, std::string>> meta{{"config_hash", hash},
                                                        {"epsilon", eps_string(r.epsilon_mu, r.epsilon_nu)}};
  if (scalar) {
    write_snapshot(r.pair.first, dir / "wbar", meta);
    write_snapshot(r.primal.first, dir / "w", meta);
  } else {
    write_snapshot(r.pair.first, dir / "ubar", meta);
    write_snapshot(r.pair.second, dir / "vbar", meta);
    write_snapshot(r.primal.first, dir / "u", meta);
    write_snapshot(r.primal.second, dir / "v", meta);
  }
}

void log_record(std::ostream& log, const GroundStateRecord& r) {
  log << "level " << fmt(r.level) << "\n"
      << "classification " << to_string(r.classification) << "\n"
      << "converged " << (r.converged ? "yes" : "no") << " after " << r.iterations << " iterations (grad "
      << fmt(r.grad_norm) << ")\n"
      << "fixed-point residual " << fmt(r.fixed_point_residual.first) << " " << fmt(r.fixed_point_residual.second)
      << "\n"
      << "epsilon " << eps_string(r.epsilon_mu, r.epsilon_nu) << "\n";
}

}  // namespace

int run_solve(const RunConfig& cfg, std::ostream& log) {
  Grid g = build_grid(cfg.problem.N, cfg.n_per_dim, cfg.box_length);
  auto coeffs = sample_coefficients(cfg.a.make(), cfg.b.make(), g, cfg.problem.p);
  DualFunctional ctx(cfg.problem, coeffs, cfg.solver.epsilon_mu, cfg.solver.epsilon_nu);
  GroundStateRecord r = minimize_F(ctx, cfg.solver);
  write_record(r, cfg, "record", false);
  log_record(log, r);
  return r.converged ? kOk : kNotConverged;
}

int run_scalar(const RunConfig& cfg, std::ostream& log) {
  Grid g = build_grid(cfg.problem.N, cfg.n_per_dim, cfg.box_length);
  auto coeffs = sample_coefficients(cfg.a.make(), cfg.b.make(), g, cfg.problem.p);
  GroundStateRecord r = solve_scalar(coeffs, cfg.problem.mu, cfg.problem, cfg.solver);
  write_record(r, cfg, "scalar_record", true);
  log_record(log, r);
  return r.converged ? kOk : kNotConverged;
}

int run_phase(const RunConfig& cfg, std::ostream& log) {
  SweepOptions so;
  so.N = cfg.problem.N;
  so.n_per_dim = cfg.n_per_dim;
  so.box_length = cfg.box_length;
  so.a = cfg.a.value;
  so.nu = cfg.problem.nu;
  so.ratios = cfg.phase.ratios;
  so.boundary_band = cfg.phase.boundary_band;
  so.level_tol = cfg.phase.level_tol;
  so.threads = cfg.threads;
  so.solver = cfg.solver;
  auto t0 = std::chrono::steady_clock::now();
  auto cells = sweep(cfg.phase.p_values, cfg.phase.b_values, so);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string hash = config_hash(cfg);
  ensure_dir(cfg.output_dir);
  write_phase_csv(cells, cfg.output_dir / "phase.csv", hash);
  write_phase_manifest(cells, so, cfg.output_dir / "manifest.json", hash, wall);
  auto s = summarize(cells);
  for (const auto& c : cells) {
    log << "p=" << fmt(c.p) << " b=" << fmt(c.b) << " ratio=" << fmt(c.ratio) << ": ";
    if (!c.error.empty()) {
      log << "FAILED " << c.error << "\n";
      continue;
    }
    log << "predicted " << to_string(c.predicted) << ", observed " << to_string(c.observed) << " ("
        << to_string(c.comparison) << ", margin " << fmt(c.margin) << ")" << (c.mismatch ? " MISMATCH" : "") << "\n";
  }
  log << s.cells << " cells, " << s.boundary << " boundary, " << s.mismatches << " mismatches, " << s.inconsistent
      << " inconsistent, " << s.failed << " failed; agreement " << fmt(s.agreement) << "\n";
  return s.inconsistent > 0 ? kInconsistent : kOk;
}

int run_verify(const RunConfig& cfg, std::ostream& log) {
  auto results = verify_suite(cfg.fault, cfg.seed);
  bool all = true;
  json props = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    props.push_back({{"section", r.section},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"measured", r.measured},
                     {"tolerance", r.tolerance},
                     {"detail", r.detail}});
    log << (r.passed ? "PASS " : "FAIL ") << r.section << "." << r.name << " measured=" << fmt(r.measured)
        << " tolerance=" << fmt(r.tolerance) << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
  }
  ensure_dir(cfg.output_dir);
  json doc = {{"config_hash", config_hash(cfg)}, {"fault", cfg.fault}, {"all_passed", all}, {"properties", props}};
  write_text(cfg.output_dir / "verify.json", doc.dump(2) + "\n");
  return all ? kOk : kInconsistent;
}

int run_kernel_check(const RunConfig& cfg, std::ostream& log) {
  Grid g = build_grid(cfg.problem.N, cfg.n_per_dim, cfg.box_length);
  json freqs = json::array();
  bool guard_failed = false;
  std::string guard_msg;
  for (int k = 0; k < 2; ++k) {
    double lambda = k == 0 ? cfg.problem.mu : cfg.problem.nu;
    if (k == 1 && lambda == cfg.problem.mu) break;
    double eps_cfg = k == 0 ? cfg.solver.epsilon_mu : cfg.solver.epsilon_nu;
    ShellReport sr = shell_report(g, lambda);
    double eps = eps_cfg < 0.0 ? default_epsilon(g, lambda) : eps_cfg;
    try {
      check_shell_guard(g, {cfg.problem.N, lambda, eps});
    } catch (const InvalidArgument& e) {
      guard_failed = true;
      guard_msg = e.what();
    }
    freqs.push_back({{"lambda", lambda},
                     {"min_gap", sr.min_gap},
                     {"guard", sr.guard},
                     {"guard_ok", sr.guard_ok},
                     {"suggested_box_length", sr.suggested_box_length},
                     {"default_epsilon", default_epsilon(g, lambda)},
                     {"epsilon_used", eps}});
    log << "lambda " << fmt(lambda) << ": min | |xi|^2 - lambda | = " << fmt(sr.min_gap) << ", default epsilon "
        << fmt(default_epsilon(g, lambda)) << ", epsilon used " << fmt(eps) << ", suggested box length "
        << fmt(sr.suggested_box_length) << "\n";
  }
  // closed form against the Hankel evaluation, relative to the envelope 1/(4 pi r)
  double worst = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    double r = 10.0 * i / 1000.0;
    double psi = psi_realspace({cfg.problem.N, cfg.problem.mu, 0.0}, r);
    double ref = phi_hankel(cfg.problem.N, cfg.problem.mu, r).real();
    worst = std::max(worst, std::abs(psi - ref) * 4.0 * std::numbers::pi * r);
  }
  log << "closed form vs Hankel: max relative deviation " << fmt(worst) << "\n";
  ensure_dir(cfg.output_dir);
  json doc = {{"config_hash", config_hash(cfg)},
              {"grid", {{"N", g.dim()}, {"n_per_dim", g.n_per_dim()}, {"box_length", g.box_length()}}},
              {"frequencies", freqs},
              {"closed_form_max_deviation", worst}};
  write_text(cfg.output_dir / "kernel_check.json", doc.dump(2) + "\n");
  if (guard_failed) {
    log << guard_msg << "\n";
    return kConfigError;
  }
  return worst <= 1e-10 ? kOk : kInconsistent;
}

int run(const RunConfig& cfg, std::ostream& log) {
  try {
    validate(cfg);
    switch (cfg.subcommand) {
      case Subcommand::solve: return run_solve(cfg, log);
      case Subcommand::scalar: return run_scalar(cfg, log);
      case Subcommand::phase: return run_phase(cfg, log);
      case Subcommand::verify: return run_verify(cfg, log);
      case Subcommand::kernel_check: return run_kernel_check(cfg, log);
    }
  } catch (const InvalidArgument& e) {
    log << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const NumericalError& e) {
    log << "numerical failure: " << e.what() << "\n";
    return kNotConverged;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace dualhelm::cli
