#include "dualhelm/phase.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "dualhelm/error.hpp"
#include "dualhelm/legendre.hpp"
#include "json.hpp"

namespace dualhelm {

double threshold_bstar(double p) {
  if (!(p > 2.0)) throw InvalidArgument("threshold_bstar requires p > 2");
  return std::exp2(0.5 * (p - 2.0)) - 1.0;
}

double psi_eta(double eta, double p) {
  if (!(eta >= 0.0)) throw InvalidArgument("psi_eta requires eta >= 0");
  if (!(p >= 4.0)) throw InvalidArgument("psi_eta requires p >= 4");
  double c = std::exp2(0.5 * p) - 2.0;
  double num = 0.5 * std::log1p(eta * eta);
  double den = std::log1p(c * std::pow(eta, 0.5 * p) + std::pow(eta, p)) / p;
  return std::exp(num - den);
}

double psi_grid_min(double p, int n, double lo, double hi) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw InvalidArgument("psi_grid_min: bad grid");
  double m = std::numeric_limits<double>::infinity();
  double l0 = std::log(lo), l1 = std::log(hi);
  for (int k = 0; k < n; ++k) m = std::min(m, psi_eta(std::exp(l0 + (l1 - l0) * k / (n - 1)), p));
  return m;
}

namespace {

// eta psi'/psi = eta^{p/2+1} (c sinh x - 2 sinh((p-2)x/2)) / positive, x = log eta
double psi_log_slope(double x, double p) {
  double c = std::exp2(0.5 * p) - 2.0;
  return c * std::sinh(x) - 2.0 * std::sinh(0.5 * (p - 2.0) * x);
}

}  // namespace

PsiCriticalPoints psi_critical_points(double p) {
  if (!(p > 4.0)) throw InvalidArgument("psi_critical_points requires p > 4");
  const double lo = std::log(1e-8), hi = std::log(1.1e8);
  const int n = 8000;
  std::vector<double> roots;
  double xa = lo, sa = psi_log_slope(xa, p);
  for (int k = 1; k <= n; ++k) {
    double xb = lo + (hi - lo) * k / n;
    double sb = psi_log_slope(xb, p);
    if (sb == 0.0) {
      roots.push_back(xb);
      ++k;
      xa = lo + (hi - lo) * k / n;
      sa = psi_log_slope(xa, p);
      continue;
    }
    if ((sa < 0.0) != (sb < 0.0)) {
      double l = xa, r = xb, sl = sa;
      for (int it = 0; it < 200 && r - l > 1e-15; ++it) {
        double m = 0.5 * (l + r);
        double sm = psi_log_slope(m, p);
        if (sm == 0.0) {
          l = r = m;
          break;
        }
        if ((sm < 0.0) == (sl < 0.0)) {
          l = m;
          sl = sm;
        } else {
          r = m;
        }
      }
      roots.push_back(0.5 * (l + r));
    }
    xa = xb;
    sa = sb;
  }
  if (roots.size() != 3)
    throw NumericalError("psi_critical_points: found " + std::to_string(roots.size()) +
                         " critical points, expected 3");
  PsiCriticalPoints out;
  out.eta1 = std::exp(roots[0]);
  out.one = std::abs(roots[1]) < 1e-12 ? 1.0 : std::exp(roots[1]);
  out.eta3 = std::exp(roots[2]);
  auto d2 = [p](double h) { return (psi_eta(1.0 + h, p) + psi_eta(1.0 - h, p) - 2.0 * psi_eta(1.0, p)) / (h * h); };
  const double h = 2e-3;
  out.psi_dd_one_fd = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
  double q = std::exp2(0.5 * p);
  out.psi_dd_one_closed = (q - p) / (2.0 * q);
  return out;
}

bool HplusBound::holds() const { return lhs >= rhs - 1e-10 * std::abs(rhs); }

HplusBound check_hplus_lower_bound(const Field& ubar, const Field& vbar, const CoefficientField& coeffs) {
  require_same_grid(ubar, vbar, "check_hplus_lower_bound");
  require_same_grid(ubar, coeffs.a, "check_hplus_lower_bound");
  const double p = coeffs.p;
  const double pd = p / (p - 1.0);
  HplusBound r;
  Field su(ubar.grid()), sv(ubar.grid());
  double sum = 0.0;
  for (std::size_t i = 0; i < ubar.size(); ++i) {
    sum += eval_h({coeffs.a[i], coeffs.b[i], p}, ubar[i], vbar[i]);
    double w = std::pow(coeffs.a[i], -1.0 / p);
    su[i] = w * ubar[i];
    sv[i] = w * vbar[i];
  }
  r.lhs = sum * ubar.grid().cell_volume();
  r.rhs = eval_h_pm(coeffs.b_plus, p, lp_norm(su, pd), lp_norm(sv, pd));
  return r;
}

std::string to_string(PhaseLabel l) {
  switch (l) {
    case PhaseLabel::semitrivial: return "semitrivial";
    case PhaseLabel::fully_nontrivial: return "fully_nontrivial";
    case PhaseLabel::boundary: return "boundary";
  }
  return "?";
}

PhaseLabel predicted_label(double p, double b, double band) {
  if (!(p > 2.0)) throw InvalidArgument("predicted_label requires p > 2");
  if (p < 4.0) return b > 0.0 ? PhaseLabel::fully_nontrivial : PhaseLabel::semitrivial;
  double bs = threshold_bstar(p);
  if (b == bs || std::abs(b - bs) < band * bs) return PhaseLabel::boundary;
  return b > bs ? PhaseLabel::fully_nontrivial : PhaseLabel::semitrivial;
}

std::string to_string(LevelComparison c) {
  switch (c) {
    case LevelComparison::below: return "below";
    case LevelComparison::equal: return "equal";
    case LevelComparison::inconsistent: return "inconsistent";
  }
  return "?";
}

LevelComparison compare_levels(double level_system, double level_scalar_mu, double level_scalar_nu, double tol) {
  if (!(level_system > 0.0) || !(level_scalar_mu > 0.0) || !(level_scalar_nu > 0.0))
    throw InvalidArgument("compare_levels requires positive levels");
  double m = std::min(level_scalar_mu, level_scalar_nu);
  if (level_system < m - tol) return LevelComparison::below;
  if (level_system > m + tol) return LevelComparison::inconsistent;
  return LevelComparison::equal;
}

void SweepOptions::validate() const {
  if (N != 2 && N != 3) throw InvalidArgument("sweep: N must be 2 or 3");
  if (!(box_length > 0.0)) throw InvalidArgument("sweep: box_length must be > 0");
  if (!(a > 0.0)) throw InvalidArgument("sweep: a must be > 0");
  if (!(nu > 0.0)) throw InvalidArgument("sweep: nu must be > 0");
  if (ratios.empty()) throw InvalidArgument("sweep: ratio list is empty");
  for (double r : ratios)
    if (!(r > 0.0)) throw InvalidArgument("sweep: ratios must be > 0");
  if (!(boundary_band >= 0.0)) throw InvalidArgument("sweep: boundary_band must be >= 0");
  if (!(level_tol > 0.0)) throw InvalidArgument("sweep: level_tol must be > 0");
  if (threads < 1) throw InvalidArgument("sweep: threads must be >= 1");
  solver.validate();
  build_grid(N, n_per_dim, box_length);
}

namespace {

std::uint64_t cell_seed(std::uint64_t base, double p, double b, double ratio) {
  std::uint64_t h = 1469598103934665603ULL ^ base;
  for (double v : {p, b, ratio}) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int k = 0; k < 8; ++k) {
      h ^= (bits >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

ValidityMode mode_for(int N, double p) {
  for (ValidityMode m : {ValidityMode::strict, ValidityMode::radial}) {
    try {
      ProblemSpec::create(N, p, 1.0, 1.0, m);
      return m;
    } catch (const InvalidArgument&) {
    }
  }
  return ValidityMode::override_checks;
}

void run_cell(PhaseCell& c, const SweepOptions& opts) {
  c.mu = c.ratio * c.ratio * opts.nu;
  c.nu = opts.nu;
  c.validity_mode = mode_for(opts.N, c.p);
  c.predicted = predicted_label(c.p, c.b, opts.boundary_band);
  c.seed = cell_seed(opts.solver.seed, c.p, c.b, c.ratio);
  try {
    auto spec = ProblemSpec::create(opts.N, c.p, c.mu, c.nu, c.validity_mode);
    Grid g = build_grid(opts.N, opts.n_per_dim, opts.box_length);
    auto coeffs = sample_coefficients(opts.a, c.b, g, c.p);
    SolverOptions so = opts.solver;
    so.seed = c.seed;
    so.threads = 1;
    DualFunctional ctx(spec, coeffs, so.epsilon_mu, so.epsilon_nu);
    so.epsilon_mu = ctx.kernel_mu().epsilon;
    so.epsilon_nu = ctx.kernel_nu().epsilon;
    GroundStateRecord smu = solve_scalar(coeffs, c.mu, spec, so);
    GroundStateRecord snu = c.mu == c.nu ? smu : solve_scalar(coeffs, c.nu, spec, so);
    GroundStateRecord sys = minimize_F(ctx, so, {&smu, &snu});

    c.level_scalar_mu = smu.level;
    c.level_scalar_nu = snu.level;
    c.level_scalar = std::min(smu.level, snu.level);
    c.level_system = sys.level;
    c.margin = c.level_scalar - c.level_system;
    c.norm_classification = sys.classification;
    c.comparison = compare_levels(sys.level, smu.level, snu.level, opts.level_tol * c.level_scalar);
    if (c.comparison == LevelComparison::below) c.observed = Classification::fully_nontrivial;
    else if (c.comparison == LevelComparison::equal) c.observed = Classification::semitrivial;
    else c.observed = sys.classification;
    if (c.predicted != PhaseLabel::boundary)
      c.mismatch = (c.predicted == PhaseLabel::fully_nontrivial) != (c.observed == Classification::fully_nontrivial);
    const double inf = std::numeric_limits<double>::infinity();
    c.best_semitrivial = inf;
    c.best_fully_nontrivial = inf;
    for (const auto& r : sys.restarts) {
      if (!r.admissible) continue;
      double& slot = r.classification == Classification::semitrivial ? c.best_semitrivial : c.best_fully_nontrivial;
      slot = std::min(slot, r.level);
    }
    c.residual_u = sys.fixed_point_residual.first;
    c.residual_v = sys.fixed_point_residual.second;
    c.residual_scalar = std::max(smu.fixed_point_residual.first, snu.fixed_point_residual.first);
    c.converged_system = sys.converged;
    c.converged_scalar = smu.converged && snu.converged;
    c.epsilon_mu = sys.epsilon_mu;
    c.epsilon_nu = sys.epsilon_nu;
  } catch (const std::exception& e) {
    c.error = e.what();
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string epsilon_list(const std::vector<PhaseCell>& cells) {
  std::vector<double> eps;
  for (const auto& c : cells) {
    if (!c.error.empty()) continue;
    for (double e : {c.epsilon_mu, c.epsilon_nu})
      if (std::find(eps.begin(), eps.end(), e) == eps.end()) eps.push_back(e);
  }
  std::string s;
  for (std::size_t i = 0; i < eps.size(); ++i) s += (i ? ";" : "") + fmt(eps[i]);
  return s.empty() ? "none" : s;
}

}  // namespace

std::vector<PhaseCell> sweep(const std::vector<double>& p_values, const std::vector<double>& b_values,
                             const SweepOptions& opts) {
  if (p_values.empty()) throw InvalidArgument("sweep: p list is empty");
  if (b_values.empty()) throw InvalidArgument("sweep: b list is empty");
  opts.validate();
  std::vector<PhaseCell> cells;
  for (double p : p_values)
    for (double b : b_values)
      for (double r : opts.ratios) {
        PhaseCell c;
        c.p = p;
        c.b = std::isnan(b) ? threshold_bstar(p) : b;
        c.ratio = r;
        cells.push_back(c);
      }
  const int nthreads = std::min<int>(opts.threads, static_cast<int>(cells.size()));
  if (nthreads <= 1) {
    for (auto& c : cells) run_cell(c, opts);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < cells.size(); k = next++) run_cell(cells[k], opts);
      });
    for (auto& th : pool) th.join();
  }
  return cells;
}

SweepSummary summarize(const std::vector<PhaseCell>& cells) {
  SweepSummary s;
  int judged = 0, agree = 0;
  for (const auto& c : cells) {
    ++s.cells;
    if (!c.error.empty()) {
      ++s.failed;
      continue;
    }
    if (c.comparison == LevelComparison::inconsistent) ++s.inconsistent;
    if (c.predicted == PhaseLabel::boundary) {
      ++s.boundary;
      continue;
    }
    ++judged;
    if (c.mismatch) ++s.mismatches;
    else ++agree;
  }
  s.agreement = judged ? static_cast<double>(agree) / judged : 1.0;
  return s;
}

std::string phase_csv(const std::vector<PhaseCell>& cells, const std::string& config_hash) {
  std::ostringstream os;
  os << "# config_hash=" << config_hash << ", epsilon=" << epsilon_list(cells) << "\n";
  os << "p,b,ratio,mu,nu,validity_mode,level_system,level_scalar,level_scalar_mu,level_scalar_nu,margin,"
        "predicted,observed,norm_classification,comparison,mismatch,best_semitrivial,best_fully_nontrivial,"
        "residual_u,residual_v,residual_scalar,converged_system,converged_scalar,epsilon_mu,epsilon_nu,seed,error\n";
  for (const auto& c : cells) {
    std::string err = c.error;
    std::replace(err.begin(), err.end(), '"', '\'');
    os << fmt(c.p) << ',' << fmt(c.b) << ',' << fmt(c.ratio) << ',' << fmt(c.mu) << ',' << fmt(c.nu) << ','
       << to_string(c.validity_mode) << ',' << fmt(c.level_system) << ',' << fmt(c.level_scalar) << ','
       << fmt(c.level_scalar_mu) << ',' << fmt(c.level_scalar_nu) << ',' << fmt(c.margin) << ','
       << to_string(c.predicted) << ',' << to_string(c.observed) << ',' << to_string(c.norm_classification) << ','
       << to_string(c.comparison) << ',' << (c.mismatch ? 1 : 0) << ',' << fmt(c.best_semitrivial) << ','
       << fmt(c.best_fully_nontrivial) << ',' << fmt(c.residual_u) << ',' << fmt(c.residual_v) << ','
       << fmt(c.residual_scalar) << ',' << (c.converged_system ? 1 : 0) << ',' << (c.converged_scalar ? 1 : 0)
       << ',' << fmt(c.epsilon_mu) << ',' << fmt(c.epsilon_nu) << ',' << c.seed << ",\"" << err << "\"\n";
  }
  return os.str();
}

void write_phase_csv(const std::vector<PhaseCell>& cells, const std::filesystem::path& path,
                     const std::string& config_hash) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << phase_csv(cells, config_hash);
}

void write_phase_manifest(const std::vector<PhaseCell>& cells, const SweepOptions& opts,
                          const std::filesystem::path& path, const std::string& config_hash, double wall_seconds) {
  using nlohmann::json;
  auto s = summarize(cells);
  json seeds = json::array();
  for (const auto& c : cells) seeds.push_back({{"p", c.p}, {"b", c.b}, {"ratio", c.ratio}, {"seed", c.seed}});
  json m = {
      {"config_hash", config_hash},
      {"grid", {{"N", opts.N}, {"n_per_dim", opts.n_per_dim}, {"box_length", opts.box_length}}},
      {"epsilon", epsilon_list(cells)},
      {"seeds", seeds},
      {"tolerances",
       {{"grad_tol", opts.solver.grad_tol},
        {"tol_ratio", opts.solver.tol_ratio},
        {"level_tol", opts.level_tol},
        {"boundary_band", opts.boundary_band},
        {"armijo_c1", opts.solver.armijo_c1},
        {"backtrack", opts.solver.backtrack},
        {"max_iters", opts.solver.max_iters},
        {"restarts", opts.solver.restarts}}},
      {"threads", opts.threads},
      {"summary",
       {{"cells", s.cells},
        {"boundary", s.boundary},
        {"mismatches", s.mismatches},
        {"inconsistent", s.inconsistent},
        {"failed", s.failed},
        {"agreement", s.agreement}}},
      {"wall_seconds", wall_seconds},
  };
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << m.dump(2) << "\n";
}

}  // namespace dualhelm
