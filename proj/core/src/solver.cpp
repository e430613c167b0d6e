#include "dualhelm/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "dualhelm/error.hpp"
#include "dualhelm/legendre.hpp"

namespace dualhelm {

std::string to_string(Classification c) {
  return c == Classification::semitrivial ? "semitrivial" : "fully_nontrivial";
}

void SolverOptions::validate() const {
  auto fail = [](const std::string& what) { throw InvalidArgument("solver options: " + what); };
  if (max_iters < 0) fail("max_iters must be >= 0");
  if (!(grad_tol > 0.0)) fail("grad_tol must be > 0");
  if (restarts < 1) fail("restarts must be >= 1");
  if (!(armijo_c1 > 0.0 && armijo_c1 < 1.0)) fail("armijo_c1 must lie in (0, 1)");
  if (!(backtrack > 0.0 && backtrack < 1.0)) fail("backtrack must lie in (0, 1)");
  if (threads < 1) fail("threads must be >= 1");
  if (!(tol_ratio > 0.0 && tol_ratio < 1.0)) fail("tol_ratio must lie in (0, 1)");
  if (!(eta >= 0.0)) fail("eta must be >= 0");
  if (!(ball_radius > 0.0)) fail("ball_radius must be > 0");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Pointwise model in primal coordinates: f(x, u, v) with one or two components.
struct Model {
  const Grid* grid = nullptr;
  int ncomp = 2;
  double p = 5.0;
  const Field* a = nullptr;
  const Field* b = nullptr;  // unused when ncomp == 1
  KernelSpec kernel[2];
  Convolver* conv = nullptr;

  // wbar = grad f(w); returns p int f(w).
  double gradient(const std::vector<Field>& w, std::vector<Field>& wb) const {
    const std::size_t n = grid->size();
    const double hp = 0.5 * p;
    double sum = 0.0;
    if (ncomp == 1) {
      const Field& u = w[0];
      Field& ub = wb[0];
      for (std::size_t i = 0; i < n; ++i) {
        double au = std::abs(u[i]);
        double up = std::pow(au, p - 1.0);
        ub[i] = (*a)[i] * up * sgn(u[i]);
        sum += (*a)[i] * up * au;
      }
    } else {
      const Field &u = w[0], &v = w[1];
      Field &ub = wb[0], &vb = wb[1];
      for (std::size_t i = 0; i < n; ++i) {
        double au = std::abs(u[i]), av = std::abs(v[i]);
        double ai = (*a)[i], bi = (*b)[i];
        double uh = au > 0.0 ? std::pow(au, hp) : 0.0;
        double vh = av > 0.0 ? std::pow(av, hp) : 0.0;
        // |u|^{p-1} + b |u|^{p/2-1} |v|^{p/2} = (|u|^{p/2} + b |v|^{p/2}) |u|^{p/2-1}
        ub[i] = au > 0.0 ? ai * (uh + bi * vh) * uh / au * sgn(u[i]) : 0.0;
        vb[i] = av > 0.0 ? ai * (vh + bi * uh) * vh / av * sgn(v[i]) : 0.0;
        sum += ai * (uh * uh + 2.0 * bi * uh * vh + vh * vh);
      }
    }
    return sum * grid->cell_volume();
  }
};

struct State {
  std::vector<Field> w, wb, cw;  // primal, dual, kernel applied to dual
  double N = 0.0;                // p int f(w) = p' int h(wbar)
  double Q = 0.0;
};

double log_level(double N, double Q, double p) {
  if (!(N > 0.0) || !(Q > 0.0)) return kInf;
  return std::log((p - 2.0) / (2.0 * p)) + 2.0 * (p - 1.0) / (p - 2.0) * std::log(N) - p / (p - 2.0) * std::log(Q);
}

void evaluate(const Model& m, State& s) {
  s.wb.resize(m.ncomp);
  s.cw.resize(m.ncomp);
  for (int c = 0; c < m.ncomp; ++c)
    if (s.wb[c].grid() != *m.grid) s.wb[c] = Field(*m.grid);
  s.N = m.gradient(s.w, s.wb);
  s.Q = 0.0;
  for (int c = 0; c < m.ncomp; ++c) {
    if (s.wb[c].is_zero()) {
      s.cw[c] = Field(*m.grid);
      continue;
    }
    s.cw[c] = m.conv->convolve(s.wb[c], m.kernel[c]);
    s.Q += inner(s.wb[c], s.cw[c]);
  }
}

// Scales to Q = 1 without re-evaluation.
void normalize(const Model& m, State& s) {
  double c = std::pow(s.Q, -1.0 / (2.0 * (m.p - 1.0)));
  double cd = std::pow(c, m.p - 1.0);
  for (int k = 0; k < m.ncomp; ++k) {
    s.w[k] *= c;
    s.wb[k] *= cd;
    s.cw[k] *= cd;
  }
  s.N *= std::pow(c, m.p);
  s.Q = 1.0;
}

double joint_norm(const std::vector<Field>& f, double q) {
  double s = 0.0;
  for (const auto& x : f) s += std::pow(lp_norm(x, q), q);
  return std::pow(s, 1.0 / q);
}

double max_abs(const std::vector<Field>& f) {
  double m = 0.0;
  for (const auto& x : f)
    for (double v : x.values()) m = std::max(m, std::abs(v));
  return m;
}

struct RunResult {
  int iterations = 0;
  bool converged = false;
  double grad_norm = kInf;
};

// Descent on log F in primal coordinates with the Hessian of f as metric.
RunResult descend(const Model& m, State& s, const SolverOptions& opts, int budget,
                  std::vector<IterationRecord>& history, int iter_offset) {
  RunResult out;
  double alpha = 1.0;
  std::vector<Field> d(m.ncomp), gp(m.ncomp), gm(m.ncomp), trial(m.ncomp);
  for (int c = 0; c < m.ncomp; ++c) {
    gp[c] = Field(*m.grid);
    gm[c] = Field(*m.grid);
  }
  double last_step = 0.0;
  for (int it = 0;; ++it) {
    normalize(m, s);
    for (int c = 0; c < m.ncomp; ++c) {
      d[c] = s.cw[c];
      d[c] *= s.N / s.Q;
      d[c] -= s.w[c];
    }
    double wn = joint_norm(s.w, m.p);
    out.grad_norm = joint_norm(d, m.p) / wn;
    out.iterations = it;
    double level = std::exp(log_level(s.N, s.Q, m.p));
    history.push_back({iter_offset + it, level, out.grad_norm, last_step});
    if (out.grad_norm < opts.grad_tol) {
      out.converged = true;
      break;
    }
    if (it >= budget) break;

    // <d, D^2 f(w) d> by a symmetric difference of grad f
    double delta = 1e-4 * max_abs(s.w) / max_abs(d);
    for (int c = 0; c < m.ncomp; ++c) {
      trial[c] = s.w[c];
      trial[c].axpy(delta, d[c]);
    }
    m.gradient(trial, gp);
    for (int c = 0; c < m.ncomp; ++c) {
      trial[c] = s.w[c];
      trial[c].axpy(-delta, d[c]);
    }
    m.gradient(trial, gm);
    double dhd = 0.0;
    for (int c = 0; c < m.ncomp; ++c) dhd += inner(gp[c] - gm[c], d[c]);
    dhd /= 2.0 * delta;
    const double slope = -(2.0 * m.p / (m.p - 2.0)) * std::max(dhd, 0.0) / s.N;
    const double f0 = log_level(s.N, s.Q, m.p);

    State t;
    bool accepted = false;
    while (alpha > 1e-14) {
      t.w.resize(m.ncomp);
      for (int c = 0; c < m.ncomp; ++c) {
        t.w[c] = s.w[c];
        t.w[c].axpy(alpha, d[c]);
      }
      evaluate(m, t);
      double f1 = log_level(t.N, t.Q, m.p);
      if (f1 <= f0 + opts.armijo_c1 * alpha * slope && f1 <= f0) {
        accepted = true;
        break;
      }
      alpha *= opts.backtrack;
    }
    if (!accepted) break;  // stagnation at roundoff level
    last_step = alpha;
    s = std::move(t);
    alpha = std::min(1.0, alpha / opts.backtrack);
  }
  return out;
}

Field band_pass(Convolver& conv, const Field& f, double lambda) {
  return conv.apply_multiplier(f, [lambda](double k2) { return k2 > lambda && k2 < 4.0 * lambda ? 1.0 : 0.0; });
}

Field gaussian_bump(const Grid& g, const double* centre, double width) {
  Field f(g);
  int idx[3] = {0, 0, 0};
  const double h = g.spacing();
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.unflatten(i, idx);
    double r2 = 0.0;
    for (int k = 0; k < g.dim(); ++k) {
      double x = idx[k] * h - centre[k];
      r2 += x * x;
    }
    f[i] = std::exp(-0.5 * r2 / (width * width));
  }
  return f;
}

Field centred_seed(const Grid& g, Convolver& conv, double lambda) {
  double c[3];
  for (double& x : c) x = 0.5 * g.box_length();
  return band_pass(conv, gaussian_bump(g, c, 1.0 / std::sqrt(lambda)), lambda);
}

Field random_seed(const Grid& g, Convolver& conv, double lambda, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double c[3];
  for (double& x : c) x = g.box_length() * (0.25 + 0.5 * U(rng));
  double width = (0.5 + 1.5 * U(rng)) / std::sqrt(lambda);
  double sign = U(rng) < 0.5 ? -1.0 : 1.0;
  Field f = band_pass(conv, gaussian_bump(g, c, width), lambda);
  f *= sign;
  return f;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Seed {
  std::string kind;
  DualPair dual;  // second component ignored for scalar runs
};

struct Outcome {
  RestartRecord record;
  State state;
  std::vector<IterationRecord> history;
};

// Runs every seed (in parallel when threads > 1); each worker owns a Convolver.
template <class MakeModel>
std::vector<Outcome> run_restarts(const std::vector<Seed>& seeds, const SolverOptions& opts, int ncomp, double p,
                                  MakeModel make_model, const CoefficientField& coeffs) {
  std::vector<Outcome> out(seeds.size());
  auto work = [&](std::size_t k, Convolver& conv) {
    Model m = make_model(conv);
    Outcome& o = out[k];
    o.record.seed_kind = seeds[k].kind;
    State s;
    s.w.resize(ncomp);
    const Field& ub = seeds[k].dual.first;
    if (ncomp == 1) {
      Field w(*m.grid);
      for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = sgn(ub[i]) * std::pow(std::abs(ub[i]) / coeffs.a[i], 1.0 / (p - 1.0));
      s.w[0] = std::move(w);
    } else {
      PrimalPair pr = recover_primal(seeds[k].dual, coeffs);
      s.w[0] = std::move(pr.first);
      s.w[1] = std::move(pr.second);
    }
    evaluate(m, s);
    if (!(s.Q > 0.0) || !(s.N > 0.0)) {
      o.record.admissible = false;
      o.record.level = kInf;
      return;
    }
    RunResult r = descend(m, s, opts, opts.max_iters, o.history, 0);
    if (ncomp == 2 && r.converged) {
      // drop a vanishing component and polish on the axis
      double n0 = lp_norm(s.wb[0], p / (p - 1.0)), n1 = lp_norm(s.wb[1], p / (p - 1.0));
      int minor = n0 < n1 ? 0 : 1;
      double lo = std::min(n0, n1), hi = std::max(n0, n1);
      if (lo > 0.0 && lo < opts.tol_ratio * hi) {
        s.w[minor] = Field(*m.grid);
        evaluate(m, s);
        int left = std::max(0, opts.max_iters - r.iterations);
        RunResult r2 = descend(m, s, opts, left, o.history, r.iterations + 1);
        r2.iterations += r.iterations + 1;
        r = r2;
      }
    }
    normalize(m, s);
    o.record.level = std::exp(log_level(s.N, s.Q, p));
    o.record.grad_norm = r.grad_norm;
    o.record.iterations = r.iterations;
    o.record.converged = r.converged;
    o.state = std::move(s);
  };

  const int nthreads = std::min<int>(opts.threads, static_cast<int>(seeds.size()));
  const Grid& grid = coeffs.grid();
  if (nthreads <= 1) {
    Convolver conv(grid);
    for (std::size_t k = 0; k < seeds.size(); ++k) work(k, conv);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        try {
          Convolver conv(grid);
          for (std::size_t k = next++; k < seeds.size(); k = next++) work(k, conv);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  return out;
}

std::size_t pick_best(const std::vector<Outcome>& out) {
  std::size_t best = out.size();
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!out[k].record.admissible) continue;
    if (best == out.size() || out[k].record.level < out[best].record.level) best = k;
  }
  if (best == out.size()) throw NumericalError("no admissible initial pair");
  return best;
}

GroundStateRecord assemble(std::vector<Outcome>& out, const DualFunctional& ctx, int ncomp,
                           const SolverOptions& opts) {
  const double p = ctx.spec().p;
  const double pd = p / (p - 1.0);
  std::size_t best = pick_best(out);
  for (auto& o : out) {
    if (!o.record.admissible) continue;
    if (ncomp == 1) {
      o.record.classification = Classification::semitrivial;
    } else {
      o.record.classification = classify(DualPair(o.state.wb[0], o.state.wb[1]), p, opts.tol_ratio);
    }
  }
  Outcome& b = out[best];
  GroundStateRecord r;
  r.level = b.record.level;
  r.pair = DualPair(b.state.wb[0], ncomp == 2 ? b.state.wb[1] : Field(ctx.grid()));
  r.classification = b.record.classification;
  r.component_norms = {lp_norm(r.pair.first, pd), lp_norm(r.pair.second, pd)};
  // tau^{p'-2} = Q / (p' int h) with Q = 1
  r.critical_scale = std::pow(b.state.N, -1.0 / (pd - 2.0));
  r.primal = recover_primal(r.critical_scale * r.pair, ctx.coeffs());
  r.fixed_point_residual = fixed_point_residual(r.primal, ctx);
  r.grad_norm = b.record.grad_norm;
  r.iterations = b.record.iterations;
  r.converged = b.record.converged;
  r.best_restart = static_cast<int>(best);
  r.restarts_used = static_cast<int>(out.size());
  r.epsilon_mu = ctx.kernel_mu().epsilon;
  r.epsilon_nu = ctx.kernel_nu().epsilon;
  r.history = std::move(b.history);
  for (const auto& o : out) r.restarts.push_back(o.record);
  return r;
}

// Context with b = 0 and both frequencies equal to lambda, for scalar solves.
DualFunctional scalar_context(const CoefficientField& coeffs, double lambda, const ProblemSpec& spec,
                              double epsilon) {
  CoefficientField c = coeffs;
  c.b = Field(coeffs.grid());
  c.b_minus = c.b_plus = 0.0;
  c.b_constant = true;
  ProblemSpec s = spec;
  s.mu = s.nu = lambda;
  return DualFunctional(s, std::move(c), epsilon, epsilon);
}

GroundStateRecord scalar_impl(const DualFunctional& ctx, const SolverOptions& opts) {
  opts.validate();
  const Grid& g = ctx.grid();
  const double lambda = ctx.spec().mu;
  std::vector<Seed> seeds;
  {
    Convolver conv(g);
    for (int k = 0; k < opts.restarts; ++k) {
      Field f;
      if (k == 0) {
        f = centred_seed(g, conv, lambda);
      } else {
        std::mt19937_64 rng(mix_seed(opts.seed, k));
        f = random_seed(g, conv, lambda, rng);
      }
      seeds.push_back({k == 0 ? "centred" : "random", DualPair(f, Field(g))});
    }
  }
  auto make = [&](Convolver& conv) {
    Model m;
    m.grid = &g;
    m.ncomp = 1;
    m.p = ctx.spec().p;
    m.a = &ctx.coeffs().a;
    m.kernel[0] = ctx.kernel_mu();
    m.conv = &conv;
    return m;
  };
  auto out = run_restarts(seeds, opts, 1, ctx.spec().p, make, ctx.coeffs());
  return assemble(out, ctx, 1, opts);
}

Field ball_mask(const Field& w, double radius) {
  const Grid& g = w.grid();
  std::size_t imax = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (std::abs(w[i]) > std::abs(w[imax])) imax = i;
  int c[3] = {0, 0, 0}, idx[3] = {0, 0, 0};
  g.unflatten(imax, c);
  const double h = g.spacing(), L = g.box_length();
  Field out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.unflatten(i, idx);
    double r2 = 0.0;
    for (int k = 0; k < g.dim(); ++k) {
      double x = (idx[k] - c[k]) * h;
      x -= L * std::round(x / L);
      r2 += x * x;
    }
    out[i] = r2 < radius * radius ? w[i] : 0.0;
  }
  return out;
}

}  // namespace

GroundStateRecord solve_scalar(const CoefficientField& coeffs, double lambda, const ProblemSpec& spec,
                               const SolverOptions& opts) {
  opts.validate();
  double eps = (lambda == spec.nu && lambda != spec.mu) ? opts.epsilon_nu : opts.epsilon_mu;
  return scalar_impl(scalar_context(coeffs, lambda, spec, eps), opts);
}

GroundStateRecord minimize_F(const DualFunctional& ctx, const SolverOptions& opts, ScalarSeeds given) {
  opts.validate();
  const Grid& g = ctx.grid();
  const ProblemSpec& spec = ctx.spec();
  auto usable = [&](const GroundStateRecord* r) { return r && r->pair.grid() == g && !r->pair.first.is_zero(); };
  GroundStateRecord own_mu, own_nu;
  const GroundStateRecord* smu = given.mu;
  const GroundStateRecord* snu = given.nu;
  if (!usable(smu)) {
    own_mu = scalar_impl(scalar_context(ctx.coeffs(), spec.mu, spec, ctx.kernel_mu().epsilon), opts);
    smu = &own_mu;
  }
  if (!usable(snu)) {
    if (spec.nu == spec.mu && ctx.kernel_nu().epsilon == ctx.kernel_mu().epsilon) {
      snu = smu;
    } else {
      own_nu = scalar_impl(scalar_context(ctx.coeffs(), spec.nu, spec, ctx.kernel_nu().epsilon), opts);
      snu = &own_nu;
    }
  }
  const Field& wmu = smu->pair.first;
  const Field& wnu = snu->pair.first;

  std::vector<Seed> seeds;
  seeds.push_back({"scalar_mu", DualPair(wmu, Field(g))});
  seeds.push_back({"scalar_nu", DualPair(Field(g), wnu)});
  seeds.push_back({"diagonal", DualPair(wmu, wnu)});
  seeds.push_back({"ball_perturbation", DualPair(wmu, opts.eta * ball_mask(wnu, opts.ball_radius))});
  if (static_cast<int>(seeds.size()) > opts.restarts) seeds.resize(opts.restarts);
  {
    Convolver conv(g);
    for (int k = static_cast<int>(seeds.size()); k < opts.restarts; ++k) {
      std::mt19937_64 rng(mix_seed(opts.seed, 1000 + k));
      Field u = random_seed(g, conv, spec.mu, rng);
      Field v = random_seed(g, conv, spec.nu, rng);
      seeds.push_back({"random", DualPair(std::move(u), std::move(v))});
    }
  }

  auto make = [&](Convolver& conv) {
    Model m;
    m.grid = &g;
    m.ncomp = 2;
    m.p = spec.p;
    m.a = &ctx.coeffs().a;
    m.b = &ctx.coeffs().b;
    m.kernel[0] = ctx.kernel_mu();
    m.kernel[1] = ctx.kernel_nu();
    m.conv = &conv;
    return m;
  };
  auto out = run_restarts(seeds, opts, 2, spec.p, make, ctx.coeffs());
  return assemble(out, ctx, 2, opts);
}

GroundStateRecord minimize_F(const CoefficientField& coeffs, const ProblemSpec& spec, const SolverOptions& opts) {
  opts.validate();
  DualFunctional ctx(spec, coeffs, opts.epsilon_mu, opts.epsilon_nu);
  return minimize_F(ctx, opts);
}

PrimalPair recover_primal(const DualPair& pair, const CoefficientField& coeffs) {
  require_same_grid(pair.first, coeffs.a, "recover_primal");
  const double p = coeffs.p;
  Field u(pair.grid()), v(pair.grid());
  int idx[3] = {0, 0, 0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    Vec2 g;
    try {
      g = grad_h({coeffs.a[i], coeffs.b[i], p}, pair.first[i], pair.second[i]);
    } catch (const NumericalError& e) {
      pair.grid().unflatten(i, idx);
      std::ostringstream os;
      os << e.what() << " at grid index (" << idx[0] << ", " << idx[1] << ", " << idx[2] << ")";
      throw NumericalError(os.str());
    }
    u[i] = g.s;
    v[i] = g.t;
  }
  // inverse check
  const double pd = p / (p - 1.0);
  Field es(pair.grid()), et(pair.grid());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Vec2 g = grad_f({coeffs.a[i], coeffs.b[i], p}, u[i], v[i]);
    es[i] = g.s - pair.first[i];
    et[i] = g.t - pair.second[i];
  }
  double err = std::hypot(lp_norm(es, pd), lp_norm(et, pd));
  double ref = std::hypot(lp_norm(pair.first, pd), lp_norm(pair.second, pd));
  if (err > 1e-8 * ref)
    throw NumericalError("recover_primal: grad f round trip error " + std::to_string(err / ref) +
                         " exceeds 1e-8");
  u.check_finite("recover_primal u");
  v.check_finite("recover_primal v");
  return PrimalPair(std::move(u), std::move(v));
}

std::pair<double, double> fixed_point_residual(const PrimalPair& primal, const DualFunctional& ctx) {
  require_same_grid(primal.first, ctx.coeffs().a, "fixed_point_residual");
  const auto& c = ctx.coeffs();
  const double p = ctx.spec().p;
  Field gs(primal.grid()), gt(primal.grid());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Vec2 g = grad_f({c.a[i], c.b[i], p}, primal.first[i], primal.second[i]);
    gs[i] = g.s;
    gt[i] = g.t;
  }
  auto component = [&](const Field& u, const Field& g, const KernelSpec& k) {
    double nu = lp_norm(u, p);
    if (nu == 0.0) return g.is_zero() ? 0.0 : kInf;
    return lp_norm(u - ctx.convolver().convolve(g, k), p) / nu;
  };
  return {component(primal.first, gs, ctx.kernel_mu()), component(primal.second, gt, ctx.kernel_nu())};
}

std::pair<double, double> fixed_point_residual(const PrimalPair& primal, const CoefficientField& coeffs,
                                               const ProblemSpec& spec) {
  DualFunctional ctx(spec, coeffs);
  return fixed_point_residual(primal, ctx);
}

Classification classify(const DualPair& pair, double p, double tol_ratio) {
  if (!(tol_ratio > 0.0 && tol_ratio < 1.0)) throw InvalidArgument("classify: tol_ratio must lie in (0, 1)");
  if (pair.is_zero()) throw InvalidArgument("classify: zero pair");
  const double pd = p / (p - 1.0);
  double n0 = lp_norm(pair.first, pd), n1 = lp_norm(pair.second, pd);
  return std::min(n0, n1) < tol_ratio * std::max(n0, n1) ? Classification::semitrivial
                                                          : Classification::fully_nontrivial;
}

}  // namespace dualhelm
