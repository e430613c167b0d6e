#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "dualhelm/phase.hpp"
#include "dualhelm_cli/commands.hpp"

namespace dualhelm::cli {

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

struct Suite {
  std::vector<PropertyResult> out;
  void add(const std::string& section, const std::string& name, double measured, double tol,
           std::string detail = {}) {
    bool ok = std::isfinite(measured) && measured <= tol;
    out.push_back({section, name, ok, measured, tol, std::move(detail)});
  }
};

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  PointCoeffs coeffs(double p_lo = 2.2, double p_hi = 8.0) {
    double p = uniform(p_lo, p_hi);
    return {uniform(0.2, 5.0), uniform(0.0, p - 1.0), p};
  }
};

void legendre_checks(Suite& S, const std::function<double(const PointCoeffs&, double, double)>& H,
                     std::uint64_t seed) {
  Sampler R(seed);
  double euler = 0, trip = 0, sym = 0, bounds = 0, axis = 0, diag = 0, b1 = 0, mono = 0, convex = 0, fd = 0;
  double hess = 0;
  for (int k = 0; k < 2000; ++k) {
    PointCoeffs c = R.coeffs();
    const double pd = c.p_dual();
    double sb = R.uniform(-4, 4), tb = R.uniform(-4, 4);
    if (k % 7 == 0) tb *= 1e-7;
    double h = H(c, sb, tb);
    Vec2 g = grad_h(c, sb, tb);
    euler = std::max(euler, rel((g.s * sb + g.t * tb) / pd, h));
    double s = R.uniform(-5, 5), t = R.uniform(-5, 5);
    Vec2 gf = grad_f(c, s, t);
    Vec2 back = grad_h(c, gf.s, gf.t);
    trip = std::max(trip, std::max(std::abs(back.s - s), std::abs(back.t - t)));
    sym = std::max({sym, std::abs(H(c, tb, sb) - h), std::abs(H(c, -sb, tb) - h)});
    double m = std::pow(std::abs(sb), pd) + std::pow(std::abs(tb), pd);
    double lo = std::pow(c.a * (1 + c.b), 1 - pd) / pd * m, hi = std::pow(c.a, 1 - pd) / pd * m;
    bounds = std::max({bounds, (lo - h) / lo, (h - hi) / hi});
    axis = std::max(axis, rel(H(c, sb, 0.0), std::pow(c.a, 1 - pd) / pd * std::pow(std::abs(sb), pd)));
    diag = std::max(diag, rel(H(c, sb, sb), 2 * std::pow(c.a * (1 + c.b), 1 - pd) / pd * std::pow(std::abs(sb), pd)));
    PointCoeffs c1 = c;
    c1.b = 1.0;
    if (c1.b <= c1.p - 1) {
      double q = c.p / (c.p - 2);
      double closed = std::pow(c.a, 1 - pd) / pd *
                      std::pow(std::pow(std::abs(sb), q) + std::pow(std::abs(tb), q), (c.p - 2) / (c.p - 1));
      b1 = std::max(b1, rel(H(c1, sb, tb), closed));
    }
    // a_+^{1-p'} h_+ <= h <= a_-^{1-p'} h_- with [a-, a+] and [b-, b+] around the sample
    double am = c.a * 0.7, ap = c.a * 1.4, bm = c.b * 0.5, bp = std::min(c.p - 1, c.b * 1.5 + 0.1);
    double hp = std::pow(ap, 1 - pd) * eval_h_pm(bp, c.p, sb, tb), hm = std::pow(am, 1 - pd) * eval_h_pm(bm, c.p, sb, tb);
    PointCoeffs cm{R.uniform(am, ap), R.uniform(bm, bp), c.p};
    double hx = H(cm, sb, tb);
    mono = std::max({mono, (hp - hx) / hp, (hx - hm) / hm});
    // strict convexity along a random segment
    double s2 = R.uniform(-1, 1), t2 = R.uniform(-1, 1);
    double gap = eval_f(c, s + s2, t + t2) - eval_f(c, s, t) - s2 * gf.s - t2 * gf.t;
    convex = std::max(convex, -gap / std::max(1.0, std::abs(eval_f(c, s, t))) - 1e-12);
    if (std::abs(s) > 0.1 && std::abs(t) > 0.1) {
      const double e = 1e-5;
      double ds = (eval_f(c, s + e, t) - eval_f(c, s - e, t)) / (2 * e);
      double dt = (eval_f(c, s, t + e) - eval_f(c, s, t - e)) / (2 * e);
      fd = std::max({fd, rel(ds, gf.s), rel(dt, gf.t)});
      if (std::abs(std::abs(s) - std::abs(t)) > 1e-3) {
        auto inv = hessian_f(c, s, t);
        hess = std::max(hess, (inv.trace > 0 && inv.det > 0) ? 0.0 : 1.0);
      }
    }
  }
  S.add("legendre", "euler_identity", euler, 1e-9);
  S.add("legendre", "conjugacy_round_trip", trip, 1e-9);
  S.add("legendre", "symmetry", sym, 0.0);
  S.add("legendre", "two_sided_bound", std::max(bounds, 0.0), 1e-12);
  S.add("legendre", "axis_value", axis, 1e-9);
  S.add("legendre", "diagonal_value", diag, 1e-9);
  S.add("legendre", "b1_closed_form", b1, 1e-9);
  S.add("legendre", "monotonicity_chain", std::max(mono, 0.0), 1e-12);
  S.add("legendre", "strict_convexity", std::max(convex, 0.0), 0.0);
  S.add("legendre", "grad_f_finite_difference", fd, 1e-6);
  S.add("legendre", "hessian_trace_det_positive", hess, 0.0);
}

void kernel_checks(Suite& S, std::uint64_t seed) {
  double closed = 0, scale = 0, pos = 0, odd = 0, selfadj = 0;
  for (int i = 1; i <= 1000; ++i) {
    double r = 10.0 * i / 1000.0;
    closed = std::max(closed, std::abs(psi_realspace({3, 1.0, 0.0}, r) - phi_hankel(3, 1.0, r).real()) * 4 *
                                  std::numbers::pi * r);
  }
  Sampler R(seed + 1);
  for (int k = 0; k < 500; ++k) {
    int N = k % 2 ? 3 : 2;
    double lam = R.uniform(0.25, 4.0), r = R.uniform(1e-3, 10.0);
    double lhs = psi_realspace({N, lam, 0.0}, r);
    double rhs = std::pow(lam, (N - 2) / 2.0) * psi_realspace({N, 1.0, 0.0}, std::sqrt(lam) * r);
    scale = std::max(scale, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-3));
    double rr = R.uniform(1e-4, 0.999) * std::numbers::pi / (2 * std::sqrt(lam));
    if (!(psi_realspace({3, lam, 0.0}, rr) > 0.0)) pos = 1.0;
    double d = R.uniform(1e-3, 3.0), eps = R.uniform(0.01, 1.0);
    KernelSpec ks{3, lam, eps};
    odd = std::max(odd, std::abs(kernel_symbol(ks, lam + d) + kernel_symbol(ks, lam - d)) /
                            std::abs(kernel_symbol(ks, lam + d)));
  }
  Grid g = build_grid(3, 16, 8.0);
  std::normal_distribution<double> nd;
  Field f(g), h(g);
  for (auto& v : f.values()) v = nd(R.rng);
  for (auto& v : h.values()) v = nd(R.rng);
  KernelSpec ks{3, 1.0, default_epsilon(g, 1.0)};
  selfadj = rel(quadratic_form(f, h, ks), quadratic_form(h, f, ks));
  S.add("kernel", "closed_form_vs_hankel", closed, 1e-10);
  S.add("kernel", "scaling_identity", scale, 1e-10);
  S.add("kernel", "positivity_near_zero", pos, 0.0);
  S.add("kernel", "symbol_odd_symmetry", odd, 1e-12);
  S.add("kernel", "self_adjointness", selfadj, 1e-12);
}

void functional_checks(Suite& S, double fault, std::uint64_t seed) {
  Grid g = build_grid(3, 16, 8.0);
  CoefficientProfile a([](std::span<const double> x) { return 2.0 + std::cos(2 * std::numbers::pi * x[0]); }, "a");
  CoefficientProfile b([](std::span<const double> x) { return 1.0 + 0.8 * std::sin(2 * std::numbers::pi * x[1]); },
                       "b");
  DualFunctional ctx(ProblemSpec::create(3, 5.0, 1.0, 1.3), sample_coefficients(a, b, g, 5.0));
  const double pd = ctx.spec().p_dual();
  std::mt19937_64 rng(seed + 2);
  std::normal_distribution<double> nd;
  auto band = [&](double lam) {
    Field f(g);
    for (auto& v : f.values()) v = nd(rng);
    return ctx.convolver().apply_multiplier(f, [lam](double k2) { return k2 > lam && k2 < 4 * lam ? 1.0 : 0.0; });
  };
  auto J = [&](const DualPair& z) {
    auto e = eval_J(z, ctx);
    e.h_integral *= fault;
    e.J_value = e.h_integral - 0.5 * (e.quad_mu + e.quad_nu);
    e.F_value = quotient_level(pd * e.h_integral, e.quad_mu + e.quad_nu, ctx.spec().p);
    return e;
  };
  double scaling = 0, jprime = 0, pairing = 0, supj = 0, bounds = 0;
  for (int k = 0; k < 3; ++k) {
    DualPair z(band(1.0), band(1.3));
    auto e1 = J(z);
    auto e2 = J(2.0 * z);
    scaling = std::max(scaling, rel(e2.J_value, std::pow(2.0, pd) * e1.h_integral - 2.0 * (e1.quad_mu + e1.quad_nu)));
    double jp = pd * e1.h_integral - (e1.quad_mu + e1.quad_nu);
    const double d = 1e-5;
    double fdv = (J((1 + d) * z).J_value - J((1 - d) * z).J_value) / (2 * d);
    jprime = std::max(jprime, rel(fdv, jp));
    DualPair gj = grad_J(z, ctx);
    pairing = std::max(pairing, rel(inner(gj.first, z.first) + inner(gj.second, z.second), jp));
    // sup over tau by golden section on log tau
    double lo = -30, hi = 30;
    const double r = (std::sqrt(5.0) - 1) / 2;
    auto along = [&](double lt) {
      double t = std::exp(lt);
      return std::pow(t, pd) * e1.h_integral - 0.5 * t * t * (e1.quad_mu + e1.quad_nu);
    };
    for (int it = 0; it < 200; ++it) {
      double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
      if (along(x1) < along(x2)) lo = x1; else hi = x2;
    }
    supj = std::max(supj, rel(J(std::exp(0.5 * (lo + hi)) * z).J_value, e1.F_value));
    const auto& c = ctx.coeffs();
    double m = std::pow(lp_norm(z.first, pd), pd) + std::pow(lp_norm(z.second, pd), pd);
    double glo = std::pow(c.a_plus * (1 + c.b_plus), 1 - pd) / pd * m, ghi = std::pow(c.a_minus, 1 - pd) / pd * m;
    bounds = std::max({bounds, (glo - e1.h_integral) / glo, (e1.h_integral - ghi) / ghi});
  }
  S.add("functionals", "ray_scaling", scaling, 1e-10);
  S.add("functionals", "jprime_finite_difference", jprime, 1e-6);
  S.add("functionals", "grad_pairing", pairing, 1e-10);
  S.add("functionals", "sup_of_J_equals_F", supj, 1e-8);
  S.add("functionals", "h_integral_bounds", std::max(bounds, 0.0), 1e-12);
  // F(w, w) = 2 (1 + b)^{-2/(p-2)} E(w) for constant coefficients
  DualFunctional cc(ProblemSpec::create(3, 5.0, 1.0, 1.0), sample_coefficients(1.7, 2.0, g, 5.0));
  Field w = band(1.0);
  auto ew = eval_J(DualPair(w, w), cc);
  double Fww = quotient_level(pd * fault * ew.h_integral, ew.quad_mu + ew.quad_nu, 5.0);
  double rhs = 2 * std::pow(3.0, -2.0 / 3.0) * eval_E(w, cc.coeffs(), cc.kernel_mu());
  S.add("functionals", "symmetric_pair_level", rel(Fww, rhs), 1e-10);
  S.add("functionals", "d_lambda_examples",
        std::max(std::abs(d_lambda_scaling(4.0, 5.0, 3) - std::pow(4.0, 1.0 / 6.0)),
                 std::abs(d_lambda_scaling(9.0, 6.0, 2) - 3.0)),
        1e-12);
}

void phase_checks(Suite& S, double fault, std::uint64_t seed) {
  for (double p : {4.0, 4.5, 5.0, 6.0, 8.0}) {
    double m = psi_grid_min(p);
    S.add("phase", "psi_min_p" + std::to_string(p).substr(0, 3), std::max(0.0, 1.0 - m), 1e-12,
          "min psi = " + std::to_string(m));
  }
  for (double p : {5.0, 6.0}) {
    try {
      auto c = psi_critical_points(p);
      S.add("phase", "psi_critical_symmetry_p" + std::to_string(static_cast<int>(p)), std::abs(c.eta1 * c.eta3 - 1),
            1e-10);
      S.add("phase", "psi_second_derivative_p" + std::to_string(static_cast<int>(p)),
            std::abs(c.psi_dd_one_fd - c.psi_dd_one_closed), 1e-8);
    } catch (const std::exception& e) {
      S.add("phase", "psi_critical_points_p" + std::to_string(static_cast<int>(p)),
            std::numeric_limits<double>::infinity(), 0.0, e.what());
    }
  }
  {
    Grid g = build_grid(3, 8, 1.0);
    auto c = sample_coefficients(1.0, 2.0, g, 5.0);
    auto r = check_hplus_lower_bound(Field::constant(g, 1.0), Field::constant(g, 1.0), c);
    S.add("phase", "hplus_equality_case", rel(fault * r.lhs, r.rhs), 1e-10);
  }
  Grid g = build_grid(3, 16, 2.0);
  CoefficientProfile a([](std::span<const double> x) { return 2.0 + std::cos(2 * std::numbers::pi * x[1]); }, "a");
  CoefficientProfile b([](std::span<const double> x) { return 1.0 + 0.9 * std::sin(2 * std::numbers::pi * x[2]); },
                       "b");
  auto c = sample_coefficients(a, b, g, 5.0);
  Convolver conv(g);
  std::mt19937_64 rng(seed + 3);
  std::normal_distribution<double> nd;
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 20; ++k) {
    Field u(g), v(g);
    for (auto& x : u.values()) x = nd(rng);
    for (auto& x : v.values()) x = nd(rng);
    auto smooth = [](double k2) { return std::exp(-0.05 * k2); };
    auto r = check_hplus_lower_bound(conv.apply_multiplier(u, smooth), conv.apply_multiplier(v, smooth), c);
    worst = std::max(worst, (r.rhs - fault * r.lhs) / std::abs(r.rhs));
  }
  S.add("phase", "hplus_lower_bound", std::max(worst, 0.0), 1e-10);
  bool labels = compare_levels(0.9, 1.0, 1.0, 0.01) == LevelComparison::below &&
                compare_levels(1.0005, 1.0, 1.2, 0.01) == LevelComparison::equal &&
                compare_levels(1.5, 1.0, 1.0, 0.01) == LevelComparison::inconsistent;
  S.add("phase", "compare_levels_examples", labels ? 0.0 : 1.0, 0.0);
  S.add("phase", "threshold_examples",
        std::max({std::abs(threshold_bstar(4.0) - 1), std::abs(threshold_bstar(6.0) - 3),
                  std::abs(threshold_bstar(8.0) - 7)}),
        1e-15);
}

}  // namespace

std::vector<PropertyResult> verify_suite(const std::string& fault, std::uint64_t seed) {
  const double factor = fault == "scale_h" ? 1.01 : 1.0;
  auto H = [factor](const PointCoeffs& c, double s, double t) { return factor * eval_h(c, s, t); };
  Suite S;
  legendre_checks(S, H, seed);
  kernel_checks(S, seed);
  functional_checks(S, factor, seed);
  phase_checks(S, factor, seed);
  return S.out;
}

}  // namespace dualhelm::cli
