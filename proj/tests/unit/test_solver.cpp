#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dualhelm/solver.hpp"

using namespace dualhelm;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

Grid test_grid() { return build_grid(3, 24, 12.0); }

Field smooth_field(const Grid& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Field f(g);
  for (auto& v : f.values()) v = nd(rng);
  Convolver c(g);
  return c.apply_multiplier(f, [](double k2) { return std::exp(-k2); });
}

SolverOptions fast_opts() {
  SolverOptions o;
  o.restarts = 4;
  return o;
}

const GroundStateRecord& scalar_p5() {
  static GroundStateRecord r = [] {
    Grid g = test_grid();
    auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.0);
    return solve_scalar(sample_coefficients(1.0, 0.0, g, 5.0), 1.0, spec, fast_opts());
  }();
  return r;
}

GroundStateRecord system_p5(double b) {
  Grid g = test_grid();
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.0);
  DualFunctional ctx(spec, sample_coefficients(1.0, b, g, 5.0));
  return minimize_F(ctx, fast_opts(), {&scalar_p5(), &scalar_p5()});
}

}  // namespace

TEST(SolverOptions, Validation) {
  SolverOptions o;
  EXPECT_NO_THROW(o.validate());
  o.restarts = 0;
  EXPECT_THROW(o.validate(), InvalidArgument);
  o = {};
  o.grad_tol = 0.0;
  EXPECT_THROW(o.validate(), InvalidArgument);
  o = {};
  o.backtrack = 1.0;
  EXPECT_THROW(o.validate(), InvalidArgument);
  o = {};
  o.threads = 0;
  EXPECT_THROW(o.validate(), InvalidArgument);
}

TEST(Classify, Examples) {
  Grid g = test_grid();
  Field w = smooth_field(g, 1);
  EXPECT_EQ(classify(DualPair(w, Field(g)), 5.0), Classification::semitrivial);
  EXPECT_EQ(classify(DualPair(Field(g), w), 5.0), Classification::semitrivial);
  EXPECT_EQ(classify(DualPair(w, w), 5.0), Classification::fully_nontrivial);
  EXPECT_EQ(classify(DualPair(w, 1e-9 * w), 5.0, 1e-3), Classification::semitrivial);
  EXPECT_THROW(classify(DualPair(Field(g), Field(g)), 5.0), InvalidArgument);
  EXPECT_THROW(classify(DualPair(w, w), 5.0, 1.5), InvalidArgument);
}

TEST(RecoverPrimal, Zero) {
  Grid g = test_grid();
  auto c = sample_coefficients(1.0, 0.7, g, 5.0);
  PrimalPair pr = recover_primal(DualPair(Field(g), Field(g)), c);
  EXPECT_TRUE(pr.is_zero());
}

TEST(RecoverPrimal, B1ClosedForm) {
  Grid g = test_grid();
  const double p = 4.5, a = 1.3;
  auto c = sample_coefficients(a, 1.0, g, p);
  Field ub = smooth_field(g, 2), vb = smooth_field(g, 3);
  PrimalPair pr = recover_primal(DualPair(ub, vb), c);
  double q = p / (p - 2), pd = p / (p - 1);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    double pre = std::pow(a * (std::pow(std::abs(ub[i]), q) + std::pow(std::abs(vb[i]), q)), 1 - pd);
    double es = pre * std::pow(std::abs(ub[i]), (4 - p) / (p - 2)) * ub[i];
    double et = pre * std::pow(std::abs(vb[i]), (4 - p) / (p - 2)) * vb[i];
    ASSERT_LT(rel(pr.first[i], es), 1e-12);
    ASSERT_LT(rel(pr.second[i], et), 1e-12);
  }
}

TEST(RecoverPrimal, RoundTrip) {
  Grid g = test_grid();
  CoefficientProfile a([](std::span<const double> x) { return 1.5 + std::sin(2 * std::numbers::pi * x[2]); }, "a");
  CoefficientProfile b([](std::span<const double> x) { return 1.2 + std::cos(2 * std::numbers::pi * x[0]); }, "b");
  auto c = sample_coefficients(a, b, g, 5.0);
  Field ub = smooth_field(g, 4), vb = smooth_field(g, 5);
  PrimalPair pr = recover_primal(DualPair(ub, vb), c);
  Field bs(g), bt(g);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    Vec2 v = grad_f({c.a[i], c.b[i], 5.0}, pr.first[i], pr.second[i]);
    bs[i] = v.s;
    bt[i] = v.t;
  }
  EXPECT_LT(lp_norm(bs - ub, 1.25) / lp_norm(ub, 1.25), 1e-8);
  EXPECT_LT(lp_norm(bt - vb, 1.25) / lp_norm(vb, 1.25), 1e-8);
}

TEST(FixedPointResidual, Examples) {
  Grid g = test_grid();
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.0);
  auto c = sample_coefficients(1.0, 0.5, g, 5.0);
  auto z = fixed_point_residual(PrimalPair(Field(g), Field(g)), c, spec);
  EXPECT_EQ(z.first, 0.0);
  EXPECT_EQ(z.second, 0.0);
  auto r = fixed_point_residual(PrimalPair(smooth_field(g, 6), smooth_field(g, 7)), c, spec);
  EXPECT_GT(r.first, 0.1);
  EXPECT_GT(r.second, 0.1);
}

TEST(SolveScalar, GroundState) {
  const auto& r = scalar_p5();
  EXPECT_TRUE(r.converged);
  EXPECT_GT(r.level, 0.0);
  EXPECT_LE(r.fixed_point_residual.first, 1e-3);
  EXPECT_EQ(r.fixed_point_residual.second, 0.0);
  EXPECT_EQ(r.classification, Classification::semitrivial);
  EXPECT_TRUE(r.pair.second.is_zero());
  EXPECT_LT(rel(quadratic_form(r.pair.first, r.pair.first, {3, 1.0, r.epsilon_mu}), 1.0), 1e-10);
  Grid g = test_grid();
  auto c = sample_coefficients(1.0, 0.0, g, 5.0);
  KernelSpec k{3, 1.0, r.epsilon_mu};
  EXPECT_LT(rel(eval_E(r.pair.first, c, k), r.level), 1e-9);
  EXPECT_LT(rel(eval_E(3.0 * r.pair.first, c, k), r.level), 1e-9);
  // history is monotone
  for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i].level, r.history[i - 1].level);
}

TEST(SolveScalar, ConstantCoefficientScaling) {
  Grid g = test_grid();
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.0);
  auto r2 = solve_scalar(sample_coefficients(2.0, 0.0, g, 5.0), 1.0, spec, fast_opts());
  EXPECT_LT(rel(r2.level / scalar_p5().level, std::pow(2.0, -2.0 / 3.0)), 1e-3);
}

TEST(SolveScalar, FrequencyScalingOnPairedGrids) {
  Grid g1 = test_grid();
  Grid g4 = build_grid(3, 24, 6.0);
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 4.0);
  auto r4 = solve_scalar(sample_coefficients(1.0, 0.0, g4, 5.0), 4.0, spec, fast_opts());
  EXPECT_LT(rel(r4.level / scalar_p5().level, d_lambda_scaling(4.0, 5.0, 3)), 2e-2);
  (void)g1;
}

TEST(MinimizeF, ZeroCouplingIsSemitrivial) {
  auto r = system_p5(0.0);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.classification, Classification::semitrivial);
  EXPECT_LT(rel(r.level, scalar_p5().level), 5e-3);
}

TEST(MinimizeF, StrongCouplingIsFullyNontrivial) {
  auto r = system_p5(2.5);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.classification, Classification::fully_nontrivial);
  EXPECT_LT(r.level, 0.99 * scalar_p5().level);
  EXPECT_LE(r.fixed_point_residual.first, 1e-3);
  EXPECT_LE(r.fixed_point_residual.second, 1e-3);
}

TEST(MinimizeF, RecordInvariants) {
  Grid g = test_grid();
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.0);
  DualFunctional ctx(spec, sample_coefficients(1.0, 2.5, g, 5.0));
  auto r = minimize_F(ctx, fast_opts(), {&scalar_p5(), &scalar_p5()});
  auto e = eval_J(r.pair, ctx);
  EXPECT_LT(std::abs(e.quad_mu + e.quad_nu - 1.0), 1e-10);
  for (double tau : {0.01, 0.5, 7.0}) EXPECT_LT(rel(eval_F(tau * r.pair, ctx), r.level), 1e-10);
  // criticality transfer
  DualPair crit = r.critical_scale * r.pair;
  DualPair gj = grad_J(crit, ctx);
  double gn = std::pow(std::pow(lp_norm(gj.first, 5.0), 5.0) + std::pow(lp_norm(gj.second, 5.0), 5.0), 0.2);
  double pn = std::pow(std::pow(lp_norm(r.primal.first, 5.0), 5.0) + std::pow(lp_norm(r.primal.second, 5.0), 5.0), 0.2);
  EXPECT_LE(gn / pn, 10 * fast_opts().grad_tol);
  EXPECT_LT(std::abs(eval_Jprime_along_self(crit, ctx)) / eval_J(crit, ctx).h_integral, 1e-6);
  // per-restart bookkeeping
  EXPECT_EQ(static_cast<int>(r.restarts.size()), r.restarts_used);
  for (const auto& rr : r.restarts)
    if (rr.admissible) EXPECT_GE(rr.level, r.level);
  for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i].level, r.history[i - 1].level);
  // the solver's level is <= the scalar level
  EXPECT_LE(r.level, scalar_p5().level * (1 + 1e-3));
}

TEST(MinimizeF, BudgetExhausted) {
  Grid g = test_grid();
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.0);
  SolverOptions o = fast_opts();
  o.max_iters = 1;
  auto r = minimize_F(sample_coefficients(1.0, 1.0, g, 5.0), spec, o);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.level, 0.0);
}

TEST(MinimizeF, ThreadCountDoesNotChangeResult) {
  Grid g = test_grid();
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.0);
  DualFunctional ctx(spec, sample_coefficients(1.0, 1.5, g, 5.0));
  SolverOptions o = fast_opts();
  o.threads = 1;
  auto r1 = minimize_F(ctx, o, {&scalar_p5(), &scalar_p5()});
  o.threads = 3;
  auto r3 = minimize_F(ctx, o, {&scalar_p5(), &scalar_p5()});
  EXPECT_EQ(r1.level, r3.level);
  ASSERT_EQ(r1.restarts.size(), r3.restarts.size());
  for (std::size_t i = 0; i < r1.restarts.size(); ++i) EXPECT_EQ(r1.restarts[i].level, r3.restarts[i].level);
}

TEST(MinimizeF, UnequalFrequencies) {
  Grid g = test_grid();
  auto spec = ProblemSpec::create(3, 5.0, 1.0, 1.21);
  auto r = minimize_F(sample_coefficients(1.0, 0.0, g, 5.0), spec, fast_opts());
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.classification, Classification::semitrivial);
}
