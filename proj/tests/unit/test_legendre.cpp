#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "conjugate_grid.hpp"
#include "dualhelm/legendre.hpp"

using namespace dualhelm;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

struct Sampler {
  std::mt19937_64 rng{20240611};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  PointCoeffs coeffs(double p_lo = 2.2, double p_hi = 8.0) {
    double p = uniform(p_lo, p_hi);
    return PointCoeffs{uniform(0.2, 5.0), uniform(0.0, p - 1.0), p};
  }
};

}  // namespace

TEST(PointCoeffs, Validation) {
  EXPECT_NO_THROW(PointCoeffs::create(1.0, 3.0, 4.0));
  EXPECT_THROW(PointCoeffs::create(0.0, 1.0, 4.0), InvalidArgument);
  EXPECT_THROW(PointCoeffs::create(1.0, 3.5, 4.0), InvalidArgument);
  EXPECT_THROW(PointCoeffs::create(1.0, -0.1, 4.0), InvalidArgument);
  EXPECT_THROW(PointCoeffs::create(1.0, 0.0, 2.0), InvalidArgument);
}

TEST(EvalF, Examples) {
  EXPECT_DOUBLE_EQ(eval_f({1, 1, 4}, 1, 1), 1.0);
  EXPECT_EQ(eval_f({1.3, 0.7, 3.1}, 0, 0), 0.0);
  EXPECT_DOUBLE_EQ(eval_f({2, 0.5, 4}, 1, 2), 10.5);
}

TEST(GradF, Examples) {
  Vec2 g = grad_f({1, 1, 4}, 1, 1);
  EXPECT_DOUBLE_EQ(g.s, 2.0);
  EXPECT_DOUBLE_EQ(g.t, 2.0);
  g = grad_f({1, 2.5, 4}, -1.5, 0);
  EXPECT_DOUBLE_EQ(g.s, -1.5 * 1.5 * 1.5);
  EXPECT_EQ(g.t, 0.0);
  g = grad_f({1, 3, 4}, 1, 2);
  EXPECT_DOUBLE_EQ(g.s, 13.0);
  EXPECT_DOUBLE_EQ(g.t, 14.0);
  g = grad_f({1, 1, 3}, 0, 0);
  EXPECT_EQ(g.s, 0.0);
  EXPECT_EQ(g.t, 0.0);
}

TEST(GradF, FiniteDifferences) {
  Sampler S;
  for (int k = 0; k < 500; ++k) {
    PointCoeffs c = S.coeffs();
    double s = S.uniform(0.3, 3.0) * (S.uniform(0, 1) < 0.5 ? -1 : 1);
    double t = S.uniform(0.3, 3.0) * (S.uniform(0, 1) < 0.5 ? -1 : 1);
    const double h = 1e-5;
    double fs = (eval_f(c, s + h, t) - eval_f(c, s - h, t)) / (2 * h);
    double ft = (eval_f(c, s, t + h) - eval_f(c, s, t - h)) / (2 * h);
    Vec2 g = grad_f(c, s, t);
    EXPECT_LT(rel(fs, g.s), 1e-6);
    EXPECT_LT(rel(ft, g.t), 1e-6);
  }
}

TEST(HessianF, Examples) {
  auto h = hessian_f({1, 1, 4}, 1, 1);
  EXPECT_DOUBLE_EQ(h.trace, 8.0);
  EXPECT_DOUBLE_EQ(h.det, 12.0);
  h = hessian_f({1, 0, 4}, 1, 2);
  EXPECT_DOUBLE_EQ(h.trace, 15.0);
  h = hessian_f({1, 3, 4}, 1, 1);
  EXPECT_NEAR(h.det, 0.0, 1e-12);
  EXPECT_THROW(hessian_f({1, 1, 4}, 0, 1), InvalidArgument);
  EXPECT_THROW(hessian_f({1, 1, 4}, 1, 0), InvalidArgument);
}

TEST(HessianF, DiagonalFactorization) {
  // at (1,1) det = a^2 (p-1)(b+1)(p-1-b)
  Sampler S;
  for (int k = 0; k < 200; ++k) {
    PointCoeffs c = S.coeffs();
    double expect = c.a * c.a * (c.p - 1) * (c.b + 1) * (c.p - 1 - c.b);
    EXPECT_NEAR(hessian_f(c, 1, 1).det, expect, 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST(HessianF, MatchesMatrixEntries) {
  Sampler S;
  for (int k = 0; k < 200; ++k) {
    PointCoeffs c = S.coeffs();
    double s = S.uniform(-3, 3), t = S.uniform(-3, 3);
    auto inv = hessian_f(c, s, t);
    auto m = hessian_f_matrix(c, s, t);
    EXPECT_LT(rel(m.ss + m.tt, inv.trace), 1e-12);
    EXPECT_NEAR(m.ss * m.tt - m.st * m.st, inv.det, 1e-10 * (m.ss * m.tt + m.st * m.st));
  }
}

TEST(HessianF, PositiveOffDiagonal) {
  Sampler S;
  for (int k = 0; k < 10000; ++k) {
    PointCoeffs c = S.coeffs();
    double s = S.uniform(-5, 5), t = S.uniform(-5, 5);
    if (std::abs(std::abs(s) - std::abs(t)) < 1e-6 || s * t == 0) continue;
    auto h = hessian_f(c, s, t);
    EXPECT_GT(h.trace, 0.0);
    EXPECT_GT(h.det, 0.0) << "a=" << c.a << " b=" << c.b << " p=" << c.p << " s=" << s << " t=" << t;
  }
}

TEST(EvalH, Examples) {
  EXPECT_NEAR(eval_h({1, 0.7, 4}, 1, 0), 0.75, 1e-15);
  EXPECT_NEAR(eval_h({1, 1, 4}, 1, 1), 0.75 * std::cbrt(4.0), 1e-12);
  EXPECT_NEAR(eval_h({1, 1, 4}, 1, 1), 1.1905508, 1e-7);
  EXPECT_NEAR(eval_h({1, 3, 4}, 1, 1), 1.5 * std::pow(4.0, -1.0 / 3.0), 1e-12);
  EXPECT_NEAR(eval_h({1, 3, 4}, 1, 1), 0.9449412, 1e-6);
  EXPECT_EQ(eval_h({1.7, 2.1, 5}, 0, 0), 0.0);
}

TEST(EvalH, BruteForceConjugate) {
  double oracle = oracle::brute_force_conjugate(1.0, 0.5, 5.0, 2.0, 1.0);
  EXPECT_LT(rel(eval_h({1, 0.5, 5}, 2, 1), oracle), 1e-5);
  // a few more off-closed-form points
  for (auto [a, b, p, s, t] : {std::tuple{2.0, 0.3, 3.0, -1.0, 0.4}, std::tuple{0.5, 4.0, 6.0, 1.0, 1.3},
                               std::tuple{1.0, 2.0, 2.5, 0.2, 3.0}}) {
    double o = oracle::brute_force_conjugate(a, b, p, s, t);
    EXPECT_LT(rel(eval_h({a, b, p}, s, t), o), 1e-5) << a << " " << b << " " << p;
  }
}

TEST(EvalH, ClosedFormsRandom) {
  Sampler S;
  for (int k = 0; k < 200; ++k) {
    PointCoeffs c = S.coeffs();
    double pd = c.p_dual();
    double sb = S.uniform(-4, 4), tb = S.uniform(-4, 4);
    double axis = std::pow(c.a, 1 - pd) / pd * std::pow(std::abs(sb), pd);
    EXPECT_LT(rel(eval_h(c, sb, 0.0), axis), 1e-9);
    // general-b route on the diagonal
    double diag = 2 * std::pow(c.a, 1 - pd) / pd * std::pow(1 + c.b, 1 - pd) * std::pow(std::abs(sb), pd);
    EXPECT_LT(rel(eval_h(c, sb, -sb), diag), 1e-9);
    PointCoeffs one{c.a, 1.0, c.p};
    double q = c.p / (c.p - 2);
    double closed = std::pow(c.a, 1 - pd) / pd *
                    std::pow(std::pow(std::abs(sb), q) + std::pow(std::abs(tb), q), (c.p - 2) / (c.p - 1));
    EXPECT_LT(rel(eval_h(one, sb, tb), closed), 1e-9);
  }
}

TEST(EvalH, GeneralRouteMatchesFastPaths) {
  // b slightly off 0 and 1 uses the sup route; continuity in b checks it
  Sampler S;
  for (int k = 0; k < 200; ++k) {
    PointCoeffs c = S.coeffs(2.2, 8.0);
    double sb = S.uniform(-4, 4), tb = S.uniform(-4, 4);
    PointCoeffs near1{c.a, 1.0 + 1e-11, c.p}, exact1{c.a, 1.0, c.p};
    EXPECT_LT(rel(eval_h(near1, sb, tb), eval_h(exact1, sb, tb)), 1e-9);
    PointCoeffs near0{c.a, 1e-12, c.p}, exact0{c.a, 0.0, c.p};
    EXPECT_LT(rel(eval_h(near0, sb, tb), eval_h(exact0, sb, tb)), 1e-9);
  }
}

TEST(EvalH, Symmetry) {
  Sampler S;
  for (int k = 0; k < 500; ++k) {
    PointCoeffs c = S.coeffs();
    double sb = S.uniform(-4, 4), tb = S.uniform(-4, 4);
    double h = eval_h(c, sb, tb);
    EXPECT_EQ(h, eval_h(c, tb, sb));
    EXPECT_EQ(h, eval_h(c, -sb, tb));
    EXPECT_EQ(h, eval_h(c, sb, -tb));
  }
}

TEST(EvalH, TwoSidedBound) {
  Sampler S;
  for (int k = 0; k < 2000; ++k) {
    PointCoeffs c = S.coeffs();
    double pd = c.p_dual();
    double sb = S.uniform(-4, 4), tb = S.uniform(-4, 4);
    double m = std::pow(std::abs(sb), pd) + std::pow(std::abs(tb), pd);
    double lo = std::pow(c.a * (1 + c.b), 1 - pd) / pd * m;
    double hi = std::pow(c.a, 1 - pd) / pd * m;
    double h = eval_h(c, sb, tb);
    EXPECT_GE(h, lo * (1 - 1e-12));
    EXPECT_LE(h, hi * (1 + 1e-12));
  }
}

TEST(EvalH, MonotonicityChain) {
  // a_+^{1-p'} h_+ <= h <= a_-^{1-p'} h_-
  Sampler S;
  for (int k = 0; k < 1000; ++k) {
    double p = S.uniform(2.2, 8.0);
    double am = S.uniform(0.2, 2.0), ap = am + S.uniform(0.0, 3.0);
    double bm = S.uniform(0.0, p - 1), bp = bm + S.uniform(0.0, p - 1 - bm);
    PointCoeffs c{S.uniform(am, ap), S.uniform(bm, bp), p};
    double pd = c.p_dual();
    double sb = S.uniform(-4, 4), tb = S.uniform(-4, 4);
    double h = eval_h(c, sb, tb);
    EXPECT_LE(std::pow(ap, 1 - pd) * eval_h_pm(bp, p, sb, tb), h * (1 + 1e-12));
    EXPECT_GE(std::pow(am, 1 - pd) * eval_h_pm(bm, p, sb, tb), h * (1 - 1e-12));
  }
}

TEST(GradH, Examples) {
  Vec2 g = grad_h({1, 1, 4}, 2, 2);
  EXPECT_NEAR(g.s, 1.0, 1e-14);
  EXPECT_NEAR(g.t, 1.0, 1e-14);
  g = grad_h({1.3, 0.4, 3.3}, 0, 0);
  EXPECT_EQ(g.s, 0.0);
  EXPECT_EQ(g.t, 0.0);
  g = grad_h({1, 3, 4}, 13, 14);
  EXPECT_NEAR(g.s, 1.0, 1e-12);
  EXPECT_NEAR(g.t, 2.0, 1e-12);
}

TEST(GradH, RoundTrip) {
  Sampler S;
  for (int k = 0; k < 10000; ++k) {
    PointCoeffs c = k % 3 == 0 ? S.coeffs(2.05, 4.0) : S.coeffs();
    double s = S.uniform(-5, 5), t = S.uniform(-5, 5);
    if (k % 5 == 0) t = S.uniform(-1e-6, 1e-6);  // axis-adjacent
    if (k % 7 == 0) s = 0.0;
    Vec2 g = grad_f(c, s, t);
    Vec2 r = grad_h(c, g.s, g.t);
    ASSERT_NEAR(r.s, s, 1e-9) << "a=" << c.a << " b=" << c.b << " p=" << c.p << " s=" << s << " t=" << t;
    ASSERT_NEAR(r.t, t, 1e-9) << "a=" << c.a << " b=" << c.b << " p=" << c.p << " s=" << s << " t=" << t;
  }
}

TEST(GradH, BoundaryCouplingDiagonal) {
  // b = p-1: the Hessian degenerates on the diagonal
  for (double p : {3.0, 4.0, 5.5}) {
    PointCoeffs c{1.0, p - 1.0, p};
    for (double s : {0.5, 1.0, 2.0}) {
      Vec2 g = grad_f(c, s, s);
      Vec2 r = grad_h(c, g.s, g.t);
      EXPECT_NEAR(r.s, s, 1e-9);
      EXPECT_NEAR(r.t, s, 1e-9);
    }
  }
}

TEST(GradH, EulerIdentity) {
  Sampler S;
  for (int k = 0; k < 10000; ++k) {
    PointCoeffs c = k % 3 == 0 ? S.coeffs(2.05, 4.0) : S.coeffs();
    double sb = S.uniform(-5, 5), tb = S.uniform(-5, 5);
    if (k % 5 == 0) tb *= 1e-7;
    Vec2 g = grad_h(c, sb, tb);
    double h = eval_h(c, sb, tb);
    double euler = (g.s * sb + g.t * tb) / c.p_dual();
    ASSERT_LT(rel(euler, h), 1e-9) << "a=" << c.a << " b=" << c.b << " p=" << c.p << " sb=" << sb
                                   << " tb=" << tb;
  }
}

TEST(GradH, ClosedFormB1) {
  Sampler S;
  for (int k = 0; k < 500; ++k) {
    PointCoeffs c = S.coeffs();
    c.b = 1.0;
    double sb = S.uniform(-4, 4), tb = S.uniform(-4, 4);
    double q = c.p / (c.p - 2);
    double pd = c.p_dual();
    double pre = std::pow(c.a * (std::pow(std::abs(sb), q) + std::pow(std::abs(tb), q)), 1 - pd);
    double es = pre * std::pow(std::abs(sb), (4 - c.p) / (c.p - 2)) * sb;
    double et = pre * std::pow(std::abs(tb), (4 - c.p) / (c.p - 2)) * tb;
    Vec2 g = grad_h(c, sb, tb);
    EXPECT_LT(rel(g.s, es), 1e-12);
    EXPECT_LT(rel(g.t, et), 1e-12);
  }
}

TEST(Conjugate, MatchesSupRoute) {
  Sampler S;
  for (int k = 0; k < 2000; ++k) {
    PointCoeffs c = S.coeffs();
    double sb = S.uniform(-4, 4), tb = S.uniform(-4, 4);
    Conjugate cj = conjugate(c, sb, tb);
    EXPECT_LT(rel(cj.h, eval_h(c, sb, tb)), 1e-11);
    Vec2 g = grad_h(c, sb, tb);
    EXPECT_EQ(cj.primal.s, g.s);
    EXPECT_EQ(cj.primal.t, g.t);
  }
}

TEST(EvalHpm, Examples) {
  EXPECT_NEAR(eval_h_pm(1.0, 4.0, 1, 1), 0.75 * std::cbrt(4.0), 1e-12);
  for (double b : {0.0, 0.3, 2.0, 4.0}) {
    double pd = 5.0 / 4.0;
    EXPECT_NEAR(eval_h_pm(b, 5.0, 1.7, 0), std::pow(1.7, pd) / pd, 1e-13);
  }
  double v = eval_h_pm(2.0, 5.0, 0.8, 1.9);
  EXPECT_LT(rel(eval_h_pm(2.0, 5.0, 3 * 0.8, 3 * 1.9), std::pow(3.0, 1.25) * v), 1e-12);
  EXPECT_THROW(eval_h_pm(4.5, 5.0, 1, 1), InvalidArgument);
}

TEST(Convexity, StrictSupportingLine) {
  Sampler S;
  for (int k = 0; k < 5000; ++k) {
    PointCoeffs c = S.coeffs();
    double s1 = S.uniform(-3, 3), t1 = S.uniform(-3, 3);
    double s2 = S.uniform(-1, 1), t2 = S.uniform(-1, 1);
    Vec2 g = grad_f(c, s1, t1);
    double lhs = eval_f(c, s1 + s2, t1 + t2);
    double rhs = eval_f(c, s1, t1) + s2 * g.s + t2 * g.t;
    EXPECT_GT(lhs, rhs - 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}
