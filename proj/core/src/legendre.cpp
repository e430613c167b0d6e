#include "dualhelm/legendre.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace dualhelm {

namespace {

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// log(e^x + e^y)
double log_add_exp(double x, double y) {
  if (x == -INFINITY) return y;
  if (y == -INFINITY) return x;
  double m = std::max(x, y);
  return m + std::log1p(std::exp(-std::abs(x - y)));
}

// 1 / (1 + e^x)
double logistic_neg(double x) {
  if (x > 0) {
    double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

std::string describe(const PointCoeffs& c, double sbar, double tbar) {
  std::ostringstream os;
  os.precision(17);
  os << "(a=" << c.a << ", b=" << c.b << ", p=" << c.p << ", sbar=" << sbar << ", tbar=" << tbar << ")";
  return os.str();
}

double axis_h(const PointCoeffs& c, double x) {
  double pd = c.p_dual();
  return std::pow(c.a, 1.0 - pd) / pd * std::pow(std::abs(x), pd);
}

// Solution s of a |s|^{p-2} s = x.
double axis_inverse(const PointCoeffs& c, double x) {
  return sgn(x) * std::pow(std::abs(x) / c.a, 1.0 / (c.p - 1.0));
}

// log(1 + e^x)
double log1p_exp(double x) {
  if (x > 0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// G(tau) = log(1 + e^tau r) - (1/p) log(1 + 2b e^{p tau/2} + e^{p tau}), r = B/A, i.e. the
// log of the sup objective relative to log A, so tiny gains near the axes are not lost.
struct SupObjective {
  double logr, b, p;

  double value(double tau) const {
    double num = log1p_exp(tau + logr);
    double z = 0.5 * p * tau;
    double den;
    if (z <= 0) {
      double y = std::exp(z);
      den = std::log1p(y * (2.0 * b + y));
    } else {
      double iy = std::exp(-z);
      den = 2.0 * z + std::log1p(iy * (2.0 * b + iy));
    }
    return num - den / p;
  }

  double slope(double tau) const {
    double w = logistic_neg(-logr - tau);
    double z = 0.5 * p * tau;
    double frac;
    if (z <= 0) {
      double y = std::exp(z);
      frac = (b * y + y * y) / (1.0 + 2.0 * b * y + y * y);
    } else {
      double iy = std::exp(-z);
      frac = (b * iy + 1.0) / (iy * iy + 2.0 * b * iy + 1.0);
    }
    return w - frac;
  }

  double curvature(double tau) const {
    double w = logistic_neg(-logr - tau);
    double z = 0.5 * p * tau;
    double dfrac;
    if (z <= 0) {
      double y = std::exp(z);
      double D = 1.0 + 2.0 * b * y + y * y;
      dfrac = y * (b + 2.0 * y + b * y * y) / (D * D);
    } else {
      double iy = std::exp(-z);
      double D = iy * iy + 2.0 * b * iy + 1.0;
      dfrac = (b * iy * iy * iy + 2.0 * iy * iy + b * iy) / (D * D);
    }
    return w * (1.0 - w) - 0.5 * p * dfrac;
  }
};

// Maximises G on [lo, 40]: coarse scan, golden section, Newton on G'.
// lo is -40 unless the maximiser can sit further out (p close to 2).
double maximise_log_sup(const SupObjective& G, const PointCoeffs& c, double sbar, double tbar) {
  constexpr int kScan = 129;
  const double bound = (G.logr - std::log(std::max(1.0, G.b))) / (0.5 * G.p - 1.0);
  const double kLo = std::min(-40.0, bound - 2.0), kHi = 40.0;
  const double dtau = (kHi - kLo) / (kScan - 1);
  int best = 0;
  double best_val = -INFINITY;
  for (int i = 0; i < kScan; ++i) {
    double v = G.value(kLo + i * dtau);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  // G >= 0 with G -> 0 at the lower end; a flat profile there is the axis limit
  if (best == 0 && best_val < 1e-30) return std::max(best_val, 0.0);
  if (best == 0 || best == kScan - 1)
    throw NumericalError("eval_h: maximiser not bracketed on the log axis " + describe(c, sbar, tbar));

  double lo = kLo + (best - 1) * dtau, hi = kLo + (best + 1) * dtau;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = G.value(x1), f2 = G.value(x2);
  while (hi - lo > 1e-6) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = G.value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = G.value(x1);
    }
  }

  double tau = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    double g = G.slope(tau);
    if (g == 0.0) break;
    if (g > 0) lo = tau; else hi = tau;
    double k = G.curvature(tau);
    double next = k < 0 ? tau - g / k : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    bool done = std::abs(next - tau) <= 1e-13 || hi - lo <= 1e-13;
    tau = next;
    if (done) break;
  }
  return G.value(tau);
}

// Ray equation for the primal point: with sigma = e^tau = t/s and r = B/A <= 1,
// phi(tau) = (p/2-1) tau + log(y+b) - log(1+b y) - log r, y = e^{p tau/2}.
double solve_ray(const PointCoeffs& c, double r, double sbar, double tbar) {
  if (r == 1.0) return 0.0;
  const double p = c.p, b = c.b;
  const double logb = std::log(b);
  const double logr = std::log(r);
  auto phi = [&](double tau) {
    double z = 0.5 * p * tau;
    return (0.5 * p - 1.0) * tau + log_add_exp(z, logb) - log_add_exp(0.0, logb + z) - logr;
  };
  auto dphi = [&](double tau) {
    double z = 0.5 * p * tau;
    return (0.5 * p - 1.0) + 0.5 * p * (logistic_neg(logb - z) - logistic_neg(-(logb + z)));
  };

  double hi = 0.0;
  double lo = std::min(-1.0, (logr - logb) / (0.5 * p - 1.0) - 1.0);
  for (int k = 0; k < 64 && phi(lo) > 0; ++k) lo *= 2.0;
  if (phi(lo) > 0)
    throw NumericalError("grad_h: ray equation not bracketed " + describe(c, sbar, tbar));

  double slope0 = (p - 1.0 - b) / (1.0 + b);
  double tau = slope0 > 0 ? logr / slope0 : 0.5 * (lo + hi);
  if (!(tau > lo && tau < hi)) tau = 0.5 * (lo + hi);
  double res = 0.0;
  for (int it = 0; it < 300; ++it) {
    res = phi(tau);
    if (res == 0.0) return tau;
    if (res > 0) hi = tau; else lo = tau;
    double d = dphi(tau);
    double next = d > 0 ? tau - res / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    double tol = 4e-16 * std::max(1.0, std::abs(tau));
    if (std::abs(next - tau) <= tol || hi - lo <= tol) return next;
    tau = next;
  }
  std::ostringstream os;
  os << "grad_h: ray solve did not converge, last residual " << res << " " << describe(c, sbar, tbar);
  throw NumericalError(os.str());
}

}  // namespace

void PointCoeffs::validate() const {
  if (!(p > 2.0)) throw InvalidArgument("PointCoeffs: p must be > 2");
  if (!(a > 0.0)) throw InvalidArgument("PointCoeffs: a must be > 0");
  if (!(b >= 0.0)) throw InvalidArgument("PointCoeffs: b must be >= 0");
  if (!(b <= p - 1.0)) throw InvalidArgument("PointCoeffs: b exceeds p-1");
}

PointCoeffs PointCoeffs::create(double a, double b, double p) {
  PointCoeffs c{a, b, p};
  c.validate();
  return c;
}

double eval_f(const PointCoeffs& c, double s, double t) {
  double as = std::abs(s), at = std::abs(t);
  double hp = 0.5 * c.p;
  double cross = (as == 0.0 || at == 0.0) ? 0.0 : 2.0 * c.b * std::pow(as * at, hp);
  return c.a / c.p * (std::pow(as, c.p) + cross + std::pow(at, c.p));
}

Vec2 grad_f(const PointCoeffs& c, double s, double t) {
  double as = std::abs(s), at = std::abs(t);
  double hp = 0.5 * c.p;
  Vec2 g;
  if (as > 0.0) g.s = c.a * (std::pow(as, c.p - 1.0) + c.b * std::pow(as, hp - 1.0) * std::pow(at, hp)) * sgn(s);
  if (at > 0.0) g.t = c.a * (std::pow(at, c.p - 1.0) + c.b * std::pow(at, hp - 1.0) * std::pow(as, hp)) * sgn(t);
  return g;
}

HessianInvariants hessian_f(const PointCoeffs& c, double s, double t) {
  if (s == 0.0 || t == 0.0) throw InvalidArgument("hessian_f: requires s != 0 and t != 0");
  const double p = c.p, b = c.b, a = c.a;
  double as = std::abs(s), at = std::abs(t);
  double hp = 0.5 * p;
  double sh = std::pow(as, hp), th = std::pow(at, hp);
  HessianInvariants h;
  h.trace = a * (p - 1.0) * (std::pow(as, p - 2.0) + std::pow(at, p - 2.0)) +
            a * 0.5 * b * (p - 2.0) * (std::pow(as, hp - 2.0) * th + std::pow(at, hp - 2.0) * sh);
  h.det = a * a * (p - 1.0) *
          ((p - 1.0 - b * b) * sh * th + 0.5 * b * (p - 2.0) * (std::pow(as, p) + std::pow(at, p))) *
          std::pow(as, hp - 2.0) * std::pow(at, hp - 2.0);
  return h;
}

Hessian hessian_f_matrix(const PointCoeffs& c, double s, double t) {
  if (s == 0.0 || t == 0.0) throw InvalidArgument("hessian_f_matrix: requires s != 0 and t != 0");
  const double p = c.p, b = c.b, a = c.a;
  double as = std::abs(s), at = std::abs(t);
  double hp = 0.5 * p;
  Hessian h;
  h.ss = a * ((p - 1.0) * std::pow(as, p - 2.0) + b * (hp - 1.0) * std::pow(as, hp - 2.0) * std::pow(at, hp));
  h.tt = a * ((p - 1.0) * std::pow(at, p - 2.0) + b * (hp - 1.0) * std::pow(at, hp - 2.0) * std::pow(as, hp));
  h.st = a * b * hp * std::pow(as, hp - 1.0) * std::pow(at, hp - 1.0) * sgn(s) * sgn(t);
  return h;
}

double eval_h(const PointCoeffs& c, double sbar, double tbar) {
  double A = std::abs(sbar), B = std::abs(tbar);
  if (B > A) std::swap(A, B);
  if (A == 0.0) return 0.0;
  if (B <= 1e-14 * A) return axis_h(c, A);
  const double p = c.p, pd = c.p_dual();
  const double pre = std::pow(c.a, 1.0 - pd) / pd;
  if (c.b == 0.0) return pre * (std::pow(A, pd) + std::pow(B, pd));
  if (c.b == 1.0) {
    double q = p / (p - 2.0);
    return pre * std::pow(std::pow(A, q) + std::pow(B, q), (p - 2.0) / (p - 1.0));
  }
  SupObjective G{std::log(B / A), c.b, p};
  double g = maximise_log_sup(G, c, sbar, tbar);
  return pre * std::pow(A, pd) * std::exp(pd * g);
}

Vec2 grad_h(const PointCoeffs& c, double sbar, double tbar) {
  double A = std::abs(sbar), B = std::abs(tbar);
  if (A == 0.0 && B == 0.0) return {};
  if (B == 0.0) return {axis_inverse(c, sbar), 0.0};
  if (A == 0.0) return {0.0, axis_inverse(c, tbar)};
  const double p = c.p;
  if (c.b == 0.0) return {axis_inverse(c, sbar), axis_inverse(c, tbar)};
  if (c.b == 1.0) {
    double q = p / (p - 2.0);
    double pre = std::pow(c.a * (std::pow(A, q) + std::pow(B, q)), 1.0 - c.p_dual());
    double e = 2.0 / (p - 2.0);
    return {pre * std::pow(A, e) * sgn(sbar), pre * std::pow(B, e) * sgn(tbar)};
  }
  bool swapped = B > A;
  if (swapped) std::swap(A, B);
  double tau = solve_ray(c, B / A, sbar, tbar);
  double y = std::exp(0.5 * p * tau);
  double s = std::pow(A / (c.a * (1.0 + c.b * y)), 1.0 / (p - 1.0));
  double t = std::exp(tau) * s;
  if (swapped) std::swap(s, t);
  return {s * sgn(sbar), t * sgn(tbar)};
}

double eval_h_pm(double b_const, double p, double sbar, double tbar) {
  PointCoeffs c = PointCoeffs::create(1.0, b_const, p);
  return eval_h(c, sbar, tbar);
}

Conjugate conjugate(const PointCoeffs& c, double sbar, double tbar) {
  Conjugate out;
  out.primal = grad_h(c, sbar, tbar);
  out.h = out.primal.s * sbar + out.primal.t * tbar - eval_f(c, out.primal.s, out.primal.t);
  return out;
}

}  // namespace dualhelm
