#pragma once

#include <utility>

#include "dualhelm/error.hpp"

namespace dualhelm {

/// Coefficients (a(x), b(x)) and exponent p at a fixed point.
struct PointCoeffs {
  double a = 1.0;
  double b = 0.0;
  double p = 4.0;

  double p_dual() const { return p / (p - 1.0); }

  /// Throws InvalidArgument unless a > 0, 0 <= b <= p-1, p > 2.
  void validate() const;
  static PointCoeffs create(double a, double b, double p);
};

struct Vec2 {
  double s = 0.0;
  double t = 0.0;
};

struct HessianInvariants {
  double trace = 0.0;
  double det = 0.0;
};

/// f = (a/p)(|s|^p + 2b|s|^{p/2}|t|^{p/2} + |t|^p)
double eval_f(const PointCoeffs& c, double s, double t);
Vec2 grad_f(const PointCoeffs& c, double s, double t);
/// Requires s != 0 and t != 0.
HessianInvariants hessian_f(const PointCoeffs& c, double s, double t);

/// Legendre transform h(sbar, tbar) via the 1-D sup on the log axis.
double eval_h(const PointCoeffs& c, double sbar, double tbar);
/// Inverse of grad_f: the unique (s, t) with grad_f(s, t) = (sbar, tbar).
Vec2 grad_h(const PointCoeffs& c, double sbar, double tbar);
/// h with a = 1 and constant coupling b.
double eval_h_pm(double b_const, double p, double sbar, double tbar);

/// h and grad h from a single primal solve: h = s sbar + t tbar - f(s, t).
struct Conjugate {
  double h = 0.0;
  Vec2 primal;
};
Conjugate conjugate(const PointCoeffs& c, double sbar, double tbar);

/// Entries of the Hessian of f; finite for s != 0, t != 0.
struct Hessian {
  double ss = 0.0, st = 0.0, tt = 0.0;
};
Hessian hessian_f_matrix(const PointCoeffs& c, double s, double t);

}  // namespace dualhelm
