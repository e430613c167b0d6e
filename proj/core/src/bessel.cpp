#include "dualhelm/bessel.hpp"

#include <cmath>
#include <numbers>

#include "dualhelm/error.hpp"

namespace dualhelm {

namespace {

// Below this argument the power series (in extended precision) is used.
constexpr double kSwitch = 16.0;

using Wide = long double;

// J0 series and the harmonic-weighted series of Y0.
void small_series(double z, Wide& j0, Wide& ysum) {
  const Wide q = static_cast<Wide>(z) * z / 4;
  Wide term = 1, harmonic = 0;
  j0 = 1;
  ysum = 0;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<Wide>(k) * k);
    harmonic += static_cast<Wide>(1) / k;
    j0 += term;
    ysum -= harmonic * term;
    if (std::fabs(term) * (1 + harmonic) < 1e-22L && k * k > q) break;
  }
}

// Hankel asymptotic expansion: P, Q with J0 = sqrt(2/(pi z)) (P cos chi - Q sin chi).
void asymptotic(double z, double& P, double& Q) {
  P = 1.0;
  Q = 0.0;
  double term = 1.0;
  double prev = INFINITY;
  for (int k = 1; k < 200; ++k) {
    double m = 2.0 * k - 1.0;
    term *= -(m * m) / (8.0 * k * z);
    if (std::abs(term) >= prev) break;
    prev = std::abs(term);
    // odd k feed Q, even k feed P, with alternating signs
    switch (k % 4) {
      case 1: Q += term; break;
      case 2: P -= term; break;
      case 3: Q -= term; break;
      case 0: P += term; break;
    }
    if (prev < 1e-17) break;
  }
}

}  // namespace

double bessel_j0(double z) {
  z = std::abs(z);
  if (z < kSwitch) {
    Wide j0, ys;
    small_series(z, j0, ys);
    return static_cast<double>(j0);
  }
  double P, Q;
  asymptotic(z, P, Q);
  double chi = z - std::numbers::pi / 4;
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (P * std::cos(chi) - Q * std::sin(chi));
}

double bessel_y0(double z) {
  if (!(z > 0.0)) throw InvalidArgument("bessel_y0 requires z > 0");
  if (z < kSwitch) {
    Wide j0, ys;
    small_series(z, j0, ys);
    const Wide pi = 3.14159265358979323846264338327950288L;
    const Wide gamma = 0.57721566490153286060651209008240243L;
    Wide y = 2 / pi * ((std::log(static_cast<Wide>(z) / 2) + gamma) * j0 + ys);
    return static_cast<double>(y);
  }
  double P, Q;
  asymptotic(z, P, Q);
  double chi = z - std::numbers::pi / 4;
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (P * std::sin(chi) + Q * std::cos(chi));
}

}  // namespace dualhelm
