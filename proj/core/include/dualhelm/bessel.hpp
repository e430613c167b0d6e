#pragma once

namespace dualhelm {

/// Bessel functions of order zero; absolute error <= 1e-10 on (0, 1e3].
double bessel_j0(double z);
/// Requires z > 0.
double bessel_y0(double z);

}  // namespace dualhelm
