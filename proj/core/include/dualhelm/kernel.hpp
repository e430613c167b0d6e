#pragma once

#include <complex>
#include <functional>
#include <memory>

#include "dualhelm/domain.hpp"

namespace dualhelm {

/// Helmholtz kernel parameters: dimension, frequency lambda, absorption epsilon.
struct KernelSpec {
  int N = 3;
  double lambda = 1.0;
  double epsilon = 0.0;

  void validate() const;
};

/// Psi_lambda(r) = Re Phi_lambda(r) in closed form.
double psi_realspace(const KernelSpec& spec, double r);

/// Phi_lambda(r) = (i/4) (lambda / (4 pi^2 r^2))^{(N-2)/4} H^{(1)}_{(N-2)/2}(sqrt(lambda) r).
std::complex<double> phi_hankel(int N, double lambda, double r);

/// Re 1 / (|xi|^2 - lambda - i epsilon). With epsilon = 0 the resonant shell is rejected.
double kernel_symbol(const KernelSpec& spec, double xi_sq);

/// Half the median spacing of the distinct lattice values of |xi|^2 next to lambda
/// (four below, four above).
double default_epsilon(const Grid& grid, double lambda);

/// Distance of the lattice to the resonant shell.
struct ShellReport {
  double min_gap = 0.0;        // min over lattice of | |xi|^2 - lambda |
  double guard = 0.0;          // 1e-9 lambda
  bool guard_ok = true;
  double suggested_box_length = 0.0;
};
ShellReport shell_report(const Grid& grid, double lambda);

/// Throws InvalidArgument (with a suggested box length) when epsilon = 0 and the
/// lattice meets the shell.
void check_shell_guard(const Grid& grid, const KernelSpec& spec);

/// Spectral convolution with Psi_lambda on a fixed grid. Not thread-safe; use
/// one instance per thread.
class Convolver {
 public:
  explicit Convolver(const Grid& grid);
  ~Convolver();
  Convolver(Convolver&&) noexcept;
  Convolver& operator=(Convolver&&) noexcept;
  Convolver(const Convolver&) = delete;
  Convolver& operator=(const Convolver&) = delete;

  const Grid& grid() const;

  Field convolve(const Field& f, const KernelSpec& spec);
  /// Applies an arbitrary radial Fourier multiplier m(|xi|^2).
  Field apply_multiplier(const Field& f, const std::function<double(double)>& m);
  /// int f (Psi * g) dx, computed in frequency space.
  double quadratic_form(const Field& f, const Field& g, const KernelSpec& spec);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Field convolve(const Field& f, const KernelSpec& spec);
double quadratic_form(const Field& f, const Field& g, const KernelSpec& spec);

}  // namespace dualhelm
