#pragma once

#include <memory>

#include "dualhelm/domain.hpp"
#include "dualhelm/kernel.hpp"
#include "dualhelm/legendre.hpp"

namespace dualhelm {

struct EnergyBreakdown {
  double h_integral = 0.0;  // int h(x, ubar, vbar)
  double quad_mu = 0.0;     // int ubar Psi_mu * ubar
  double quad_nu = 0.0;     // int vbar Psi_nu * vbar
  double J_value = 0.0;
  double F_value = 0.0;
};

/// Problem, coefficients and the two kernels on a common grid. Owns a
/// Convolver, so an instance must not be shared between threads.
class DualFunctional {
 public:
  /// A negative epsilon selects default_epsilon for that frequency.
  DualFunctional(const ProblemSpec& spec, CoefficientField coeffs, double epsilon_mu = -1.0,
                 double epsilon_nu = -1.0);

  const ProblemSpec& spec() const { return spec_; }
  const CoefficientField& coeffs() const { return coeffs_; }
  const Grid& grid() const { return coeffs_.grid(); }
  const KernelSpec& kernel_mu() const { return kmu_; }
  const KernelSpec& kernel_nu() const { return knu_; }
  Convolver& convolver() const { return *conv_; }

  PointCoeffs point(std::size_t i) const { return {coeffs_.a[i], coeffs_.b[i], spec_.p}; }

  /// A fresh instance with the same data and its own Convolver.
  DualFunctional clone() const;

 private:
  ProblemSpec spec_;
  CoefficientField coeffs_;
  KernelSpec kmu_, knu_;
  std::unique_ptr<Convolver> conv_;
};

/// int h(x, ubar, vbar) dx with h from eval_h pointwise.
double h_integral(const DualPair& pair, const DualFunctional& ctx);

EnergyBreakdown eval_J(const DualPair& pair, const DualFunctional& ctx);
/// p' int h - (Q_mu + Q_nu)
double eval_Jprime_along_self(const DualPair& pair, const DualFunctional& ctx);
/// (d_sbar h - Psi_mu * ubar, d_tbar h - Psi_nu * vbar)
DualPair grad_J(const DualPair& pair, const DualFunctional& ctx);
/// Returns +inf for the zero pair or a nonpositive denominator.
double eval_F(const DualPair& pair, const DualFunctional& ctx);

/// ((p-2)/(2p)) [ numer^{1/p'} / denom^{1/2} ]^{2p/(p-2)} with numer = p' int h;
/// +inf unless numer > 0 and denom > 0.
double quotient_level(double numer, double denom, double p);

double eval_E(const Field& ubar, const CoefficientField& coeffs, const KernelSpec& kernel, Convolver& conv);
double eval_E(const Field& ubar, const CoefficientField& coeffs, const KernelSpec& kernel);
/// eval_E with a = 1.
double eval_D(const Field& ubar, double p, const KernelSpec& kernel);

/// z_lambda(x) = lambda^{(N+2)/4} z(c + sqrt(lambda)(x - c)) on the same box (c the centre),
/// by trigonometric interpolation; samples mapped outside the box are zero.
Field rescale_z(const Field& z, double lambda);
/// The same rescaling realised exactly on the box L/sqrt(lambda) with the same n.
Field rescale_to_paired_grid(const Field& z, double lambda);

/// lambda^{p/(p-2) - N/2}
double d_lambda_scaling(double lambda, double p, int N);

}  // namespace dualhelm
