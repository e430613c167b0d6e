#include "dualhelm/functionals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "dualhelm/error.hpp"

namespace dualhelm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

KernelSpec make_kernel(const ProblemSpec& spec, const Grid& grid, double lambda, double eps) {
  KernelSpec k{spec.N, lambda, eps < 0.0 ? default_epsilon(grid, lambda) : eps};
  k.validate();
  check_shell_guard(grid, k);
  return k;
}

// Row-major tensor layout: axis d has stride n^(N-1-d).
std::size_t axis_stride(const Grid& g, int d) {
  std::size_t s = 1;
  for (int k = d + 1; k < g.dim(); ++k) s *= static_cast<std::size_t>(g.n_per_dim());
  return s;
}

// Periodic trigonometric interpolant weights: value at u of the samples at j*h.
std::vector<double> interpolation_matrix(int n, double L, const std::vector<double>& targets) {
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  const double h = L / n;
  const int kmax = (n - 1) / 2;
  for (int i = 0; i < n; ++i) {
    double u = targets[i];
    if (!(u >= 0.0 && u < L)) continue;  // outside the box: zero
    for (int j = 0; j < n; ++j) {
      double theta = 2.0 * std::numbers::pi * (u - j * h) / L;
      double s = 1.0;
      for (int k = 1; k <= kmax; ++k) s += 2.0 * std::cos(k * theta);
      if (n % 2 == 0) s += std::cos(0.5 * n * theta);
      m[static_cast<std::size_t>(i) * n + j] = s / n;
    }
  }
  return m;
}

void apply_along_axis(std::vector<double>& data, const Grid& g, int d, const std::vector<double>& m) {
  const int n = g.n_per_dim();
  const std::size_t stride = axis_stride(g, d);
  const std::size_t block = stride * n;
  std::vector<double> line(n), out(n);
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (int j = 0; j < n; ++j) line[j] = data[base + off + j * stride];
      for (int i = 0; i < n; ++i) {
        const double* row = &m[static_cast<std::size_t>(i) * n];
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * line[j];
        out[i] = acc;
      }
      for (int i = 0; i < n; ++i) data[base + off + i * stride] = out[i];
    }
  }
}

// Fraction of spectral energy with some |k_d| beyond the cutoff index.
double energy_beyond(const Field& z, double cutoff) {
  const Grid& g = z.grid();
  Convolver conv(g);
  const double dk = g.frequency_step();
  // radial cutoff, slightly stricter than the per-axis band
  double r = cutoff * dk;
  Field hi = conv.apply_multiplier(z, [r](double k2) { return k2 > r * r ? 1.0 : 0.0; });
  double total = inner(z, z);
  return total > 0.0 ? inner(hi, hi) / total : 0.0;
}

}  // namespace

DualFunctional::DualFunctional(const ProblemSpec& spec, CoefficientField coeffs, double epsilon_mu,
                               double epsilon_nu)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  spec_.validate();
  if (coeffs_.grid().dim() != spec_.N)
    throw InvalidArgument("coefficient grid dimension " + std::to_string(coeffs_.grid().dim()) +
                          " does not match N = " + std::to_string(spec_.N));
  if (coeffs_.p != spec_.p) throw InvalidArgument("coefficients were sampled for a different p");
  kmu_ = make_kernel(spec_, grid(), spec_.mu, epsilon_mu);
  knu_ = make_kernel(spec_, grid(), spec_.nu, epsilon_nu);
  conv_ = std::make_unique<Convolver>(grid());
}

DualFunctional DualFunctional::clone() const {
  return DualFunctional(spec_, coeffs_, kmu_.epsilon, knu_.epsilon);
}

double h_integral(const DualPair& pair, const DualFunctional& ctx) {
  if (pair.grid() != ctx.grid()) throw InvalidArgument("pair grid does not match the functional grid");
  const auto& c = ctx.coeffs();
  const double p = ctx.spec().p;
  double sum = 0.0;
  for (std::size_t i = 0; i < pair.first.size(); ++i)
    sum += eval_h({c.a[i], c.b[i], p}, pair.first[i], pair.second[i]);
  return sum * ctx.grid().cell_volume();
}

double quotient_level(double numer, double denom, double p) {
  if (!(numer > 0.0) || !(denom > 0.0)) return kInf;
  double pd = p / (p - 1.0);
  double e = 2.0 * p / (p - 2.0);
  double lg = e * (std::log(numer) / pd - 0.5 * std::log(denom));
  return (p - 2.0) / (2.0 * p) * std::exp(lg);
}

EnergyBreakdown eval_J(const DualPair& pair, const DualFunctional& ctx) {
  EnergyBreakdown e;
  e.h_integral = h_integral(pair, ctx);
  auto& conv = ctx.convolver();
  e.quad_mu = pair.first.is_zero() ? 0.0 : conv.quadratic_form(pair.first, pair.first, ctx.kernel_mu());
  e.quad_nu = pair.second.is_zero() ? 0.0 : conv.quadratic_form(pair.second, pair.second, ctx.kernel_nu());
  e.J_value = e.h_integral - 0.5 * (e.quad_mu + e.quad_nu);
  e.F_value = quotient_level(ctx.spec().p_dual() * e.h_integral, e.quad_mu + e.quad_nu, ctx.spec().p);
  return e;
}

double eval_Jprime_along_self(const DualPair& pair, const DualFunctional& ctx) {
  auto e = eval_J(pair, ctx);
  return ctx.spec().p_dual() * e.h_integral - (e.quad_mu + e.quad_nu);
}

DualPair grad_J(const DualPair& pair, const DualFunctional& ctx) {
  if (pair.grid() != ctx.grid()) throw InvalidArgument("pair grid does not match the functional grid");
  const auto& c = ctx.coeffs();
  const double p = ctx.spec().p;
  Field gs(ctx.grid()), gt(ctx.grid());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Vec2 g = grad_h({c.a[i], c.b[i], p}, pair.first[i], pair.second[i]);
    gs[i] = g.s;
    gt[i] = g.t;
  }
  auto& conv = ctx.convolver();
  gs -= conv.convolve(pair.first, ctx.kernel_mu());
  gt -= conv.convolve(pair.second, ctx.kernel_nu());
  return DualPair(std::move(gs), std::move(gt));
}

double eval_F(const DualPair& pair, const DualFunctional& ctx) { return eval_J(pair, ctx).F_value; }

double eval_E(const Field& ubar, const CoefficientField& coeffs, const KernelSpec& kernel, Convolver& conv) {
  require_same_grid(ubar, coeffs.a, "eval_E");
  if (ubar.is_zero()) return kInf;
  const double p = coeffs.p;
  const double pd = p / (p - 1.0);
  double numer = 0.0;
  for (std::size_t i = 0; i < ubar.size(); ++i)
    numer += std::pow(coeffs.a[i], 1.0 - pd) * std::pow(std::abs(ubar[i]), pd);
  numer *= ubar.grid().cell_volume();
  return quotient_level(numer, conv.quadratic_form(ubar, ubar, kernel), p);
}

double eval_E(const Field& ubar, const CoefficientField& coeffs, const KernelSpec& kernel) {
  Convolver conv(ubar.grid());
  return eval_E(ubar, coeffs, kernel, conv);
}

double eval_D(const Field& ubar, double p, const KernelSpec& kernel) {
  return eval_E(ubar, sample_coefficients(1.0, 0.0, ubar.grid(), p), kernel);
}

Field rescale_z(const Field& z, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("rescale requires lambda > 0");
  const Grid& g = z.grid();
  const int N = g.dim();
  const double amp = std::pow(lambda, (N + 2) / 4.0);
  if (lambda == 1.0) return z;
  const double sq = std::sqrt(lambda);
  if (sq > 1.0) {
    double frac = energy_beyond(z, 0.5 * g.n_per_dim() / sq);
    if (frac > 1e-6)
      throw InvalidArgument("rescale by lambda = " + std::to_string(lambda) +
                            " aliases: spectral energy fraction " + std::to_string(frac) +
                            " lies beyond the resolvable band");
  }
  const int n = g.n_per_dim();
  const double L = g.box_length();
  const double c = 0.5 * L;
  std::vector<double> targets(n);
  for (int i = 0; i < n; ++i) targets[i] = c + sq * (i * g.spacing() - c);
  auto m = interpolation_matrix(n, L, targets);
  std::vector<double> data(z.values().begin(), z.values().end());
  for (int d = 0; d < N; ++d) apply_along_axis(data, g, d, m);
  Field out(g, std::move(data));
  out *= amp;
  return out;
}

Field rescale_to_paired_grid(const Field& z, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("rescale requires lambda > 0");
  const Grid& g = z.grid();
  Grid h = build_grid(g.dim(), g.n_per_dim(), g.box_length() / std::sqrt(lambda));
  std::vector<double> v(z.values().begin(), z.values().end());
  const double amp = std::pow(lambda, (g.dim() + 2) / 4.0);
  for (auto& x : v) x *= amp;
  return Field(h, std::move(v));
}

double d_lambda_scaling(double lambda, double p, int N) {
  if (!(lambda > 0.0)) throw InvalidArgument("d_lambda_scaling requires lambda > 0");
  return std::pow(lambda, p / (p - 2.0) - 0.5 * N);
}

}  // namespace dualhelm
