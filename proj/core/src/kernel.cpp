#include "dualhelm/kernel.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <vector>

#include "dualhelm/bessel.hpp"

namespace dualhelm {

namespace {

using std::numbers::pi;

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Sorted distinct values of |m|^2 for integer m in [-n/2, n/2)^N.
std::vector<long> lattice_norms(int N, int n) {
  const int h = n / 2;
  std::vector<char> hit(static_cast<std::size_t>(N) * h * h + 1, 0);
  if (N == 2) {
    for (int i = 0; i <= h; ++i)
      for (int j = 0; j <= h; ++j) hit[i * i + j * j] = 1;
  } else {
    for (int i = 0; i <= h; ++i)
      for (int j = 0; j <= h; ++j)
        for (int k = 0; k <= h; ++k) hit[i * i + j * j + k * k] = 1;
  }
  std::vector<long> out;
  for (std::size_t v = 0; v < hit.size(); ++v)
    if (hit[v]) out.push_back(static_cast<long>(v));
  return out;
}

double min_shell_gap(const Grid& grid, double lambda) {
  const double dk2 = grid.frequency_step() * grid.frequency_step();
  auto norms = lattice_norms(grid.dim(), grid.n_per_dim());
  double x = lambda / dk2;
  auto it = std::lower_bound(norms.begin(), norms.end(), static_cast<long>(std::ceil(x)));
  double gap = INFINITY;
  if (it != norms.end()) gap = std::min(gap, std::abs(*it - x));
  if (it != norms.begin()) gap = std::min(gap, std::abs(*(it - 1) - x));
  return gap * dk2;
}

}  // namespace

void KernelSpec::validate() const {
  if (N != 2 && N != 3) throw InvalidArgument("kernel dimension must be 2 or 3");
  if (!(lambda > 0.0)) throw InvalidArgument("kernel frequency lambda must be > 0, got " + fmt(lambda));
  if (!(epsilon >= 0.0)) throw InvalidArgument("kernel epsilon must be >= 0, got " + fmt(epsilon));
}

double psi_realspace(const KernelSpec& spec, double r) {
  spec.validate();
  if (!(r > 0.0)) throw InvalidArgument("psi_realspace requires r > 0 (kernel is singular at the origin)");
  const double k = std::sqrt(spec.lambda);
  if (spec.N == 3) return std::cos(k * r) / (4.0 * pi * r);
  return -0.25 * bessel_y0(k * r);
}

std::complex<double> phi_hankel(int N, double lambda, double r) {
  KernelSpec{N, lambda, 0.0}.validate();
  if (!(r > 0.0)) throw InvalidArgument("phi_hankel requires r > 0");
  const double z = std::sqrt(lambda) * r;
  const std::complex<double> i(0.0, 1.0);
  if (N == 2) {
    std::complex<double> H0(bessel_j0(z), bessel_y0(z));
    return 0.25 * i * H0;
  }
  // Order 1/2: J = sqrt(2/(pi z)) sin z, Y = -sqrt(2/(pi z)) cos z
  const double amp = std::sqrt(2.0 / (pi * z));
  std::complex<double> H(amp * std::sin(z), -amp * std::cos(z));
  double pre = std::pow(lambda / (4.0 * pi * pi * r * r), 0.25);
  return 0.25 * i * pre * H;
}

double kernel_symbol(const KernelSpec& spec, double xi_sq) {
  spec.validate();
  const double d = xi_sq - spec.lambda;
  if (spec.epsilon > 0.0) return d / (d * d + spec.epsilon * spec.epsilon);
  if (std::abs(d) < 1e-9 * spec.lambda)
    throw InvalidArgument("kernel_symbol: |xi|^2 = " + fmt(xi_sq) + " lies on the resonant shell lambda = " +
                          fmt(spec.lambda) + " with epsilon = 0");
  return 1.0 / d;
}

double default_epsilon(const Grid& grid, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("default_epsilon requires lambda > 0");
  const double dk2 = grid.frequency_step() * grid.frequency_step();
  auto norms = lattice_norms(grid.dim(), grid.n_per_dim());
  const double x = lambda / dk2;
  auto split = std::lower_bound(norms.begin(), norms.end(), x,
                                [](long v, double target) { return static_cast<double>(v) < target; });
  std::ptrdiff_t pos = split - norms.begin();
  std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, pos - 4);
  std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(norms.size()), pos + 4);
  if (hi - lo < 2)
    throw InvalidArgument("default_epsilon: lambda = " + fmt(lambda) + " is outside the resolved lattice");
  std::vector<double> gaps;
  for (std::ptrdiff_t i = lo + 1; i < hi; ++i) gaps.push_back(static_cast<double>(norms[i] - norms[i - 1]));
  std::sort(gaps.begin(), gaps.end());
  std::size_t m = gaps.size();
  double median = m % 2 ? gaps[m / 2] : 0.5 * (gaps[m / 2 - 1] + gaps[m / 2]);
  return 0.5 * median * dk2;
}

ShellReport shell_report(const Grid& grid, double lambda) {
  ShellReport r;
  r.min_gap = min_shell_gap(grid, lambda);
  r.guard = 1e-9 * lambda;
  r.guard_ok = r.min_gap >= r.guard;
  r.suggested_box_length = grid.box_length();
  if (r.guard_ok) return r;
  // nearest larger box whose lattice keeps the shell a quarter spacing away
  for (int k = 1; k <= 100000; ++k) {
    double Lk = grid.box_length() * (1.0 + 1e-4 * k);
    Grid g = build_grid(grid.dim(), grid.n_per_dim(), Lk);
    double dk2 = g.frequency_step() * g.frequency_step();
    if (min_shell_gap(g, lambda) > 0.25 * dk2) {
      r.suggested_box_length = Lk;
      break;
    }
  }
  return r;
}

void check_shell_guard(const Grid& grid, const KernelSpec& spec) {
  spec.validate();
  if (spec.epsilon > 0.0) return;
  ShellReport r = shell_report(grid, spec.lambda);
  if (!r.guard_ok)
    throw InvalidArgument("epsilon = 0 but a lattice frequency lies on the shell |xi|^2 = " + fmt(spec.lambda) +
                          " (gap " + fmt(r.min_gap) + "); try box_length = " + fmt(r.suggested_box_length) +
                          " or epsilon > 0");
}

struct Convolver::Impl {
  Grid grid;
  std::vector<int> dims;
  std::size_t n_complex = 0;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::vector<double> xi_sq;   // |xi|^2 on the half spectrum
  std::vector<double> weight;  // multiplicity of each half-spectrum mode in the full lattice

  struct CachedSymbol {
    double lambda, epsilon;
    std::vector<double> values;
  };
  std::vector<CachedSymbol> cache;

  explicit Impl(const Grid& g) : grid(g) {
    const int N = g.dim(), n = g.n_per_dim();
    dims.assign(N, n);
    const int nh = n / 2 + 1;
    n_complex = g.size() / n * nh;
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      real = fftw_alloc_real(g.size());
      spec = fftw_alloc_complex(n_complex);
      forward = fftw_plan_dft_r2c(N, dims.data(), real, spec, FFTW_ESTIMATE);
      backward = fftw_plan_dft_c2r(N, dims.data(), spec, real, FFTW_ESTIMATE);
    }
    if (!real || !spec || !forward || !backward) throw Error("FFTW plan creation failed");
    const double dk = g.frequency_step();
    xi_sq.resize(n_complex);
    weight.resize(n_complex);
    std::size_t outer = n_complex / nh;
    for (std::size_t o = 0; o < outer; ++o) {
      double base = 0.0;
      std::size_t rest = o;
      for (int d = N - 2; d >= 0; --d) {
        int idx = static_cast<int>(rest % n);
        rest /= n;
        double m = g.frequency_index(idx);
        base += m * m;
      }
      for (int k = 0; k < nh; ++k) {
        std::size_t at = o * nh + k;
        xi_sq[at] = (base + static_cast<double>(k) * k) * dk * dk;
        weight[at] = (k == 0 || 2 * k == n) ? 1.0 : 2.0;
      }
    }
  }

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    if (real) fftw_free(real);
    if (spec) fftw_free(spec);
  }

  const std::vector<double>& symbol(const KernelSpec& k) {
    for (auto& c : cache)
      if (c.lambda == k.lambda && c.epsilon == k.epsilon) return c.values;
    k.validate();
    if (k.N != grid.dim()) throw InvalidArgument("kernel dimension does not match the grid");
    check_shell_guard(grid, k);
    std::vector<double> vals(n_complex);
    for (std::size_t i = 0; i < n_complex; ++i) vals[i] = kernel_symbol(k, xi_sq[i]);
    if (cache.size() >= 4) cache.erase(cache.begin());
    cache.push_back({k.lambda, k.epsilon, std::move(vals)});
    return cache.back().values;
  }

  void transform(const Field& f) {
    if (f.grid() != grid) throw InvalidArgument("convolver: field grid does not match");
    std::copy(f.data(), f.data() + f.size(), real);
    fftw_execute(forward);
  }
};

Convolver::Convolver(const Grid& grid) : impl_(std::make_unique<Impl>(grid)) {}
Convolver::~Convolver() = default;
Convolver::Convolver(Convolver&&) noexcept = default;
Convolver& Convolver::operator=(Convolver&&) noexcept = default;

const Grid& Convolver::grid() const { return impl_->grid; }

Field Convolver::convolve(const Field& f, const KernelSpec& spec) {
  const auto& sym = impl_->symbol(spec);
  impl_->transform(f);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (std::size_t i = 0; i < impl_->n_complex; ++i) {
    double m = sym[i] * scale;
    impl_->spec[i][0] *= m;
    impl_->spec[i][1] *= m;
  }
  fftw_execute(impl_->backward);
  Field out(f.grid());
  std::copy(impl_->real, impl_->real + f.size(), out.data());
  out.check_finite("convolve");
  return out;
}

Field Convolver::apply_multiplier(const Field& f, const std::function<double(double)>& m) {
  impl_->transform(f);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (std::size_t i = 0; i < impl_->n_complex; ++i) {
    double w = m(impl_->xi_sq[i]) * scale;
    impl_->spec[i][0] *= w;
    impl_->spec[i][1] *= w;
  }
  fftw_execute(impl_->backward);
  Field out(f.grid());
  std::copy(impl_->real, impl_->real + f.size(), out.data());
  out.check_finite("apply_multiplier");
  return out;
}

double Convolver::quadratic_form(const Field& f, const Field& g, const KernelSpec& spec) {
  require_same_grid(f, g, "quadratic_form");
  const auto& sym = impl_->symbol(spec);
  const std::size_t nc = impl_->n_complex;
  impl_->transform(f);
  std::vector<double> F(2 * nc);
  for (std::size_t i = 0; i < nc; ++i) {
    F[2 * i] = impl_->spec[i][0];
    F[2 * i + 1] = impl_->spec[i][1];
  }
  impl_->transform(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < nc; ++i) {
    double re = F[2 * i] * impl_->spec[i][0] + F[2 * i + 1] * impl_->spec[i][1];
    sum += impl_->weight[i] * sym[i] * re;
  }
  return sum * f.grid().cell_volume() / static_cast<double>(f.size());
}

Field convolve(const Field& f, const KernelSpec& spec) {
  Convolver c(f.grid());
  return c.convolve(f, spec);
}

double quadratic_form(const Field& f, const Field& g, const KernelSpec& spec) {
  Convolver c(f.grid());
  return c.quadratic_form(f, g, spec);
}

}  // namespace dualhelm
