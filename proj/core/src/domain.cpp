#include "dualhelm/domain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace dualhelm {

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool is_3_smooth(int n) {
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

}  // namespace

std::string to_string(ValidityMode mode) {
  switch (mode) {
    case ValidityMode::strict:
      return "strict";
    case ValidityMode::radial:
      return "radial";
    case ValidityMode::override_checks:
      return "override";
  }
  return "strict";
}

ValidityMode parse_validity_mode(std::string_view name) {
  if (name == "strict") return ValidityMode::strict;
  if (name == "radial") return ValidityMode::radial;
  if (name == "override") return ValidityMode::override_checks;
  throw InvalidArgument("unknown validity_mode '" + std::string(name) +
                        "' (expected strict, radial or override)");
}

double critical_exponent(int N) {
  if (N <= 2) return std::numeric_limits<double>::infinity();
  return 2.0 * N / (N - 2.0);
}

void ProblemSpec::validate() const {
  if (N != 2 && N != 3) throw InvalidArgument("N must be 2 or 3, got " + std::to_string(N));
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidArgument("mu must be > 0, got " + format_value(mu));
  if (!(nu > 0.0) || !std::isfinite(nu)) throw InvalidArgument("nu must be > 0, got " + format_value(nu));
  if (!(p > 2.0) || !std::isfinite(p)) throw InvalidArgument("p must be > 2, got " + format_value(p));
  if (validity_mode == ValidityMode::override_checks) return;
  if (!(p < critical_exponent(N)))
    throw InvalidArgument("p must be below the critical exponent 2N/(N-2) = " +
                          format_value(critical_exponent(N)) + ", got " + format_value(p));
  if (validity_mode == ValidityMode::strict) {
    double lo = 2.0 * (N + 1) / (N - 1.0);
    if (!(p > lo))
      throw InvalidArgument("strict mode requires p > 2(N+1)/(N-1) = " + format_value(lo) +
                            ", got " + format_value(p) + " (use radial or override mode)");
  } else {
    double lo = 2.0 * N / (N - 1.0);
    if (!(p > lo))
      throw InvalidArgument("radial mode requires p > 2N/(N-1) = " + format_value(lo) +
                            ", got " + format_value(p));
  }
}

ProblemSpec ProblemSpec::create(int N, double p, double mu, double nu, ValidityMode mode) {
  ProblemSpec s{N, p, mu, nu, mode};
  s.validate();
  return s;
}

double Grid::cell_volume() const { return std::pow(spacing(), N_); }

double Grid::volume() const { return std::pow(L_, N_); }

double Grid::frequency_step() const { return 2.0 * std::numbers::pi / L_; }

void Grid::unflatten(std::size_t flat, int* idx) const {
  for (int d = N_ - 1; d >= 0; --d) {
    idx[d] = static_cast<int>(flat % n_);
    flat /= n_;
  }
}

bool Grid::operator==(const Grid& other) const {
  return N_ == other.N_ && n_ == other.n_ && L_ == other.L_;
}

Grid build_grid(int N, int n_per_dim, double box_length) {
  if (N != 2 && N != 3) throw InvalidArgument("grid dimension must be 2 or 3, got " + std::to_string(N));
  if (n_per_dim < 8 || !is_3_smooth(n_per_dim))
    throw InvalidArgument("n_per_dim must be >= 8 and of the form 2^a 3^b, got " +
                          std::to_string(n_per_dim));
  if (!(box_length > 0.0) || !std::isfinite(box_length))
    throw InvalidArgument("box_length must be > 0, got " + format_value(box_length));
  Grid g;
  g.N_ = N;
  g.n_ = n_per_dim;
  g.L_ = box_length;
  g.size_ = 1;
  for (int d = 0; d < N; ++d) g.size_ *= static_cast<std::size_t>(n_per_dim);
  return g;
}

Field::Field(const Grid& grid) : grid_(grid), values_(grid.size(), 0.0) {}

Field::Field(const Grid& grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw InvalidArgument("field has " + std::to_string(values_.size()) + " values, grid has " +
                          std::to_string(grid_.size()) + " points");
  check_finite("field construction");
}

Field Field::constant(const Grid& grid, double value) {
  return Field(grid, std::vector<double>(grid.size(), value));
}

bool Field::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

void Field::check_finite(std::string_view context) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw NumericalError(std::string(context) + ": non-finite value at flat index " +
                           std::to_string(i));
  }
}

Field& Field::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

Field& Field::operator+=(const Field& other) { return axpy(1.0, other); }

Field& Field::operator-=(const Field& other) { return axpy(-1.0, other); }

Field& Field::axpy(double s, const Field& other) {
  require_same_grid(*this, other, "axpy");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += s * other.values_[i];
  return *this;
}

Field operator*(double s, const Field& f) {
  Field r = f;
  r *= s;
  return r;
}

Field operator+(const Field& a, const Field& b) {
  Field r = a;
  r += b;
  return r;
}

Field operator-(const Field& a, const Field& b) {
  Field r = a;
  r -= b;
  return r;
}

void require_same_grid(const Field& a, const Field& b, std::string_view context) {
  if (a.grid() != b.grid() || a.size() != b.size())
    throw InvalidArgument(std::string(context) + ": fields live on different grids");
}

double lp_norm(const Field& f, double q) {
  if (!(q >= 1.0)) throw InvalidArgument("lp_norm requires q >= 1, got " + format_value(q));
  double amax = 0.0;
  for (double v : f.values()) amax = std::max(amax, std::abs(v));
  if (amax == 0.0) return 0.0;
  // scale by the max to avoid overflow for large q
  double sum = 0.0;
  if (q == 2.0) {
    for (double v : f.values()) {
      double r = v / amax;
      sum += r * r;
    }
  } else {
    for (double v : f.values()) sum += std::pow(std::abs(v) / amax, q);
  }
  return amax * std::pow(sum * f.grid().cell_volume(), 1.0 / q);
}

double integrate(const Field& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum * f.grid().cell_volume();
}

double inner(const Field& f, const Field& g) {
  require_same_grid(f, g, "inner");
  double sum = 0.0;
  const double* a = f.data();
  const double* b = g.data();
  for (std::size_t i = 0; i < f.size(); ++i) sum += a[i] * b[i];
  return sum * f.grid().cell_volume();
}

CoefficientProfile::CoefficientProfile(double value) : value_(value), name_("constant") {}

CoefficientProfile::CoefficientProfile(Function fn, std::string name)
    : fn_(std::move(fn)), name_(std::move(name)) {}

double CoefficientProfile::operator()(std::span<const double> x) const {
  return fn_ ? fn_(x) : value_;
}

namespace {

Field sample_profile(const CoefficientProfile& prof, const Grid& grid) {
  if (prof.is_constant()) return Field::constant(grid, prof.constant_value());
  std::vector<double> vals(grid.size());
  int idx[3];
  double x[3] = {0.0, 0.0, 0.0};
  const double h = grid.spacing();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid.unflatten(i, idx);
    for (int d = 0; d < grid.dim(); ++d) x[d] = idx[d] * h;
    vals[i] = prof(std::span<const double>(x, grid.dim()));
    if (!std::isfinite(vals[i]))
      throw InvalidArgument("coefficient profile '" + prof.name() + "' is not finite at flat index " +
                            std::to_string(i));
  }
  return Field(grid, std::move(vals));
}

std::string location(const Grid& grid, std::size_t flat) {
  int idx[3];
  grid.unflatten(flat, idx);
  std::ostringstream os;
  os << "at x=(";
  for (int d = 0; d < grid.dim(); ++d) os << (d ? "," : "") << idx[d] * grid.spacing();
  os << ")";
  return os.str();
}

}  // namespace

CoefficientField sample_coefficients(const CoefficientProfile& a, const CoefficientProfile& b,
                                     const Grid& grid, double p) {
  if (!(p > 2.0)) throw InvalidArgument("coefficients require p > 2, got " + format_value(p));
  if (!a.is_constant() || !b.is_constant()) {
    double L = grid.box_length();
    if (std::abs(L - std::round(L)) > 1e-12 * L || std::round(L) < 1.0)
      throw InvalidArgument("periodic coefficient profiles need an integer box_length, got " +
                            format_value(L));
  }
  CoefficientField c;
  c.p = p;
  c.a = sample_profile(a, grid);
  c.b = sample_profile(b, grid);
  c.a_constant = a.is_constant();
  c.b_constant = b.is_constant();
  auto [amin, amax] = std::minmax_element(c.a.values().begin(), c.a.values().end());
  auto [bmin, bmax] = std::minmax_element(c.b.values().begin(), c.b.values().end());
  if (!(*amin > 0.0))
    throw InvalidArgument("a must be positive: a=" + format_value(*amin) + " " +
                          location(grid, amin - c.a.values().begin()));
  if (*bmin < 0.0)
    throw InvalidArgument("b must be nonnegative: b=" + format_value(*bmin) + " " +
                          location(grid, bmin - c.b.values().begin()));
  if (*bmax > p - 1.0)
    throw InvalidArgument("b exceeds p-1 = " + format_value(p - 1.0) + ": b=" + format_value(*bmax) +
                          " " + location(grid, bmax - c.b.values().begin()));
  c.a_minus = *amin;
  c.a_plus = *amax;
  c.b_minus = *bmin;
  c.b_plus = *bmax;
  return c;
}

namespace {

std::filesystem::path with_suffix(const std::filesystem::path& stem, const char* suffix) {
  return std::filesystem::path(stem.string() + suffix);
}

}  // namespace

void write_snapshot(const Field& f, const std::filesystem::path& stem,
                    const std::vector<std::pair<std::string, std::string>>& metadata) {
  std::ofstream bin(with_suffix(stem, ".bin"), std::ios::binary);
  if (!bin) throw Error("cannot open " + with_suffix(stem, ".bin").string() + " for writing");
  for (double v : f.values()) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    unsigned char bytes[8];
    for (int k = 0; k < 8; ++k) bytes[k] = static_cast<unsigned char>(bits >> (8 * k));
    bin.write(reinterpret_cast<const char*>(bytes), 8);
  }
  if (!bin) throw Error("write failed for " + with_suffix(stem, ".bin").string());

  nlohmann::json side = {{"N", f.grid().dim()},
                         {"n_per_dim", f.grid().n_per_dim()},
                         {"box_length", f.grid().box_length()}};
  for (const auto& [k, v] : metadata) side[k] = v;
  std::ofstream js(with_suffix(stem, ".json"));
  if (!js) throw Error("cannot open " + with_suffix(stem, ".json").string() + " for writing");
  js << side.dump(2) << "\n";
}

Field read_snapshot(const std::filesystem::path& stem) {
  std::ifstream js(with_suffix(stem, ".json"));
  if (!js) throw Error("cannot open " + with_suffix(stem, ".json").string());
  nlohmann::json side = nlohmann::json::parse(js);
  Grid grid = build_grid(side.at("N").get<int>(), side.at("n_per_dim").get<int>(),
                         side.at("box_length").get<double>());
  std::ifstream bin(with_suffix(stem, ".bin"), std::ios::binary);
  if (!bin) throw Error("cannot open " + with_suffix(stem, ".bin").string());
  std::vector<double> vals(grid.size());
  for (double& v : vals) {
    unsigned char bytes[8];
    bin.read(reinterpret_cast<char*>(bytes), 8);
    if (!bin) throw Error("snapshot " + with_suffix(stem, ".bin").string() + " is truncated");
    std::uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(bytes[k]) << (8 * k);
    v = std::bit_cast<double>(bits);
  }
  return Field(grid, std::move(vals));
}

}  // namespace dualhelm
