#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dualhelm/error.hpp"

namespace dualhelm {

enum class ValidityMode { strict, radial, override_checks };

std::string to_string(ValidityMode mode);
ValidityMode parse_validity_mode(std::string_view name);

/// Critical Sobolev exponent 2N/(N-2); +inf for N = 2.
double critical_exponent(int N);

/// Scalar parameters of the coupled Helmholtz system.
struct ProblemSpec {
  int N = 3;
  double p = 5.0;
  double mu = 1.0;
  double nu = 1.0;
  ValidityMode validity_mode = ValidityMode::strict;

  double p_dual() const { return p / (p - 1.0); }

  /// Throws InvalidArgument naming the violated range condition.
  void validate() const;

  static ProblemSpec create(int N, double p, double mu, double nu,
                            ValidityMode mode = ValidityMode::strict);
};

/// Uniform periodic grid on [0, L)^N.
class Grid {
 public:
  Grid() = default;

  int dim() const { return N_; }
  int n_per_dim() const { return n_; }
  double box_length() const { return L_; }
  std::size_t size() const { return size_; }
  double spacing() const { return L_ / n_; }
  double cell_volume() const;
  double volume() const;
  double frequency_step() const;

  /// Signed integer frequency of FFT index i, in [-n/2, n/2).
  int frequency_index(int i) const { return i < n_ / 2 ? i : i - n_; }

  /// Multi-index of a flat row-major index (axis 0 slowest).
  void unflatten(std::size_t flat, int* idx) const;

  bool operator==(const Grid& other) const;
  bool operator!=(const Grid& other) const { return !(*this == other); }

  friend Grid build_grid(int N, int n_per_dim, double box_length);

 private:
  int N_ = 0;
  int n_ = 0;
  double L_ = 0.0;
  std::size_t size_ = 0;
};

/// n_per_dim must be >= 8 and of the form 2^a 3^b.
Grid build_grid(int N, int n_per_dim, double box_length);

/// Real function sampled on a grid.
class Field {
 public:
  Field() = default;
  explicit Field(const Grid& grid);
  Field(const Grid& grid, std::vector<double> values);

  static Field constant(const Grid& grid, double value);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  const double* data() const { return values_.data(); }
  double* data() { return values_.data(); }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  bool is_zero() const;

  /// Throws NumericalError with the first non-finite location.
  void check_finite(std::string_view context) const;

  Field& operator*=(double s);
  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  /// this += s * other
  Field& axpy(double s, const Field& other);

 private:
  Grid grid_;
  std::vector<double> values_;
};

Field operator*(double s, const Field& f);
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);

void require_same_grid(const Field& a, const Field& b, std::string_view context);

/// (sum |f|^q dx^N)^(1/q), midpoint rule.
double lp_norm(const Field& f, double q);
/// sum f dx^N
double integrate(const Field& f);
/// sum f g dx^N
double inner(const Field& f, const Field& g);

/// Constant or [0,1]^N-periodic coefficient profile.
class CoefficientProfile {
 public:
  using Function = std::function<double(std::span<const double>)>;

  CoefficientProfile(double value = 1.0);
  CoefficientProfile(Function fn, std::string name);

  bool is_constant() const { return !fn_; }
  double constant_value() const { return value_; }
  const std::string& name() const { return name_; }
  double operator()(std::span<const double> x) const;

 private:
  double value_ = 1.0;
  Function fn_;
  std::string name_;
};

/// Sampled coefficients a(x), b(x) with cached bounds.
struct CoefficientField {
  Field a;
  Field b;
  double p = 0.0;
  double a_minus = 0.0, a_plus = 0.0;
  double b_minus = 0.0, b_plus = 0.0;
  bool a_constant = true;
  bool b_constant = true;

  const Grid& grid() const { return a.grid(); }
};

CoefficientField sample_coefficients(const CoefficientProfile& a, const CoefficientProfile& b,
                                     const Grid& grid, double p);

struct DualTag {};
struct PrimalTag {};

/// Two fields on a common grid.
template <class Tag>
struct FieldPair {
  Field first;
  Field second;

  FieldPair() = default;
  FieldPair(Field f, Field s) : first(std::move(f)), second(std::move(s)) {
    require_same_grid(first, second, "field pair");
  }

  const Grid& grid() const { return first.grid(); }
  bool is_zero() const { return first.is_zero() && second.is_zero(); }

  FieldPair& operator*=(double s) {
    first *= s;
    second *= s;
    return *this;
  }
};

using DualPair = FieldPair<DualTag>;
using PrimalPair = FieldPair<PrimalTag>;

template <class Tag>
FieldPair<Tag> operator*(double s, const FieldPair<Tag>& pair) {
  return FieldPair<Tag>(s * pair.first, s * pair.second);
}

/// Writes <stem>.bin (little-endian doubles, row-major) and <stem>.json; metadata
/// entries are added to the sidecar as strings.
void write_snapshot(const Field& f, const std::filesystem::path& stem,
                    const std::vector<std::pair<std::string, std::string>>& metadata = {});
Field read_snapshot(const std::filesystem::path& stem);

}  // namespace dualhelm
