#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dualhelm/solver.hpp"

namespace dualhelm {

/// 2^{(p-2)/2} - 1
double threshold_bstar(double p);

/// (1 + eta^2)^{1/2} / (1 + (2^{p/2} - 2) eta^{p/2} + eta^p)^{1/p}, for p >= 4.
double psi_eta(double eta, double p);

/// Minimum of psi_eta over n log-spaced points in [lo, hi].
double psi_grid_min(double p, int n = 10000, double lo = 1e-4, double hi = 1e4);

struct PsiCriticalPoints {
  double eta1 = 0.0;  // in (0, 1)
  double one = 1.0;
  double eta3 = 0.0;  // 1 / eta1
  double psi_dd_one_fd = 0.0;
  double psi_dd_one_closed = 0.0;  // (2^{p/2} - p) / (2 2^{p/2})
};

/// The three critical points of psi on (0, inf), for p > 4. Throws NumericalError if
/// the scan does not find exactly three.
PsiCriticalPoints psi_critical_points(double p);

struct HplusBound {
  double lhs = 0.0;  // int h(x, ubar, vbar)
  double rhs = 0.0;  // h_+(||a^{-1/p} ubar||_{p'}, ||a^{-1/p} vbar||_{p'})
  bool holds() const;
};

HplusBound check_hplus_lower_bound(const Field& ubar, const Field& vbar, const CoefficientField& coeffs);

enum class PhaseLabel { semitrivial, fully_nontrivial, boundary };
std::string to_string(PhaseLabel l);

/// Predicted ground-state type for constant a and b; |b - b*| < band * b* is boundary (p >= 4).
PhaseLabel predicted_label(double p, double b, double band = 0.05);

enum class LevelComparison { below, equal, inconsistent };
std::string to_string(LevelComparison c);

LevelComparison compare_levels(double level_system, double level_scalar_mu, double level_scalar_nu, double tol);

struct PhaseCell {
  double p = 0.0;
  double b = 0.0;
  double ratio = 1.0;  // sqrt(mu / nu)
  double mu = 1.0, nu = 1.0;
  ValidityMode validity_mode = ValidityMode::strict;
  std::uint64_t seed = 0;

  double level_system = 0.0;
  double level_scalar = 0.0;  // min of the two scalar levels
  double level_scalar_mu = 0.0;
  double level_scalar_nu = 0.0;
  double margin = 0.0;  // level_scalar - level_system
  PhaseLabel predicted = PhaseLabel::semitrivial;
  Classification observed = Classification::semitrivial;
  Classification norm_classification = Classification::semitrivial;
  LevelComparison comparison = LevelComparison::equal;
  bool mismatch = false;
  // best levels among restarts of each type; infinite when none was found
  double best_semitrivial = 0.0;
  double best_fully_nontrivial = 0.0;
  double residual_u = 0.0, residual_v = 0.0;
  double residual_scalar = 0.0;
  bool converged_system = false;
  bool converged_scalar = false;
  double epsilon_mu = 0.0, epsilon_nu = 0.0;
  std::string error;  // non-empty when the cell failed
};

struct SweepOptions {
  int N = 3;
  int n_per_dim = 32;
  double box_length = 16.0;
  double a = 1.0;
  double nu = 1.0;                     // mu = ratio^2 nu
  std::vector<double> ratios{1.0};     // sqrt(mu / nu)
  double boundary_band = 0.05;         // relative to b*
  double level_tol = 1e-3;             // relative, for compare_levels
  int threads = 1;                     // cells in parallel
  SolverOptions solver;

  void validate() const;
};

/// Runs solve_scalar and minimize_F per (p, b, ratio) cell. Cell failures are recorded.
std::vector<PhaseCell> sweep(const std::vector<double>& p_values, const std::vector<double>& b_values,
                             const SweepOptions& opts);

struct SweepSummary {
  int cells = 0;
  int boundary = 0;
  int mismatches = 0;
  int inconsistent = 0;
  int failed = 0;
  double agreement = 1.0;  // fraction of non-boundary cells with observed == predicted
};
SweepSummary summarize(const std::vector<PhaseCell>& cells);

/// One row per cell; the first line is "# config_hash=<hash>, epsilon=<eps>".
void write_phase_csv(const std::vector<PhaseCell>& cells, const std::filesystem::path& path,
                     const std::string& config_hash);
std::string phase_csv(const std::vector<PhaseCell>& cells, const std::string& config_hash);

void write_phase_manifest(const std::vector<PhaseCell>& cells, const SweepOptions& opts,
                          const std::filesystem::path& path, const std::string& config_hash, double wall_seconds);

}  // namespace dualhelm
