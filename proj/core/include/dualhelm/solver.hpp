#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualhelm/functionals.hpp"

namespace dualhelm {

enum class Classification { semitrivial, fully_nontrivial };

std::string to_string(Classification c);

struct SolverOptions {
  int max_iters = 500;
  double grad_tol = 1e-6;  // on ||d||_p / ||w||_p
  int restarts = 6;
  double armijo_c1 = 1e-4;
  double backtrack = 0.5;
  std::uint64_t seed = 1;
  int threads = 1;
  double tol_ratio = 1e-3;   // classify threshold
  double eta = 0.1;          // amplitude of the ball perturbation seed
  double ball_radius = 1.5;  // radius of that ball, length units
  double epsilon_mu = -1.0;  // negative: default_epsilon
  double epsilon_nu = -1.0;

  void validate() const;
};

struct IterationRecord {
  int iteration = 0;
  double level = 0.0;
  double grad_norm = 0.0;
  double step = 0.0;
};

/// Outcome of one descent run.
struct RestartRecord {
  std::string seed_kind;
  double level = 0.0;
  Classification classification = Classification::semitrivial;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool admissible = true;
};

struct GroundStateRecord {
  double level = 0.0;
  DualPair pair;      // normalized so that Q_mu + Q_nu = 1
  PrimalPair primal;  // grad h at the critical multiple of pair
  Classification classification = Classification::semitrivial;
  std::pair<double, double> component_norms{0.0, 0.0};  // L^{p'} of ubar, vbar
  std::pair<double, double> fixed_point_residual{0.0, 0.0};
  double critical_scale = 1.0;  // tau with tau * pair critical for J
  double grad_norm = 0.0;
  int iterations = 0;
  int restarts_used = 0;
  int best_restart = 0;
  bool converged = false;
  double epsilon_mu = 0.0;
  double epsilon_nu = 0.0;
  std::vector<IterationRecord> history;  // of the best restart
  std::vector<RestartRecord> restarts;
};

/// Seeds for the system solve taken from previously computed scalar ground states.
struct ScalarSeeds {
  const GroundStateRecord* mu = nullptr;
  const GroundStateRecord* nu = nullptr;
};

/// Approximates c_{mu nu} = inf F over dual pairs. Throws NumericalError when no
/// restart has a positive denominator.
GroundStateRecord minimize_F(const DualFunctional& ctx, const SolverOptions& opts, ScalarSeeds seeds = {});
GroundStateRecord minimize_F(const CoefficientField& coeffs, const ProblemSpec& spec, const SolverOptions& opts);

/// Approximates c_lambda = inf E_lambda with coefficient a (b is ignored). The
/// record's pair is (wbar, 0).
GroundStateRecord solve_scalar(const CoefficientField& coeffs, double lambda, const ProblemSpec& spec,
                               const SolverOptions& opts);

/// Pointwise grad h; throws NumericalError unless grad f maps back to the pair within 1e-8
/// relative in L^{p'}.
PrimalPair recover_primal(const DualPair& pair, const CoefficientField& coeffs);

/// (||u - Psi_mu * d_s f(u,v)||_p / ||u||_p, same for v); a zero component gives 0.
std::pair<double, double> fixed_point_residual(const PrimalPair& primal, const DualFunctional& ctx);
std::pair<double, double> fixed_point_residual(const PrimalPair& primal, const CoefficientField& coeffs,
                                               const ProblemSpec& spec);

/// semitrivial iff min(||ubar||, ||vbar||) < tol_ratio max(...), norms in L^{p'}.
Classification classify(const DualPair& pair, double p, double tol_ratio = 1e-3);

}  // namespace dualhelm
