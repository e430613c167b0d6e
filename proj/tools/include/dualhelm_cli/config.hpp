#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dualhelm/domain.hpp"
#include "dualhelm/solver.hpp"

namespace dualhelm::cli {

/// Configuration problems; mapped to exit status 1.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class Subcommand { solve, scalar, phase, verify, kernel_check };
std::string to_string(Subcommand s);
Subcommand parse_subcommand(const std::string& name);

/// A constant, or one of the named periodic profiles
///   cosine:  mean + amplitude cos(2 pi x_axis)
///   product: mean + amplitude prod_d cos(2 pi x_d)
struct CoefficientConfig {
  std::string profile = "constant";
  double value = 1.0;  // constant value, or the mean
  double amplitude = 0.0;
  int axis = 0;

  CoefficientProfile make() const;
};

struct PhaseConfig {
  std::vector<double> p_values{4.5, 5.0, 5.5};
  std::vector<double> b_values;  // NaN entries stand for b*(p)
  std::vector<double> ratios{1.0};
  double boundary_band = 0.05;
  double level_tol = 1e-3;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::solve;
  ProblemSpec problem;
  int n_per_dim = 32;
  double box_length = 16.0;
  CoefficientConfig a;
  CoefficientConfig b{"constant", 0.0, 0.0, 0};
  SolverOptions solver;
  PhaseConfig phase;
  std::string fault = "none";  // verify: "none" or "scale_h"
  std::filesystem::path output_dir = "dualhelm_out";
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Parses a JSON document; unknown keys and ill-typed values raise ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

struct Overrides {
  std::optional<std::string> subcommand;
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<int> max_iters;
};
void apply_overrides(RunConfig& cfg, const Overrides& o);

/// Checks module invariants that do not need any computation.
void validate(const RunConfig& cfg);

/// Canonical JSON of every field except output_dir.
std::string canonical_dump(const RunConfig& cfg);
/// FNV-1a 64 of canonical_dump with the thread count reset, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace dualhelm::cli
