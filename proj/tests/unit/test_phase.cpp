#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dualhelm/phase.hpp"

using namespace dualhelm;

TEST(Threshold, Examples) {
  EXPECT_DOUBLE_EQ(threshold_bstar(4.0), 1.0);
  EXPECT_DOUBLE_EQ(threshold_bstar(6.0), 3.0);
  EXPECT_DOUBLE_EQ(threshold_bstar(8.0), 7.0);
  EXPECT_NEAR(threshold_bstar(5.0), std::pow(2.0, 1.5) - 1.0, 1e-15);
  EXPECT_THROW(threshold_bstar(2.0), InvalidArgument);
}

TEST(PsiEta, Examples) {
  EXPECT_DOUBLE_EQ(psi_eta(0.0, 5.0), 1.0);
  EXPECT_NEAR(psi_eta(1.0, 5.0), 1.0, 1e-15);
  EXPECT_GE(psi_eta(2.0, 5.0), 1.0);
  EXPECT_NEAR(psi_eta(2.0, 5.0), psi_eta(0.5, 5.0), 1e-12);
  EXPECT_THROW(psi_eta(-1.0, 5.0), InvalidArgument);
  EXPECT_THROW(psi_eta(1.0, 3.5), InvalidArgument);
}

TEST(PsiEta, GridMinimum) {
  for (double p : {4.0, 4.5, 5.0, 6.0, 8.0}) EXPECT_GE(psi_grid_min(p), 1.0 - 1e-12) << p;
}

TEST(PsiEta, Symmetry) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-8, 8);
  for (int k = 0; k < 200; ++k) {
    double eta = std::exp(U(rng));
    double p = 4.0 + 0.02 * k;
    EXPECT_NEAR(psi_eta(eta, p), psi_eta(1.0 / eta, p), 1e-12);
  }
}

TEST(PsiCritical, P5) {
  auto c = psi_critical_points(5.0);
  EXPECT_EQ(c.one, 1.0);
  EXPECT_GT(c.eta1, 0.0);
  EXPECT_LT(c.eta1, 1.0);
  EXPECT_NEAR(c.eta1 * c.eta3, 1.0, 1e-10);
  EXPECT_NEAR(c.psi_dd_one_closed, (std::pow(2.0, 2.5) - 5) / (2 * std::pow(2.0, 2.5)), 1e-15);
  EXPECT_NEAR(c.psi_dd_one_closed, 0.05806, 1e-5);
  EXPECT_NEAR(c.psi_dd_one_fd, c.psi_dd_one_closed, 1e-8);
  EXPECT_GT(psi_eta(c.eta1, 5.0), 1.0);
}

TEST(PsiCritical, P6) {
  auto c = psi_critical_points(6.0);
  EXPECT_NEAR(c.eta1 * c.eta3, 1.0, 1e-10);
  EXPECT_NEAR(c.psi_dd_one_fd, c.psi_dd_one_closed, 1e-8);
  EXPECT_THROW(psi_critical_points(4.0), InvalidArgument);
}

TEST(HplusBound, ConstantUnitBox) {
  Grid g = build_grid(3, 8, 1.0);
  auto c = sample_coefficients(1.0, 2.0, g, 5.0);
  auto r = check_hplus_lower_bound(Field::constant(g, 1.0), Field::constant(g, 1.0), c);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-10 * std::abs(r.rhs));
  EXPECT_TRUE(r.holds());
}

TEST(HplusBound, AxisCase) {
  Grid g = build_grid(3, 16, 2.0);
  CoefficientProfile a([](std::span<const double> x) { return 1.5 + std::sin(2 * std::numbers::pi * x[0]); }, "a");
  auto c = sample_coefficients(a, 1.0, g, 5.0);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  Field u(g);
  for (auto& v : u.values()) v = nd(rng);
  auto r = check_hplus_lower_bound(u, Field(g), c);
  const double pd = 1.25;
  double direct = std::pow(c.a_plus, 1 - pd) / pd * std::pow(lp_norm(u, pd), pd);
  EXPECT_TRUE(r.holds());
  EXPECT_GE(r.lhs, direct * (1 - 1e-12));
}

TEST(HplusBound, RandomSmoothPairs) {
  Grid g = build_grid(3, 16, 2.0);
  CoefficientProfile a([](std::span<const double> x) { return 2.0 + std::cos(2 * std::numbers::pi * x[1]); }, "a");
  CoefficientProfile b([](std::span<const double> x) { return 1.0 + 0.9 * std::sin(2 * std::numbers::pi * x[2]); },
                       "b");
  auto c = sample_coefficients(a, b, g, 5.0);
  Convolver conv(g);
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 10; ++k) {
    Field u(g), v(g);
    for (auto& x : u.values()) x = nd(rng);
    for (auto& x : v.values()) x = nd(rng);
    auto smooth = [](double k2) { return std::exp(-0.05 * k2); };
    auto r = check_hplus_lower_bound(conv.apply_multiplier(u, smooth), conv.apply_multiplier(v, smooth), c);
    EXPECT_TRUE(r.holds()) << k << " " << r.lhs << " " << r.rhs;
  }
}

TEST(Predicted, Labels) {
  EXPECT_EQ(predicted_label(5.0, 0.0), PhaseLabel::semitrivial);
  EXPECT_EQ(predicted_label(5.0, 1.0), PhaseLabel::semitrivial);
  EXPECT_EQ(predicted_label(5.0, 2.5), PhaseLabel::fully_nontrivial);
  EXPECT_EQ(predicted_label(5.0, threshold_bstar(5.0)), PhaseLabel::boundary);
  EXPECT_EQ(predicted_label(5.0, 1.05 * threshold_bstar(5.0)), PhaseLabel::fully_nontrivial);
  EXPECT_EQ(predicted_label(5.0, 1.04 * threshold_bstar(5.0)), PhaseLabel::boundary);
  EXPECT_EQ(predicted_label(3.5, 0.5), PhaseLabel::fully_nontrivial);
  EXPECT_EQ(predicted_label(3.5, 0.0), PhaseLabel::semitrivial);
  EXPECT_EQ(predicted_label(4.0, 1.0, 0.0), PhaseLabel::boundary);
}

TEST(CompareLevels, Examples) {
  EXPECT_EQ(compare_levels(0.9, 1.0, 1.0, 0.01), LevelComparison::below);
  EXPECT_EQ(compare_levels(1.0005, 1.0, 1.2, 0.01), LevelComparison::equal);
  EXPECT_EQ(compare_levels(1.5, 1.0, 1.0, 0.01), LevelComparison::inconsistent);
  EXPECT_THROW(compare_levels(-1.0, 1.0, 1.0, 0.01), InvalidArgument);
}

namespace {
SweepOptions small_sweep() {
  SweepOptions o;
  o.n_per_dim = 24;
  o.box_length = 12.0;
  o.solver.restarts = 5;
  o.threads = 2;
  return o;
}
}  // namespace

TEST(Sweep, SmallDiagram) {
  auto opts = small_sweep();
  double bs = threshold_bstar(5.0);
  auto cells = sweep({5.0}, {0.5, bs, 2.5}, opts);
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[0].predicted, PhaseLabel::semitrivial);
  EXPECT_EQ(cells[0].observed, Classification::semitrivial);
  EXPECT_EQ(cells[1].predicted, PhaseLabel::boundary);
  EXPECT_NEAR(cells[1].best_semitrivial / cells[1].best_fully_nontrivial, 1.0, 5e-3);
  EXPECT_EQ(cells[2].observed, Classification::fully_nontrivial);
  EXPECT_EQ(cells[2].comparison, LevelComparison::below);
  for (const auto& c : cells) {
    EXPECT_TRUE(c.error.empty()) << c.error;
    EXPECT_NE(c.comparison, LevelComparison::inconsistent);
    EXPECT_LE(c.level_system, c.level_scalar * (1 + 1e-3));
    EXPECT_EQ(c.validity_mode, ValidityMode::strict);
  }
  auto s = summarize(cells);
  EXPECT_EQ(s.boundary, 1);
  EXPECT_EQ(s.mismatches, 0);
  EXPECT_EQ(s.inconsistent, 0);
}

TEST(Sweep, RadialModeBelowFour) {
  auto opts = small_sweep();
  auto cells = sweep({3.5}, {0.5}, opts);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].validity_mode, ValidityMode::radial);
  EXPECT_EQ(cells[0].predicted, PhaseLabel::fully_nontrivial);
  EXPECT_TRUE(cells[0].error.empty()) << cells[0].error;
}

TEST(Sweep, DeterministicCsv) {
  auto opts = small_sweep();
  auto a = phase_csv(sweep({5.0}, {0.5, 2.5}, opts), "abc");
  opts.threads = 1;
  auto b = phase_csv(sweep({5.0}, {0.5, 2.5}, opts), "abc");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("# config_hash=abc, epsilon=", 0), 0u);
}

TEST(Sweep, RejectsEmptyAxes) {
  auto opts = small_sweep();
  EXPECT_THROW(sweep({}, {1.0}, opts), InvalidArgument);
  EXPECT_THROW(sweep({5.0}, {}, opts), InvalidArgument);
  opts.ratios.clear();
  EXPECT_THROW(sweep({5.0}, {1.0}, opts), InvalidArgument);
}

TEST(Sweep, FailedCellIsRecorded) {
  auto opts = small_sweep();
  auto cells = sweep({5.0}, {5.0}, opts);  // b > p - 1
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_FALSE(cells[0].error.empty());
  EXPECT_EQ(summarize(cells).failed, 1);
}
