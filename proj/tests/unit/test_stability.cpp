#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

namespace mbpns {
namespace {

using testing::make_config;
using testing::tight_config;

double a_lower_formula(int d, int M, double delta) {
  double p = 1.0;
  for (int m = 1; m <= 2 * M; ++m) p *= std::sin(m * std::numbers::pi * delta);
  return std::pow(2 * M + 1, -d) * std::pow(p, 2 * d);
}

TEST(TheoreticalBounds, TightExamples) {
  auto b = theoretical_bounds(tight_config(1, 1, Rational(1)));
  EXPECT_TRUE(b.tight);
  EXPECT_DOUBLE_EQ(b.A_lower, 3.0);
  EXPECT_DOUBLE_EQ(b.B_upper, 3.0);
  b = theoretical_bounds(tight_config(2, 1));
  EXPECT_TRUE(b.tight);
  EXPECT_DOUBLE_EQ(b.A_lower, 9.0);
  EXPECT_DOUBLE_EQ(b.B_lower, 9.0);
}

TEST(TheoreticalBounds, SpotValue) {
  const auto b = theoretical_bounds(make_config(1, 1, 2, Rational(1, 2), Rational(1, 6)));
  EXPECT_FALSE(b.tight);
  EXPECT_NEAR(b.A_lower, 1.0 / 16.0, 1e-12);
  EXPECT_NEAR(b.A_lower, a_lower_formula(1, 1, 1.0 / 6.0), 1e-15);
  EXPECT_DOUBLE_EQ(b.B_lower, 3.0);
  EXPECT_DOUBLE_EQ(b.B_upper, 9.0);
}

TEST(TheoreticalBounds, AAtMostB) {
  for (int d = 1; d <= 3; ++d)
    for (int M = 0; M <= 3; ++M)
      for (std::int64_t N = 1; N <= 3; ++N)
        for (std::int64_t t = 1; t <= 4; ++t) {
          const auto b = theoretical_bounds(make_config(d, M, N, Rational(1, N), Rational(t, 4 * (2 * M + 1) * N)));
          EXPECT_LE(b.A_lower, b.B_upper);
          EXPECT_LE(b.B_lower, b.B_upper);
        }
}

TEST(EmpiricalRatio, Examples) {
  const auto cfg = tight_config(1, 1, Rational(1));
  EXPECT_NEAR(empirical_ratio(MultibandSignal(cfg, {{{Rational(1)}, 1.0}})), 3.0, 1e-14);
  EXPECT_NEAR(empirical_ratio(random_signal(tight_config(2, 1), 5)), 9.0, 9e-9);
  const auto single = make_config(2, 0, 1, Rational(1), Rational(1), Rational(3));
  EXPECT_NEAR(empirical_ratio(random_signal(single, 5)), 1.0, 1e-12);
  EXPECT_THROW(empirical_ratio(MultibandSignal(cfg, {})), ZeroSignal);
}

TEST(EmpiricalRatio, MatchesDirectEnergy) {
  const auto cfg = make_config(1, 2, 2, Rational(1, 2), Rational(1, 20));
  const auto sig = random_signal(cfg, 19);
  double num = 0.0;
  for (const auto& p : sample_points(cfg)) num += std::norm(testing::eval_ref(sig.coeffs(), p.y));
  num *= 0.5;
  double den = 0.0;
  for (const auto& [nu, a] : sig.coeffs()) den += std::norm(a);
  den *= 2.0;
  EXPECT_LT(testing::rel_diff(empirical_ratio(sig), num / den), 1e-10);
}

TEST(TightFrame, EveryTrial) {
  for (int d = 1; d <= 3; ++d)
    for (int M = 1; M <= 2; ++M) {
      const auto cfg = tight_config(d, M);
      const double want = std::pow(2 * M + 1, d);
      for (std::uint64_t s = 0; s < 10; ++s)
        EXPECT_LE(testing::rel_diff(empirical_ratio(random_signal(cfg, derive_seed(1, s))), want), 1e-9);
      const auto b = empirical_frame_bounds(cfg, 20, 3);
      EXPECT_LE(testing::rel_diff(b.lower, want), 1e-9);
      EXPECT_LE(testing::rel_diff(b.upper, want), 1e-9);
    }
}

TEST(EmpiricalFrameBounds, DeterministicAcrossThreadCounts) {
  const auto cfg = make_config(2, 1, 2, Rational(1, 2), Rational(1, 12));
  ::setenv("MBPNS_THREADS", "1", 1);
  const auto one = empirical_frame_bounds(cfg, 16, 99);
  ::setenv("MBPNS_THREADS", "5", 1);
  const auto five = empirical_frame_bounds(cfg, 16, 99);
  ::unsetenv("MBPNS_THREADS");
  EXPECT_EQ(one.lower, five.lower);
  EXPECT_EQ(one.upper, five.upper);
  EXPECT_GT(one.lower, 0.0);
  EXPECT_THROW(empirical_frame_bounds(cfg, 0, 1), RangeViolation);
}

TEST(PerFrequencyExtremes, Examples) {
  auto e = per_frequency_extremes(tight_config(1, 1));
  EXPECT_NEAR(e.lower, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(e.upper, std::sqrt(3.0), 1e-12);
  e = per_frequency_extremes(make_config(1, 0, 1, Rational(1), Rational(1)));
  EXPECT_NEAR(e.lower, 1.0, 1e-15);
  EXPECT_NEAR(e.upper, 1.0, 1e-15);
}

TEST(PerFrequencyExtremes, AgainstIndependentSvd) {
  const auto cfg = make_config(2, 1, 2, Rational(1, 2), Rational(1, 12));
  double lo = 1e300, hi = 0.0;
  for (const auto& xi : omega_delta_grid(cfg)) {
    const auto sys = full_system(cfg, xi);
    if (sys.active.empty()) continue;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(sys.matrix);
    lo = std::min(lo, svd.singularValues().minCoeff());
    hi = std::max(hi, svd.singularValues().maxCoeff());
  }
  const auto e = per_frequency_extremes(cfg);
  EXPECT_NEAR(e.lower, lo, 1e-10 * lo);
  EXPECT_NEAR(e.upper, hi, 1e-10 * hi);
}

TEST(Sandwich, SvdContainsEmpirical) {
  for (const auto& cfg : testing::reconstruction_grid()) {
    const auto e = per_frequency_extremes(cfg);
    const auto b = empirical_frame_bounds(cfg, 30, 17);
    EXPECT_GE(b.lower, e.lower * e.lower * (1 - 1e-9)) << testing::describe(cfg);
    EXPECT_LE(b.upper, e.upper * e.upper * (1 + 1e-9)) << testing::describe(cfg);
    EXPECT_LE(e.upper * e.upper, std::pow(2 * cfg.M + 1, 2 * cfg.d) * (1 + 1e-9));
  }
}

TEST(Sandwich, LowerFrameBoundAgainstALower) {
  // sigma_min^2 >= A_lower holds on most of the grid; the smallest offset
  // spacing with M=2 drives sigma_min^2 below it
  int below = 0;
  for (const auto& cfg : testing::reconstruction_grid()) {
    const auto e = per_frequency_extremes(cfg);
    if (e.lower * e.lower < theoretical_bounds(cfg).A_lower * (1 - 1e-9)) {
      ++below;
      EXPECT_EQ(cfg.M, 2) << testing::describe(cfg);
      EXPECT_EQ(cfg.delta, Rational(1, 20)) << testing::describe(cfg);
    }
  }
  EXPECT_EQ(below, 1);
}

TEST(SingularDirection, AttainsExtremes) {
  for (const auto& cfg : {make_config(1, 1, 2, Rational(1, 2), Rational(1, 6)), make_config(2, 1, 2, Rational(1, 2), Rational(1, 12)),
                          make_config(1, 2, 1, Rational(1), Rational(1, 10))}) {
    const auto e = per_frequency_extremes(cfg);
    const auto lo = singular_direction_signal(cfg, true);
    const auto hi = singular_direction_signal(cfg, false);
    // unit coefficient vector; energy per period is T^d
    EXPECT_NEAR(norm_squared(lo), std::pow(boost::rational_cast<double>(*cfg.T), cfg.d), 1e-12);
    EXPECT_LT(testing::rel_diff(empirical_ratio(lo), e.lower * e.lower), 1e-9);
    EXPECT_LT(testing::rel_diff(empirical_ratio(hi), e.upper * e.upper), 1e-9);
    EXPECT_GE(empirical_frame_bounds(cfg, 20, 1).lower, empirical_ratio(lo) * (1 - 1e-9));
  }
}

TEST(Verify, ReportAndViolations) {
  const auto rep = verify(tight_config(1, 2), 10, 4);
  EXPECT_TRUE(rep.tight);
  EXPECT_EQ(rep.trials, 10);
  EXPECT_EQ(rep.seed, 4u);
  EXPECT_TRUE(violations(rep).empty());

  const auto loose = verify(make_config(1, 1, 2, Rational(1, 2), Rational(1, 6)), 10, 4);
  EXPECT_TRUE(violations(loose).empty());

  const auto bad = verify(make_config(1, 2, 2, Rational(1, 2), Rational(1, 20)), 10, 4);
  const auto v = violations(bad);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("A_lower <= sigma_min^2"), std::string::npos);
}

TEST(Sweep, RowsAndTightFlag) {
  const auto rows = sweep(tight_config(1, 1), 2, 2, 3, 5, 1);
  EXPECT_EQ(rows.size(), 12u);
  int tight = 0;
  for (const auto& r : rows) {
    if (r.tight) {
      ++tight;
      EXPECT_NEAR(r.emp_min, 2 * r.M + 1, 1e-9 * (2 * r.M + 1));
    }
    EXPECT_LE(r.emp_max, r.sigma_max_sq * (1 + 1e-9));
    EXPECT_GE(r.emp_min, r.sigma_min_sq * (1 - 1e-9));
  }
  EXPECT_EQ(tight, 2);
}

}  // namespace
}  // namespace mbpns
