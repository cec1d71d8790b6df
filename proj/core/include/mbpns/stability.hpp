#ifndef MBPNS_STABILITY_HPP_
#define MBPNS_STABILITY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mbpns/geometry.hpp"
#include "mbpns/signal.hpp"
#include "mbpns/vandermonde.hpp"

namespace mbpns {

// Frame constants A, B with A ||f||^2 <= Delta^d sum_y |f(y)|^2 <= B ||f||^2.
struct TheoreticalBounds {
  double A_lower;  // (2M+1)^{-d} (prod_{m=1}^{2M} sin(m pi delta))^{2d}
  double B_lower;  // (2M+1)^d
  double B_upper;  // (2M+1)^{2d}
  bool tight;      // N = 1, delta = 1/(2M+1): A = B = (2M+1)^d
};

TheoreticalBounds theoretical_bounds(const SamplingConfig& cfg);

// Delta^d sum_{y in X, one period} |f(y)|^2 / norm_squared(f). Throws ZeroSignal.
double empirical_ratio(const MultibandSignal& sig);

// min/max of empirical_ratio over `trials` random signals; trial t uses
// derive_seed(seed, t), so the result does not depend on thread scheduling.
Bracket empirical_frame_bounds(const SamplingConfig& cfg, int trials, std::uint64_t seed);

// Extreme singular values of the per-frequency full systems over the
// Omega_Delta grid (frequencies with no active band are skipped). The exact
// frame bounds of the periodic model are sigma_min^2 and sigma_max^2.
Bracket per_frequency_extremes(const SamplingConfig& cfg);

// Unit-norm signal supported on one fibre xi + z_m(xi) whose coefficients are
// the right singular vector of the smallest (or largest) singular value; its
// empirical ratio equals that singular value squared.
MultibandSignal singular_direction_signal(const SamplingConfig& cfg, bool smallest);

struct StabilityReport {
  double A_lower;
  double B_lower;
  double B_upper;
  bool tight;
  double empirical_min_ratio;
  double empirical_max_ratio;
  int trials;
  std::uint64_t seed;
  double sigma_min;
  double sigma_max;
};

StabilityReport verify(const SamplingConfig& cfg, int trials, std::uint64_t seed);

// Checks with relative slack `rel_tol`:
//   A_lower <= emp_min <= emp_max <= B_upper,
//   sigma_min^2 <= emp_min, emp_max <= sigma_max^2,
//   sigma_min^2 >= A_lower, sigma_max^2 <= B_upper, A_lower <= B_upper.
// Returns a description of each violated inequality.
std::vector<std::string> violations(const StabilityReport& report, double rel_tol = 1e-9);

struct SweepRow {
  int d;
  int M;
  Rational N;
  Rational Delta;
  Rational delta;
  double A_lower;
  double B_upper;
  double emp_min;
  double emp_max;
  double sigma_min_sq;
  double sigma_max_sq;
  bool tight;
};

// M in 1..max_M, N in 1..max_N, Delta = 1/N, delta = t/(steps (2M+1) N) for
// t = 1..steps; d and T come from `base`.
std::vector<SweepRow> sweep(const SamplingConfig& base, int max_M, int max_N, int steps, int trials,
                            std::uint64_t seed);

}  // namespace mbpns

#endif  // MBPNS_STABILITY_HPP_
