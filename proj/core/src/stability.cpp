#include "mbpns/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mbpns/error.hpp"
#include "mbpns/parallel.hpp"
#include "mbpns/reconstruct.hpp"
#include "mbpns/sampling.hpp"

namespace mbpns {

TheoreticalBounds theoretical_bounds(const SamplingConfig& cfg) {
  const double n = 2.0 * cfg.M + 1.0;
  const double n_d = std::pow(n, cfg.d);
  if (cfg.tight()) return {n_d, n_d, n_d, true};
  double prod = 1.0;
  for (int m = 1; m <= 2 * cfg.M; ++m) prod *= std::sin(std::numbers::pi * to_double(m * cfg.delta));
  return {std::pow(prod, 2.0 * cfg.d) / n_d, n_d, n_d * n_d, false};
}

double empirical_ratio(const MultibandSignal& sig) {
  const double energy = norm_squared(sig);
  if (energy == 0.0) throw ZeroSignal("empirical ratio of a zero signal");
  return sampling_energy(take_samples(sig)) / energy;
}

Bracket empirical_frame_bounds(const SamplingConfig& cfg, int trials, std::uint64_t seed) {
  if (trials < 1) throw RangeViolation("trials", "trials >= 1");
  std::vector<double> ratios(static_cast<std::size_t>(trials));
  parallel_for(ratios.size(), [&](std::size_t t) {
    ratios[t] = empirical_ratio(random_signal(cfg, derive_seed(seed, t)));
  });
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  return {*lo, *hi};
}

namespace {

struct Extreme {
  double sigma = 0.0;
  RatVec xi;
};

struct Extremes {
  Extreme min{std::numeric_limits<double>::infinity(), {}};
  Extreme max{0.0, {}};
};

Extremes scan_extremes(const SamplingConfig& cfg) {
  const auto grid = omega_delta_grid(cfg);
  std::vector<Extremes> per_xi(grid.size());
  std::vector<char> used(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto sys = full_system(cfg, grid[i]);
    if (sys.active.empty()) return;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.matrix);
    const auto& s = svd.singularValues();
    per_xi[i].max = {s(0), grid[i]};
    per_xi[i].min = {s(s.size() - 1), grid[i]};
    used[i] = 1;
  });
  Extremes out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!used[i]) continue;
    if (per_xi[i].min.sigma < out.min.sigma) out.min = per_xi[i].min;
    if (per_xi[i].max.sigma > out.max.sigma) out.max = per_xi[i].max;
  }
  return out;
}

}  // namespace

Bracket per_frequency_extremes(const SamplingConfig& cfg) {
  const auto e = scan_extremes(cfg);
  if (e.max.xi.empty()) return {0.0, 0.0};
  return {e.min.sigma, e.max.sigma};
}

MultibandSignal singular_direction_signal(const SamplingConfig& cfg, bool smallest) {
  const auto e = scan_extremes(cfg);
  const RatVec& xi = smallest ? e.min.xi : e.max.xi;
  if (xi.empty()) throw SingularSystem("no frequency with an active band");
  const auto sys = full_system(cfg, xi);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.matrix, Eigen::ComputeThinV);
  const auto& v = svd.matrixV();
  const Eigen::Index col = smallest ? v.cols() - 1 : 0;
  Spectrum coeffs;
  for (std::size_t c = 0; c < sys.active.size(); ++c) {
    const RatVec z = band_shift(cfg, sys.active[c], xi).z();
    RatVec nu(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) nu[i] = xi[i] + z[i];
    coeffs.emplace(std::move(nu), v(static_cast<Eigen::Index>(c), col));
  }
  return MultibandSignal(cfg, std::move(coeffs));
}

StabilityReport verify(const SamplingConfig& cfg, int trials, std::uint64_t seed) {
  const auto theory = theoretical_bounds(cfg);
  const auto emp = empirical_frame_bounds(cfg, trials, seed);
  const auto sv = per_frequency_extremes(cfg);
  return {theory.A_lower, theory.B_lower, theory.B_upper, theory.tight, emp.lower, emp.upper,
          trials,         seed,           sv.lower,       sv.upper};
}

std::vector<std::string> violations(const StabilityReport& r, double rel_tol) {
  std::vector<std::string> out;
  auto check = [&](double lhs, double rhs, const char* what) {
    if (lhs > rhs + rel_tol * std::max(std::abs(lhs), std::abs(rhs))) {
      std::ostringstream os;
      os.precision(17);
      os << what << ": " << lhs << " > " << rhs;
      out.push_back(os.str());
    }
  };
  const double smin2 = r.sigma_min * r.sigma_min;
  const double smax2 = r.sigma_max * r.sigma_max;
  check(r.A_lower, r.empirical_min_ratio, "A_lower <= empirical_min_ratio");
  check(r.empirical_min_ratio, r.empirical_max_ratio, "empirical_min_ratio <= empirical_max_ratio");
  check(r.empirical_max_ratio, r.B_upper, "empirical_max_ratio <= B_upper");
  check(smin2, r.empirical_min_ratio, "sigma_min^2 <= empirical_min_ratio");
  check(r.empirical_max_ratio, smax2, "empirical_max_ratio <= sigma_max^2");
  check(r.A_lower, smin2, "A_lower <= sigma_min^2");
  check(smax2, r.B_upper, "sigma_max^2 <= B_upper");
  check(r.A_lower, r.B_upper, "A_lower <= B_upper");
  return out;
}

std::vector<SweepRow> sweep(const SamplingConfig& base, int max_M, int max_N, int steps, int trials,
                            std::uint64_t seed) {
  std::vector<SweepRow> rows;
  for (int M = 1; M <= max_M; ++M) {
    for (int N = 1; N <= max_N; ++N) {
      for (int t = 1; t <= steps; ++t) {
        SamplingConfig cfg = base;
        cfg.M = M;
        cfg.N = N;
        cfg.Delta = Rational(1, N);
        cfg.delta = Rational(t, steps * (2 * M + 1) * N);
        validate_config(cfg);
        const auto r = verify(cfg, trials, seed);
        rows.push_back({cfg.d, M, cfg.N, cfg.Delta, cfg.delta, r.A_lower, r.B_upper,
                        r.empirical_min_ratio, r.empirical_max_ratio, r.sigma_min * r.sigma_min,
                        r.sigma_max * r.sigma_max, r.tight});
      }
    }
  }
  return rows;
}

}  // namespace mbpns
