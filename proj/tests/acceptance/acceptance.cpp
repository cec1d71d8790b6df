// Acceptance checks 1-9. Usage: mbpns_acceptance [criterion ...]  (default: all)
// Prints one PASS/FAIL line per criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "support.hpp"

using namespace mbpns;
using mbpns::testing::describe;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << what << "; ";
    pass = pass && ok;
  }
};

constexpr std::uint64_t kSeed = 20240611;
constexpr int kSignals = 50;

double max_abs_slice(const FoldedSlice& s) {
  double m = 0.0;
  for (const auto& [xi, v] : s) m = std::max(m, std::abs(v));
  return m;
}

// 1. tight frames
void criterion1(Outcome& o) {
  double worst = 0.0;
  for (int d = 1; d <= 3; ++d)
    for (int M = 1; M <= 2; ++M) {
      const auto cfg = mbpns::testing::tight_config(d, M);
      const double want = std::pow(2 * M + 1, d);
      for (std::uint64_t s = 0; s < 100; ++s) {
        const double r = empirical_ratio(random_signal(cfg, derive_seed(kSeed, s)));
        worst = std::max(worst, std::abs(r - want) / want);
      }
    }
  o.require(worst <= 1e-9, "ratio deviates from (2M+1)^d");
  o.note << "max relative deviation " << worst;
}

// 2. perfect reconstruction
void criterion2(Outcome& o) {
  double worst = 0.0;
  for (const auto& cfg : mbpns::testing::reconstruction_grid()) {
    for (int s = 0; s < kSignals; ++s) {
      const auto sig = random_signal(cfg, derive_seed(kSeed, s));
      ReconstructOptions opt;
      opt.reference = &sig;
      const auto rep = reconstruct_iterative(analyze_all(take_samples(sig)), opt);
      worst = std::max(worst, rep.relative_l2_error);
      o.require(rep.relative_l2_error <= 1e-8, describe(cfg));
    }
  }
  o.note << "max relative L2 error " << worst;
}

// 3. two-path identity
void criterion3(Outcome& o) {
  double worst = 0.0;
  for (const auto& cfg : mbpns::testing::reconstruction_grid()) {
    for (int s = 0; s < kSignals; ++s) {
      const auto sig = random_signal(cfg, derive_seed(kSeed, s));
      const auto a = analyze_all(take_samples(sig));
      const auto b = forward_model_all(sig);
      for (const auto& [k, slice] : b.slices) {
        const double scale = max_abs_slice(slice);
        for (const auto& [xi, v] : slice) {
          const double e = std::abs(a.slices.at(k).at(xi) - v) / scale;
          worst = std::max(worst, e);
        }
      }
    }
    o.require(worst <= 1e-10, describe(cfg));
  }
  o.note << "max relative entry difference " << worst;
}

// 4. Gautschi and product bounds on the inverse
void criterion4(Outcome& o) {
  int rows = 0, gautschi_bad = 0, vest_upper_bad = 0, vest_lower_bad = 0;
  double worst_excess = 0.0;
  std::string first_vest;
  for (const auto& r : bounds_sweep(5, 2, 10)) {
    ++rows;
    if (!(r.gautschi.lower < r.inv_inf_norm && r.inv_inf_norm <= r.gautschi.upper * (1 + 1e-12))) ++gautschi_bad;
    if (!(r.inv_inf_norm > r.vest.lower)) ++vest_lower_bad;
    if (r.inv_inf_norm > r.vest.upper * (1 + 1e-12)) {
      if (vest_upper_bad++ == 0)
        first_vest = "M=" + std::to_string(r.M) + " N=" + to_string(r.N) + " delta=" + to_string(r.delta) + ": " +
                     std::to_string(r.inv_inf_norm) + " > " + std::to_string(r.vest.upper);
      worst_excess = std::max(worst_excess, r.inv_inf_norm / r.vest.upper);
    }
  }
  double roots_dev = 0.0;
  for (int M = 0; M <= 5; ++M) {
    SamplingConfig cfg;
    cfg.M = M;
    cfg.delta = Rational(1, 2 * M + 1);
    roots_dev = std::max(roots_dev, std::abs(bounds_row(validate_config(cfg)).inv_inf_norm - 1.0));
  }
  o.require(gautschi_bad == 0, "Gautschi sandwich violated");
  o.require(vest_lower_bad == 0, "1/(2M+1) lower bound violated");
  o.require(vest_upper_bad == 0, "product upper bound exceeded (" + first_vest + ")");
  o.require(roots_dev <= 1e-12, "roots-of-unity norm differs from 1");
  o.note << rows << " systems; Gautschi violations " << gautschi_bad << "; product-bound violations " << vest_upper_bad
         << " (max ratio " << worst_excess << "); roots-of-unity deviation " << roots_dev;
}

// 5. stability constants
void criterion5(Outcome& o) {
  std::string below;
  for (const auto& cfg : mbpns::testing::reconstruction_grid()) {
    const auto th = theoretical_bounds(cfg);
    const auto e = per_frequency_extremes(cfg);
    const double smin = e.lower * e.lower;
    const double smax = e.upper * e.upper;
    if (smin < th.A_lower * (1 - 1e-9)) {
      below += describe(cfg) + " (sigma_min^2=" + std::to_string(smin) + " < A_lower=" + std::to_string(th.A_lower) + ") ";
    }
    o.require(smax <= std::pow(2 * cfg.M + 1, 2 * cfg.d) * (1 + 1e-9), "sigma_max^2 above (2M+1)^{2d} at " + describe(cfg));
    const auto emp = empirical_frame_bounds(cfg, kSignals, kSeed);
    o.require(emp.lower >= smin * (1 - 1e-9) && emp.upper <= smax * (1 + 1e-9),
              "empirical ratio outside [sigma_min^2, sigma_max^2] at " + describe(cfg));
  }
  o.require(below.empty(), "sigma_min^2 below A_lower at " + below);
  const double spot = theoretical_bounds(mbpns::testing::make_config(1, 1, 2, Rational(1, 2), Rational(1, 6))).A_lower;
  o.require(std::abs(spot - 1.0 / 16.0) <= 1e-12, "A_lower spot value");
  o.note << "A_lower(d=1,M=1,N=2,delta=1/6)=" << spot;
}

// 6. iterative vs oracle, axis permutations
void criterion6(Outcome& o) {
  double worst = 0.0, worst_perm = 0.0;
  for (const auto& cfg : mbpns::testing::reconstruction_grid()) {
    for (int s = 0; s < kSignals; ++s) {
      const auto spectra = analyze_all(take_samples(random_signal(cfg, derive_seed(kSeed, s))));
      const auto it = reconstruct_iterative(spectra);
      const auto orc = reconstruct_oracle(spectra);
      for (const auto& [xi, u] : it.unknowns)
        for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(u[i] - orc.unknowns.at(xi)[i]));
      if (cfg.d < 2 || s >= 5) continue;
      std::vector<int> order(cfg.d);
      std::iota(order.begin(), order.end(), 0);
      while (std::next_permutation(order.begin(), order.end())) {
        ReconstructOptions opt;
        opt.axis_order = order;
        const auto p = reconstruct_iterative(spectra, opt);
        for (const auto& [xi, u] : p.unknowns)
          for (std::size_t i = 0; i < u.size(); ++i) worst_perm = std::max(worst_perm, std::abs(u[i] - it.unknowns.at(xi)[i]));
      }
    }
  }
  o.require(worst <= 1e-9, "iterative and oracle unknowns differ");
  o.require(worst_perm <= 1e-10, "axis order changes the unknowns");
  o.note << "max |iterative - oracle| " << worst << "; max permutation difference " << worst_perm;
}

// 7. Parseval over bands
void criterion7(Outcome& o) {
  double worst = 0.0;
  int count = 0;
  for (int d = 1; d <= 3; ++d) {
    const std::vector<SamplingConfig> cfgs{mbpns::testing::make_config(d, 1, 1, Rational(1), Rational(1, 3)),
                                           mbpns::testing::make_config(d, 1, 2, Rational(1, 2), Rational(1, 6))};
    for (const auto& cfg : cfgs)
      for (std::uint64_t s = 0; s < 34; ++s) {
        const auto sig = random_signal(cfg, derive_seed(kSeed + 7, s));
        double sum = 0.0;
        for (const auto& [m, e] : band_norms_squared(cfg, decompose(sig))) sum += e;
        const double total = norm_squared(sig);
        worst = std::max(worst, std::abs(total - sum) / total);
        ++count;
      }
  }
  o.require(worst <= 1e-12, "band energies do not sum to the signal energy");
  o.note << count << " signals; max relative difference " << worst;
}

// 8. interpolation consistency
void criterion8(Outcome& o) {
  double worst = 0.0;
  for (const auto& cfg : mbpns::testing::reconstruction_grid()) {
    const auto pts = sample_points(cfg);
    for (int s = 0; s < kSignals; ++s) {
      const auto grid = take_samples(random_signal(cfg, derive_seed(kSeed, s)));
      double scale = 0.0;
      for (const auto& [key, v] : grid.values()) scale = std::max(scale, std::abs(v));
      for (const auto& k : index_box(cfg.d, 0, 2 * cfg.M)) {
        std::vector<RatVec> xs;
        std::vector<Complex> want;
        for (const auto& p : pts)
          if (p.k == k) {
            xs.push_back(p.y);
            want.push_back(grid.values().at({p.j, p.k}));
          }
        const auto got = synthesize(cfg, analyze(grid, k), xs);
        for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]) / scale);
      }
    }
    o.require(worst <= 1e-10, describe(cfg));
  }
  o.note << "max relative mismatch " << worst;
}

// 9. per-offset energy identity
void criterion9(Outcome& o) {
  double worst = 0.0;
  for (const auto& cfg : mbpns::testing::reconstruction_grid()) {
    for (int s = 0; s < kSignals; ++s) {
      const auto grid = take_samples(random_signal(cfg, derive_seed(kSeed, s)));
      for (const auto& k : index_box(cfg.d, 0, 2 * cfg.M)) {
        const double e = offset_energy(grid, k);
        worst = std::max(worst, std::abs(slice_norm_squared(cfg, analyze(grid, k)) - e) / e);
      }
    }
    o.require(worst <= 1e-10, describe(cfg));
  }
  o.note << "max relative difference " << worst;
}

struct Criterion {
  const char* title;
  void (*run)(Outcome&);
  double budget_s;  // 0: no runtime limit
};

const Criterion kCriteria[] = {
    {"tight-frame constants", criterion1, 10.0},
    {"perfect reconstruction", criterion2, 60.0},
    {"two-path identity", criterion3, 0.0},
    {"Gautschi and product bounds", criterion4, 0.0},
    {"stability sandwich", criterion5, 0.0},
    {"oracle equivalence", criterion6, 0.0},
    {"Parseval", criterion7, 0.0},
    {"interpolation consistency", criterion8, 0.0},
    {"energy identity", criterion9, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const int c = std::atoi(argv[i]);
    if (c < 1 || c > 9) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    which.push_back(c);
  }
  if (which.empty())
    for (int c = 1; c <= 9; ++c) which.push_back(c);

  int failed = 0;
  for (const int c : which) {
    const auto& crit = kCriteria[c - 1];
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (crit.budget_s > 0 && secs > crit.budget_s) {
      o.pass = false;
      o.note << "; runtime " << secs << " s over budget " << crit.budget_s << " s";
    }
    std::printf("criterion %d %s: %s: %s (%.2f s)\n", c, o.pass ? "PASS" : "FAIL", crit.title, o.note.str().c_str(), secs);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
