#include "mbpns/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "mbpns/error.hpp"
#include "mbpns/parallel.hpp"
#include "mbpns/vandermonde.hpp"

namespace mbpns {

std::string to_string(Method m) { return m == Method::iterative ? "iterative" : "oracle"; }

namespace {

struct AxisFolding {
  // Indexed by m + M.
  std::vector<std::optional<AxisShift>> shifts;
  bool complete() const {
    return std::all_of(shifts.begin(), shifts.end(), [](const auto& s) { return s.has_value(); });
  }
  bool empty() const {
    return std::none_of(shifts.begin(), shifts.end(), [](const auto& s) { return s.has_value(); });
  }
};

std::vector<AxisFolding> fold_axes(const SamplingConfig& cfg, const RatVec& xi) {
  std::vector<AxisFolding> out(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!in_omega_delta(cfg, xi[i]))
      throw GridMismatch("frequency " + to_string(xi) + " outside Omega_Delta");
    for (std::int64_t m = -cfg.M; m <= cfg.M; ++m)
      out[i].shifts.push_back(axis_band_shift(cfg, m, xi[i]));
  }
  return out;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Folded values per xi, offsets flattened in index_box order.
struct Rhs {
  std::vector<RatVec> xis;
  std::vector<std::vector<Complex>> values;
};

Rhs gather(const FoldedSpectrum& spectra) {
  const auto& cfg = spectra.cfg;
  if (!cfg.T) throw GridMismatch("folded spectrum has no period");
  const auto grid = omega_delta_grid(cfg);
  const auto offsets = index_box(cfg.d, 0, 2 * cfg.M);
  if (spectra.slices.size() != offsets.size())
    throw GridMismatch("expected " + std::to_string(offsets.size()) + " offset slices, got " +
                       std::to_string(spectra.slices.size()));
  Rhs rhs{grid, std::vector<std::vector<Complex>>(grid.size(), std::vector<Complex>(offsets.size()))};
  for (std::size_t r = 0; r < offsets.size(); ++r) {
    const auto it = spectra.slices.find(offsets[r]);
    if (it == spectra.slices.end())
      throw GridMismatch("missing offset slice " + to_string(offsets[r]));
    if (it->second.size() != grid.size())
      throw GridMismatch("slice " + to_string(offsets[r]) + " does not match the Omega_Delta grid");
    std::size_t x = 0;
    for (const auto& [xi, v] : it->second) {
      if (xi != grid[x]) throw GridMismatch("slice frequency " + to_string(xi) + " off grid");
      rhs.values[x][r] = v;
      ++x;
    }
  }
  return rhs;
}

struct FrequencyResult {
  std::vector<Complex> unknowns;
  std::vector<double> residuals;  // per step
  bool fallback = false;
};

FrequencyResult solve_oracle_at(const SamplingConfig& cfg, const RatVec& xi,
                                const std::vector<Complex>& rhs) {
  const std::size_t n_bands = ipow(2 * cfg.M + 1, cfg.d);
  FrequencyResult out{std::vector<Complex>(n_bands, Complex{}), {0.0}, false};
  const FullSystem sys = full_system(cfg, xi);
  if (sys.active.empty()) return out;
  Eigen::Map<const Eigen::VectorXcd> b(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(sys.matrix);
  if (qr.rank() < static_cast<Eigen::Index>(sys.active.size()))
    throw SingularSystem("full system at xi=" + to_string(xi) + " has rank " +
                         std::to_string(qr.rank()) + " < " + std::to_string(sys.active.size()));
  const Eigen::VectorXcd x = qr.solve(b);
  const double scale = b.cwiseAbs().maxCoeff();
  const double err = (sys.matrix * x - b).cwiseAbs().maxCoeff();
  out.residuals[0] = scale > 0.0 ? err / scale : err;

  const int n = 2 * cfg.M + 1;
  for (std::size_t c = 0; c < sys.active.size(); ++c) {
    std::size_t flat = 0;
    for (const auto m : sys.active[c]) flat = flat * n + static_cast<std::size_t>(m + cfg.M);
    out.unknowns[flat] = x(static_cast<Eigen::Index>(c));
  }
  return out;
}

FrequencyResult solve_iterative_at(const SamplingConfig& cfg, const RatVec& xi,
                                   const std::vector<Complex>& rhs,
                                   const std::vector<int>& order) {
  const auto axes = fold_axes(cfg, xi);
  const int d = cfg.d;
  const std::size_t n = static_cast<std::size_t>(2 * cfg.M + 1);
  for (const auto& a : axes) {
    if (a.empty()) return {std::vector<Complex>(ipow(n, d), Complex{}), std::vector<double>(d, 0.0), false};
  }
  if (!std::all_of(axes.begin(), axes.end(), [](const auto& a) { return a.complete(); })) {
    auto r = solve_oracle_at(cfg, xi, rhs);
    r.residuals.resize(d, r.residuals[0]);
    r.fallback = true;
    return r;
  }

  FrequencyResult out{rhs, std::vector<double>(d, 0.0), false};
  auto& t = out.unknowns;
  const std::size_t total = t.size();
  std::vector<Complex> fibre(n);
  for (std::size_t step = 0; step < order.size(); ++step) {
    const int axis = order[step];
    std::vector<Rational> turns;
    std::vector<std::int64_t> bands;
    for (std::int64_t m = -cfg.M; m <= cfg.M; ++m) {
      turns.push_back(axes[axis].shifts[m + cfg.M]->L * cfg.delta);
      bands.push_back(m);
    }
    const VandermondeSystem sys(NodeSet::from_turns(std::move(turns), std::move(bands)));
    const std::size_t stride = ipow(n, d - 1 - axis);
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % n != 0) continue;
      for (std::size_t r = 0; r < n; ++r) fibre[r] = t[base + r * stride];
      const auto x = sys.solve(fibre);
      out.residuals[step] = std::max(out.residuals[step], relative_residual(sys, x, fibre));
      for (std::size_t r = 0; r < n; ++r) t[base + r * stride] = x[r];
    }
  }
  return out;
}

MultibandSignal assemble(const SamplingConfig& cfg, const UnknownTensor& unknowns) {
  const auto bands = index_box(cfg.d, -cfg.M, cfg.M);
  Spectrum coeffs;
  for (const auto& [xi, values] : unknowns) {
    for (std::size_t c = 0; c < bands.size(); ++c) {
      const auto shift = band_shift(cfg, bands[c], xi);
      if (!shift.present()) continue;
      const RatVec z = shift.z();
      RatVec nu(xi.size());
      for (std::size_t i = 0; i < xi.size(); ++i) nu[i] = xi[i] + z[i];
      coeffs.emplace(std::move(nu), values[c]);
    }
  }
  return MultibandSignal(cfg, std::move(coeffs));
}

double spectral_mismatch(const FoldedSpectrum& spectra, const MultibandSignal& recovered) {
  const auto model = forward_model_all(recovered);
  double num = 0.0;
  double den = 0.0;
  for (const auto& [k, slice] : spectra.slices) {
    const auto& other = model.slices.at(k);
    for (const auto& [xi, v] : slice) {
      num += std::norm(v - other.at(xi));
      den += std::norm(v);
    }
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

template <typename Solver>
ReconstructionReport run(const FoldedSpectrum& spectra, const ReconstructOptions& options,
                         Method method, int steps, Solver&& solver) {
  const auto& cfg = spectra.cfg;
  const Rhs rhs = gather(spectra);
  std::vector<FrequencyResult> results(rhs.xis.size());
  parallel_for(rhs.xis.size(), [&](std::size_t i) { results[i] = solver(rhs.xis[i], rhs.values[i]); });

  UnknownTensor unknowns;
  std::vector<double> residuals(static_cast<std::size_t>(steps), 0.0);
  std::size_t fallbacks = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t s = 0; s < residuals.size(); ++s)
      residuals[s] = std::max(residuals[s], results[i].residuals[s]);
    if (results[i].fallback) ++fallbacks;
    unknowns.emplace_hint(unknowns.end(), rhs.xis[i], std::move(results[i].unknowns));
  }
  MultibandSignal recovered = assemble(cfg, unknowns);
  const double err = options.reference ? reconstruction_error(*options.reference, recovered)
                                       : spectral_mismatch(spectra, recovered);
  return {std::move(recovered), std::move(unknowns), err, std::move(residuals), method, fallbacks};
}

}  // namespace

ReconstructionReport reconstruct_iterative(const FoldedSpectrum& spectra,
                                           const ReconstructOptions& options) {
  const auto& cfg = spectra.cfg;
  std::vector<int> order = options.axis_order;
  if (order.empty())
    for (int a = cfg.d - 1; a >= 0; --a) order.push_back(a);
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int a = 0; a < cfg.d; ++a)
    if (static_cast<int>(sorted.size()) != cfg.d || sorted[a] != a)
      throw RangeViolation("axis_order", "must be a permutation of 0..d-1");
  return run(spectra, options, Method::iterative, cfg.d,
             [&](const RatVec& xi, const std::vector<Complex>& b) {
               return solve_iterative_at(cfg, xi, b, order);
             });
}

ReconstructionReport reconstruct_oracle(const FoldedSpectrum& spectra,
                                        const ReconstructOptions& options) {
  const auto& cfg = spectra.cfg;
  return run(spectra, options, Method::oracle, 1,
             [&](const RatVec& xi, const std::vector<Complex>& b) { return solve_oracle_at(cfg, xi, b); });
}

double reconstruction_error(const MultibandSignal& original, const MultibandSignal& recovered) {
  if (!(original.config() == recovered.config()))
    throw GridMismatch("original and recovered signals have different configurations");
  double num = 0.0;
  double den = 0.0;
  for (const auto& [nu, a] : original.coeffs()) {
    const auto it = recovered.coeffs().find(nu);
    const Complex b = it == recovered.coeffs().end() ? Complex{} : it->second;
    num += std::norm(a - b);
    den += std::norm(a);
  }
  for (const auto& [nu, b] : recovered.coeffs())
    if (!original.coeffs().contains(nu)) num += std::norm(b);
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

FullSystem full_system(const SamplingConfig& cfg, const RatVec& xi) {
  const auto axes = fold_axes(cfg, xi);
  const auto offsets = index_box(cfg.d, 0, 2 * cfg.M);
  FullSystem out;
  std::vector<IntVec> Ls;
  for (const auto& m : index_box(cfg.d, -cfg.M, cfg.M)) {
    IntVec L(m.size());
    bool present = true;
    for (std::size_t i = 0; i < m.size() && present; ++i) {
      const auto& s = axes[i].shifts[m[i] + cfg.M];
      if (!s) present = false;
      else L[i] = s->L;
    }
    if (!present) continue;
    out.active.push_back(m);
    Ls.push_back(std::move(L));
  }
  out.matrix.resize(static_cast<Eigen::Index>(offsets.size()), static_cast<Eigen::Index>(Ls.size()));
  for (std::size_t r = 0; r < offsets.size(); ++r) {
    for (std::size_t c = 0; c < Ls.size(); ++c) {
      std::int64_t lk = 0;
      for (std::size_t i = 0; i < Ls[c].size(); ++i) lk += Ls[c][i] * offsets[r][i];
      out.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = unit_phase(lk * cfg.delta);
    }
  }
  return out;
}

Eigen::MatrixXcd kronecker(const std::vector<Eigen::MatrixXcd>& factors) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
  for (const auto& f : factors) {
    Eigen::MatrixXcd next(acc.rows() * f.rows(), acc.cols() * f.cols());
    for (Eigen::Index i = 0; i < acc.rows(); ++i)
      for (Eigen::Index j = 0; j < acc.cols(); ++j)
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = acc(i, j) * f;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace mbpns
