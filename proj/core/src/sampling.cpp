#include "mbpns/sampling.hpp"

#include <cmath>

#include "mbpns/error.hpp"
#include "separable.hpp"

namespace mbpns {

namespace {

RatVec sample_position(const SamplingConfig& cfg, const IntVec& j, const OffsetIndex& k) {
  RatVec y(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) y[i] = (j[i] + k[i] * cfg.delta) * cfg.Delta;
  return y;
}

double delta_volume(const SamplingConfig& cfg) { return std::pow(to_double(cfg.Delta), cfg.d); }

}  // namespace

SampleGrid::SampleGrid(SamplingConfig cfg, std::map<SampleKey, Complex> values)
    : cfg_(std::move(cfg)), values_(std::move(values)) {
  const std::int64_t per_axis = samples_per_axis(cfg_);
  std::size_t expected = 1;
  for (int i = 0; i < cfg_.d; ++i)
    expected *= static_cast<std::size_t>(per_axis) * static_cast<std::size_t>(2 * cfg_.M + 1);
  if (values_.size() != expected)
    throw GridMismatch("sample grid has " + std::to_string(values_.size()) + " entries, expected " +
                       std::to_string(expected));
  for (const auto& [key, v] : values_) {
    if (static_cast<int>(key.j.size()) != cfg_.d || static_cast<int>(key.k.size()) != cfg_.d)
      throw GridMismatch("sample index has wrong dimension");
    for (int i = 0; i < cfg_.d; ++i) {
      if (key.j[i] < 0 || key.j[i] >= per_axis || key.k[i] < 0 || key.k[i] > 2 * cfg_.M)
        throw GridMismatch("sample index " + to_string(key.j) + "," + to_string(key.k) +
                           " out of range");
    }
  }
}

SampleGrid take_samples(const MultibandSignal& sig) {
  const auto& cfg = sig.config();
  const auto points = sample_points(cfg);
  std::vector<RatVec> ys;
  ys.reserve(points.size());
  for (const auto& p : points) ys.push_back(p.y);
  const auto vals = evaluate_points(sig, ys);
  std::map<SampleKey, Complex> values;
  for (std::size_t i = 0; i < points.size(); ++i)
    values.emplace_hint(values.end(), SampleKey{points[i].j, points[i].k}, vals[i]);
  return SampleGrid(cfg, std::move(values));
}

FoldedSlice analyze(const SampleGrid& grid, const OffsetIndex& k) {
  const auto& cfg = grid.config();
  std::vector<RatVec> ys;
  std::vector<Complex> gs;
  for (const auto& [key, v] : grid.values()) {
    if (key.k != k) continue;
    ys.push_back(sample_position(cfg, key.j, key.k));
    gs.push_back(v);
  }
  const auto xis = omega_delta_grid(cfg);
  const auto sums = detail::separable_sum(ys, gs, xis, -1);
  const double scale = 1.0 / static_cast<double>(ys.size());  // (Delta/T)^d
  FoldedSlice out;
  for (std::size_t i = 0; i < xis.size(); ++i) out.emplace_hint(out.end(), xis[i], sums[i] * scale);
  return out;
}

FoldedSpectrum analyze_all(const SampleGrid& grid) {
  FoldedSpectrum out{grid.config(), {}};
  for (const auto& k : index_box(grid.config().d, 0, 2 * grid.config().M))
    out.slices.emplace(k, analyze(grid, k));
  return out;
}

FoldedSlice forward_model(const MultibandSignal& sig, const OffsetIndex& k) {
  const auto& cfg = sig.config();
  const auto bundle = decompose(sig);
  const auto bands = index_box(cfg.d, -cfg.M, cfg.M);
  FoldedSlice out;
  for (const auto& xi : omega_delta_grid(cfg)) {
    Complex acc{0.0, 0.0};
    for (const auto& m : bands) {
      const auto shift = band_shift(cfg, m, xi);
      if (!shift.present()) continue;
      const auto band = bundle.bands.find(m);
      if (band == bundle.bands.end()) continue;
      const RatVec alpha = shift.alpha();
      RatVec key(xi.size());
      for (std::size_t i = 0; i < xi.size(); ++i) key[i] = xi[i] - alpha[i];
      const auto c = band->second.find(key);
      if (c == band->second.end()) continue;
      const IntVec L = shift.L();
      std::int64_t lk = 0;
      for (std::size_t i = 0; i < L.size(); ++i) lk += L[i] * k[i];
      acc += c->second * unit_phase(lk * cfg.delta);
    }
    out.emplace_hint(out.end(), xi, acc);
  }
  return out;
}

FoldedSpectrum forward_model_all(const MultibandSignal& sig) {
  FoldedSpectrum out{sig.config(), {}};
  for (const auto& k : index_box(sig.config().d, 0, 2 * sig.config().M))
    out.slices.emplace(k, forward_model(sig, k));
  return out;
}

double sampling_energy(const SampleGrid& grid) {
  double s = 0.0;
  for (const auto& [key, v] : grid.values()) s += std::norm(v);
  return delta_volume(grid.config()) * s;
}

double offset_energy(const SampleGrid& grid, const OffsetIndex& k) {
  double s = 0.0;
  for (const auto& [key, v] : grid.values())
    if (key.k == k) s += std::norm(v);
  return delta_volume(grid.config()) * s;
}

std::vector<Complex> synthesize(const SamplingConfig& /*cfg*/, const FoldedSlice& slice,
                                const std::vector<RatVec>& xs) {
  std::vector<RatVec> keys;
  std::vector<Complex> values;
  for (const auto& [xi, v] : slice) {
    keys.push_back(xi);
    values.push_back(v);
  }
  return detail::separable_sum(keys, values, xs, +1);
}

double slice_norm_squared(const SamplingConfig& cfg, const FoldedSlice& slice) {
  double s = 0.0;
  for (const auto& [xi, v] : slice) s += std::norm(v);
  return period_volume(cfg) * s;
}

}  // namespace mbpns
