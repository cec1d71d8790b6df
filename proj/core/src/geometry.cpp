#include "mbpns/geometry.hpp"

#include <string>

#include "mbpns/error.hpp"

namespace mbpns {

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

const Rational kHalf(1, 2);

const Rational& require_period(const SamplingConfig& cfg) {
  if (!cfg.T) throw PeriodMisaligned("period T is not set");
  return *cfg.T;
}

}  // namespace

SamplingConfig validate_config(const SamplingConfig& cfg) {
  if (cfg.d < 1) throw RangeViolation("d", "d >= 1");
  if (cfg.M < 0) throw RangeViolation("M", "M >= 0");
  if (cfg.N < Rational(1)) throw RangeViolation("N", "N >= 1");
  if (cfg.Delta < 1 / cfg.N || cfg.Delta > Rational(1)) throw RangeViolation("Delta", "1/N <= Delta <= 1");
  if (cfg.delta <= Rational(0) || cfg.delta > 1 / ((2 * cfg.M + 1) * cfg.N))
    throw RangeViolation("delta", "0 < delta <= 1/((2M+1)N)");
  if (cfg.T) {
    if (*cfg.T <= Rational(0)) throw RangeViolation("T", "T > 0");
    if (!is_integer(cfg.N)) throw RangeViolation("N", "N integer when T is set");
    const Rational ratio = *cfg.T / cfg.Delta;
    if (!is_integer(ratio))
      throw PeriodMisaligned("T/Delta = " + to_string(ratio) + " is not an integer");
  }
  return cfg;
}

std::int64_t samples_per_axis(const SamplingConfig& cfg) {
  const Rational ratio = require_period(cfg) / cfg.Delta;
  if (!is_integer(ratio) || ratio <= Rational(0))
    throw PeriodMisaligned("T/Delta = " + to_string(ratio) + " is not a positive integer");
  return ratio.numerator();
}

std::optional<std::int64_t> axis_band(const SamplingConfig& cfg, const Rational& nu) {
  const std::int64_t m = floor((nu + kHalf) / cfg.N);
  if (nu >= m * cfg.N + kHalf) return std::nullopt;
  if (m < -cfg.M || m > cfg.M) return std::nullopt;
  return m;
}

std::optional<BandIndex> spectrum_contains(const SamplingConfig& cfg, const RatVec& nu) {
  BandIndex m(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const auto mi = axis_band(cfg, nu[i]);
    if (!mi) return std::nullopt;
    m[i] = *mi;
  }
  return m;
}

bool BandShift::present() const {
  for (const auto& a : axes)
    if (!a) return false;
  return true;
}

RatVec BandShift::z() const {
  RatVec out;
  for (const auto& a : axes) out.push_back(a.value().z);
  return out;
}

IntVec BandShift::L() const {
  IntVec out;
  for (const auto& a : axes) out.push_back(a.value().L);
  return out;
}

RatVec BandShift::alpha() const {
  RatVec out;
  for (const auto& a : axes) out.push_back(a.value().alpha);
  return out;
}

bool in_omega_delta(const SamplingConfig& cfg, const Rational& xi) {
  const Rational half_width = kHalf / cfg.Delta;
  return xi >= -half_width && xi < half_width;
}

std::optional<AxisShift> axis_band_shift(const SamplingConfig& cfg, std::int64_t m,
                                         const Rational& xi) {
  const Rational centre = m * cfg.N;
  const Rational lo = (centre - kHalf - xi) * cfg.Delta;
  const Rational hi = (centre + kHalf - xi) * cfg.Delta;
  const std::int64_t n = ceil(lo);
  if (Rational(n) >= hi) return std::nullopt;
  const Rational z = n / cfg.Delta;
  return AxisShift{z, n, centre - z};
}

BandShift band_shift(const SamplingConfig& cfg, const BandIndex& m, const RatVec& xi) {
  BandShift out;
  out.axes.reserve(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!in_omega_delta(cfg, xi[i]))
      throw RangeViolation("xi", "component " + to_string(xi[i]) + " outside Omega_Delta");
    out.axes.push_back(axis_band_shift(cfg, m[i], xi[i]));
  }
  return out;
}

std::vector<IntVec> index_box(int d, std::int64_t lo, std::int64_t hi) {
  std::vector<IntVec> out;
  if (hi < lo) return out;
  IntVec cur(static_cast<std::size_t>(d), lo);
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == hi) {
      cur[i] = lo;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<RatVec> cartesian(const std::vector<std::vector<Rational>>& axes) {
  std::vector<RatVec> out;
  for (const auto& a : axes)
    if (a.empty()) return out;
  const int d = static_cast<int>(axes.size());
  std::vector<std::size_t> pos(axes.size(), 0);
  while (true) {
    RatVec v(axes.size());
    for (int i = 0; i < d; ++i) v[i] = axes[i][pos[i]];
    out.push_back(std::move(v));
    int i = d - 1;
    while (i >= 0 && pos[i] + 1 == axes[i].size()) {
      pos[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pos[i];
  }
  return out;
}

std::vector<SamplePoint> sample_points(const SamplingConfig& cfg) {
  const std::int64_t per_axis = samples_per_axis(cfg);
  const auto js = index_box(cfg.d, 0, per_axis - 1);
  const auto ks = index_box(cfg.d, 0, 2 * cfg.M);
  std::vector<SamplePoint> out;
  out.reserve(js.size() * ks.size());
  for (const auto& j : js) {
    for (const auto& k : ks) {
      RatVec y(cfg.d);
      for (int i = 0; i < cfg.d; ++i) y[i] = (j[i] + k[i] * cfg.delta) * cfg.Delta;
      out.push_back({j, k, std::move(y)});
    }
  }
  return out;
}

std::vector<Rational> omega_delta_axis_grid(const SamplingConfig& cfg) {
  const Rational& T = require_period(cfg);
  const Rational half_width = kHalf / cfg.Delta;
  std::vector<Rational> out;
  for (std::int64_t n = ceil(-half_width * T); Rational(n) / T < half_width; ++n)
    out.emplace_back(Rational(n) / T);
  return out;
}

std::vector<RatVec> omega_delta_grid(const SamplingConfig& cfg) {
  return cartesian(std::vector<std::vector<Rational>>(cfg.d, omega_delta_axis_grid(cfg)));
}

std::vector<Rational> spectrum_axis_grid(const SamplingConfig& cfg) {
  const Rational& T = require_period(cfg);
  std::vector<Rational> out;
  for (int m = -cfg.M; m <= cfg.M; ++m) {
    const Rational centre = m * cfg.N;
    for (std::int64_t n = ceil((centre - kHalf) * T); Rational(n) / T < centre + kHalf; ++n)
      out.emplace_back(Rational(n) / T);
  }
  return out;
}

}  // namespace mbpns
