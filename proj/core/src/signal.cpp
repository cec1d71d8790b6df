#include "mbpns/signal.hpp"

#include <cmath>
#include <random>

#include "mbpns/error.hpp"
#include "separable.hpp"

namespace mbpns {

MultibandSignal::MultibandSignal(SamplingConfig cfg, Spectrum coeffs)
    : cfg_(std::move(cfg)), coeffs_(std::move(coeffs)) {
  for (const auto& [nu, a] : coeffs_) {
    if (static_cast<int>(nu.size()) != cfg_.d)
      throw GridMismatch("frequency " + to_string(nu) + " has wrong dimension");
    if (cfg_.T) {
      for (const auto& c : nu)
        if (!is_integer(c * *cfg_.T))
          throw GridMismatch("frequency " + to_string(nu) + " is off the (1/T)Z^d grid");
    }
    if (!spectrum_contains(cfg_, nu))
      throw RangeViolation("nu", to_string(nu) + " outside the multiband spectrum");
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MultibandSignal random_signal(const SamplingConfig& cfg, std::uint64_t seed) {
  const auto axis = spectrum_axis_grid(cfg);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Spectrum coeffs;
  for (auto& nu : cartesian(std::vector<std::vector<Rational>>(cfg.d, axis))) {
    const double re = normal(rng);
    const double im = normal(rng);
    coeffs.emplace(std::move(nu), Complex(re, im));
  }
  return MultibandSignal(cfg, std::move(coeffs));
}

Complex evaluate(const MultibandSignal& sig, const RatVec& x) {
  Complex acc{0.0, 0.0};
  for (const auto& [nu, a] : sig.coeffs()) acc += a * unit_phase(dot(nu, x));
  return acc;
}

std::vector<Complex> evaluate_points(const MultibandSignal& sig, const std::vector<RatVec>& xs) {
  std::vector<RatVec> keys;
  std::vector<Complex> values;
  keys.reserve(sig.coeffs().size());
  values.reserve(sig.coeffs().size());
  for (const auto& [nu, a] : sig.coeffs()) {
    keys.push_back(nu);
    values.push_back(a);
  }
  return detail::separable_sum(keys, values, xs, +1);
}

CoefficientBundle decompose(const MultibandSignal& sig) {
  const auto& cfg = sig.config();
  CoefficientBundle out;
  for (const auto& [nu, a] : sig.coeffs()) {
    BandIndex m = spectrum_contains(cfg, nu).value();
    RatVec key(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) key[i] = nu[i] - m[i] * cfg.N;
    out.bands[std::move(m)].emplace(std::move(key), a);
  }
  return out;
}

MultibandSignal recompose(const SamplingConfig& cfg, const CoefficientBundle& bundle) {
  Spectrum coeffs;
  for (const auto& [m, band] : bundle.bands) {
    for (const auto& [key, a] : band) {
      RatVec nu(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) nu[i] = key[i] + m[i] * cfg.N;
      coeffs.emplace(std::move(nu), a);
    }
  }
  return MultibandSignal(cfg, std::move(coeffs));
}

double period_volume(const SamplingConfig& cfg) {
  return std::pow(to_double(cfg.T.value_or(Rational(1))), cfg.d);
}

double norm_squared(const MultibandSignal& sig) {
  double s = 0.0;
  for (const auto& [nu, a] : sig.coeffs()) s += std::norm(a);
  return period_volume(sig.config()) * s;
}

std::map<BandIndex, double> band_norms_squared(const SamplingConfig& cfg,
                                               const CoefficientBundle& bundle) {
  std::map<BandIndex, double> out;
  const double vol = period_volume(cfg);
  for (const auto& [m, band] : bundle.bands) {
    double s = 0.0;
    for (const auto& [key, a] : band) s += std::norm(a);
    out[m] = vol * s;
  }
  return out;
}

MultibandSignal linear_combination(Complex alpha, const MultibandSignal& f, Complex beta,
                                   const MultibandSignal& g) {
  if (!(f.config() == g.config())) throw GridMismatch("signals have different configurations");
  Spectrum coeffs;
  for (const auto& [nu, a] : f.coeffs()) coeffs[nu] += alpha * a;
  for (const auto& [nu, a] : g.coeffs()) coeffs[nu] += beta * a;
  return MultibandSignal(f.config(), std::move(coeffs));
}

}  // namespace mbpns
