#ifndef MBPNS_TESTS_SUPPORT_HPP_
#define MBPNS_TESTS_SUPPORT_HPP_

// Shared configuration grids and reference implementations for the test
// binaries. The reference code deliberately avoids the library's own folding
// and evaluation routines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mbpns/mbpns.hpp"

namespace mbpns::testing {

inline SamplingConfig make_config(int d, int M, std::int64_t N, Rational Delta, Rational delta,
                                  std::optional<Rational> T = Rational(2)) {
  SamplingConfig cfg;
  cfg.d = d;
  cfg.M = M;
  cfg.N = Rational(N);
  cfg.Delta = Delta;
  cfg.delta = delta;
  cfg.T = T;
  return validate_config(cfg);
}

inline SamplingConfig tight_config(int d, int M, Rational T = Rational(2)) {
  return make_config(d, M, 1, Rational(1), Rational(1, 2 * M + 1), T);
}

// d=1: M, N in {1,2}, delta in {1/((2M+1)N), 1/(2(2M+1)N)}, Delta = 1/N;
// d=2: M=1, N in {1,2}, delta = 1/(3N), Delta = 1/N; d=3: the tight M=1 case.
inline std::vector<SamplingConfig> reconstruction_grid() {
  std::vector<SamplingConfig> out;
  for (int M = 1; M <= 2; ++M)
    for (std::int64_t N = 1; N <= 2; ++N)
      for (std::int64_t f = 1; f <= 2; ++f)
        out.push_back(make_config(1, M, N, Rational(1, N), Rational(1, f * (2 * M + 1) * N)));
  for (std::int64_t N = 1; N <= 2; ++N) out.push_back(make_config(2, 1, N, Rational(1, N), Rational(1, 3 * N)));
  out.push_back(make_config(3, 1, 1, Rational(1), Rational(1, 3)));
  return out;
}

inline std::string describe(const SamplingConfig& cfg) {
  std::string s = "d=" + std::to_string(cfg.d) + " M=" + std::to_string(cfg.M) + " N=" + to_string(cfg.N) +
                  " Delta=" + to_string(cfg.Delta) + " delta=" + to_string(cfg.delta);
  if (cfg.T) s += " T=" + to_string(*cfg.T);
  return s;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// e^{2 pi i t} in long double without mod-1 reduction shortcuts from the library.
inline Complex phase_ld(const Rational& t) {
  const long double num = static_cast<long double>(t.numerator() % t.denominator());
  const long double a = 2.0L * std::numbers::pi_v<long double> * num / static_cast<long double>(t.denominator());
  return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

inline Rational dot_ref(const RatVec& a, const RatVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double to_double_dot(const RatVec& a, const RatVec& b) {
  const Rational t = dot_ref(a, b);
  return static_cast<double>(t.numerator()) / static_cast<double>(t.denominator());
}

// Direct sum over the spectrum.
inline Complex eval_ref(const Spectrum& coeffs, const RatVec& x) {
  std::complex<long double> acc = 0;
  for (const auto& [nu, a] : coeffs) {
    const Complex p = phase_ld(dot_ref(nu, x));
    acc += std::complex<long double>(a.real(), a.imag()) * std::complex<long double>(p.real(), p.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

// Folded spectrum by aliasing: F_k(xi) collects every nu with nu - xi in
// (1/Delta)Z^d, weighted by e^{2 pi i <(nu - xi) Delta, k> delta}.
inline std::map<RatVec, Complex> folded_ref(const MultibandSignal& sig, const OffsetIndex& k) {
  const auto& cfg = sig.config();
  std::map<RatVec, Complex> out;
  for (const auto& xi : omega_delta_grid(cfg)) out[xi] = 0.0;
  const Rational width = 1 / cfg.Delta;
  for (const auto& [nu, a] : sig.coeffs()) {
    RatVec xi(cfg.d);
    Rational turns(0);
    for (int i = 0; i < cfg.d; ++i) {
      // representative of nu_i mod 1/Delta in [-1/(2 Delta), 1/(2 Delta))
      const Rational shifted = (nu[i] + width / 2) / width;
      std::int64_t q = shifted.numerator() / shifted.denominator();
      if (shifted.numerator() < 0 && shifted.numerator() % shifted.denominator() != 0) --q;
      xi[i] = nu[i] - q * width;
      turns += (nu[i] - xi[i]) * cfg.Delta * k[i] * cfg.delta;
    }
    out.at(xi) += a * phase_ld(turns);
  }
  return out;
}

// Inverse of V[j][c] = w_c^j through Lagrange basis polynomials: row c holds
// the coefficients of prod_{c' != c} (z - w_c') / (w_c - w_c').
inline Eigen::MatrixXcd lagrange_inverse(const std::vector<Complex>& w) {
  const auto n = static_cast<Eigen::Index>(w.size());
  Eigen::MatrixXcd inv(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    std::vector<Complex> poly{1.0};
    Complex denom = 1.0;
    for (Eigen::Index o = 0; o < n; ++o) {
      if (o == c) continue;
      std::vector<Complex> next(poly.size() + 1, 0.0);
      for (std::size_t p = 0; p < poly.size(); ++p) {
        next[p + 1] += poly[p];
        next[p] -= poly[p] * w[o];
      }
      poly = std::move(next);
      denom *= w[c] - w[o];
    }
    for (Eigen::Index j = 0; j < n; ++j) inv(c, j) = poly[j] / denom;
  }
  return inv;
}

inline double inf_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

// Band by scanning every m in [-M, M].
inline std::optional<std::int64_t> band_scan(const SamplingConfig& cfg, const Rational& nu) {
  std::optional<std::int64_t> hit;
  for (std::int64_t m = -cfg.M; m <= cfg.M; ++m) {
    const Rational c = m * cfg.N;
    if (nu >= c - Rational(1, 2) && nu < c + Rational(1, 2)) {
      if (hit) return std::nullopt;  // never expected
      hit = m;
    }
  }
  return hit;
}

// Every integer n with xi + n/Delta inside the unit window around mN.
inline std::vector<std::int64_t> shift_scan(const SamplingConfig& cfg, std::int64_t m, const Rational& xi) {
  std::vector<std::int64_t> out;
  const std::int64_t reach = (cfg.M * cfg.N.numerator() + 2) * (cfg.Delta.denominator() + 1);
  for (std::int64_t n = -reach; n <= reach; ++n) {
    const Rational v = xi + n / cfg.Delta;
    if (v >= m * cfg.N - Rational(1, 2) && v < m * cfg.N + Rational(1, 2)) out.push_back(n);
  }
  return out;
}

inline double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace mbpns::testing

#endif  // MBPNS_TESTS_SUPPORT_HPP_
