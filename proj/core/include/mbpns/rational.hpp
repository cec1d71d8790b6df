#ifndef MBPNS_RATIONAL_HPP_
#define MBPNS_RATIONAL_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace mbpns {

using Rational = boost::rational<std::int64_t>;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;
using Complex = std::complex<double>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Largest integer <= r.
inline std::int64_t floor(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();  // always > 0 after normalisation
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// Smallest integer >= r.
inline std::int64_t ceil(const Rational& r) { return -floor(-r); }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

// r mod 1, in [0, 1).
inline Rational frac(const Rational& r) { return r - floor(r); }

// e^{2 pi i t} for an exact number of turns t; t is reduced mod 1 before the
// floating point evaluation.
inline Complex unit_phase(const Rational& turns) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double angle = kTwoPi * to_double(frac(turns));
  return {std::cos(angle), std::sin(angle)};
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s{0};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

}  // namespace mbpns

#endif  // MBPNS_RATIONAL_HPP_
