#ifndef MBPNS_SRC_SEPARABLE_HPP_
#define MBPNS_SRC_SEPARABLE_HPP_

#include <map>
#include <vector>

#include "mbpns/parallel.hpp"
#include "mbpns/rational.hpp"

namespace mbpns::detail {

// out[p] = sum_q values[q] * e^{sign * 2 pi i <keys[q], points[p]>}
//
// The exponential factorises over axes, so phases are tabulated per axis on
// the distinct coordinate values with exact reduction mod 1.
inline std::vector<Complex> separable_sum(const std::vector<RatVec>& keys,
                                          const std::vector<Complex>& values,
                                          const std::vector<RatVec>& points, int sign) {
  std::vector<Complex> out(points.size());
  if (keys.empty() || points.empty()) return out;
  const std::size_t d = keys.front().size();

  std::vector<std::vector<std::size_t>> key_idx(keys.size(), std::vector<std::size_t>(d));
  std::vector<std::vector<std::size_t>> pt_idx(points.size(), std::vector<std::size_t>(d));
  std::vector<std::vector<std::vector<Complex>>> table(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::map<Rational, std::size_t> kv, pv;
    for (std::size_t q = 0; q < keys.size(); ++q)
      key_idx[q][i] = kv.emplace(keys[q][i], kv.size()).first->second;
    for (std::size_t p = 0; p < points.size(); ++p)
      pt_idx[p][i] = pv.emplace(points[p][i], pv.size()).first->second;
    table[i].assign(kv.size(), std::vector<Complex>(pv.size()));
    for (const auto& [a, ai] : kv)
      for (const auto& [b, bi] : pv) table[i][ai][bi] = unit_phase(sign * a * b);
  }

  parallel_for(points.size(), [&](std::size_t p) {
    Complex acc{0.0, 0.0};
    for (std::size_t q = 0; q < keys.size(); ++q) {
      Complex term = values[q];
      for (std::size_t i = 0; i < d; ++i) term *= table[i][key_idx[q][i]][pt_idx[p][i]];
      acc += term;
    }
    out[p] = acc;
  });
  return out;
}

}  // namespace mbpns::detail

#endif  // MBPNS_SRC_SEPARABLE_HPP_
