#ifndef MBPNS_GEOMETRY_HPP_
#define MBPNS_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mbpns/rational.hpp"

namespace mbpns {

// Band index m in [-M, M]^d.
using BandIndex = IntVec;
// Offset index k in {0, ..., 2M}^d.
using OffsetIndex = IntVec;

// Parameters of the multiband space and of the periodic nonuniform sampling
// lattice X = {(j + k delta) Delta}.
//
// The spectrum is the union of the unit cells [-1/2, 1/2)^d + mN. When T is
// set the signal is modelled as T-periodic, its spectrum lives on (1/T)Z^d and
// one period of the lattice is enumerated exactly.
struct SamplingConfig {
  int d = 1;
  int M = 0;
  Rational N{1};
  Rational Delta{1};
  Rational delta{1};
  std::optional<Rational> T;
  std::optional<std::uint64_t> seed;

  int offsets_per_axis() const { return 2 * M + 1; }
  // N == 1 and delta == 1/(2M+1): the nodes are roots of unity.
  bool tight() const { return N == Rational(1) && delta == Rational(1, 2 * M + 1); }

  friend bool operator==(const SamplingConfig&, const SamplingConfig&) = default;
};

// Returns `cfg` when every hypothesis holds; throws RangeViolation naming the
// failing field or PeriodMisaligned when T/Delta is not a positive integer.
SamplingConfig validate_config(const SamplingConfig& cfg);

// T/Delta, the number of base lattice points per axis in one period.
std::int64_t samples_per_axis(const SamplingConfig& cfg);

// Band of a single frequency component, or nullopt when it falls in a gap or
// outside [-M, M].
std::optional<std::int64_t> axis_band(const SamplingConfig& cfg, const Rational& nu);

// The band m with nu in [-1/2, 1/2)^d + mN, if any.
std::optional<BandIndex> spectrum_contains(const SamplingConfig& cfg, const RatVec& nu);

struct AxisShift {
  Rational z;        // multiple of 1/Delta
  std::int64_t L;    // z * Delta
  Rational alpha;    // m N - z
};

// Per-axis folding of band m onto the base cell around xi. Components with no
// admissible multiple of 1/Delta are absent; this happens only for Delta < 1.
struct BandShift {
  std::vector<std::optional<AxisShift>> axes;

  bool present() const;
  RatVec z() const;
  IntVec L() const;
  RatVec alpha() const;
};

bool in_omega_delta(const SamplingConfig& cfg, const Rational& xi);

std::optional<AxisShift> axis_band_shift(const SamplingConfig& cfg, std::int64_t m,
                                         const Rational& xi);

// Throws RangeViolation("xi", ...) when xi is outside [-1/(2 Delta), 1/(2 Delta))^d.
BandShift band_shift(const SamplingConfig& cfg, const BandIndex& m, const RatVec& xi);

struct SamplePoint {
  IntVec j;
  OffsetIndex k;
  RatVec y;
};

// All points of X in [0, T)^d, lexicographic in (j, k).
std::vector<SamplePoint> sample_points(const SamplingConfig& cfg);

// Grid (1/T)Z intersected with [-1/(2 Delta), 1/(2 Delta)); exactly T/Delta points.
std::vector<Rational> omega_delta_axis_grid(const SamplingConfig& cfg);
std::vector<RatVec> omega_delta_grid(const SamplingConfig& cfg);

// Grid (1/T)Z intersected with the one-dimensional multiband spectrum.
std::vector<Rational> spectrum_axis_grid(const SamplingConfig& cfg);

// All integer vectors in [lo, hi]^d, lexicographic (last component fastest).
std::vector<IntVec> index_box(int d, std::int64_t lo, std::int64_t hi);

// Cartesian product of per-axis value lists, same ordering as index_box.
std::vector<RatVec> cartesian(const std::vector<std::vector<Rational>>& axes);

}  // namespace mbpns

#endif  // MBPNS_GEOMETRY_HPP_
