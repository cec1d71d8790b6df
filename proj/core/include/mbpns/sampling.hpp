#ifndef MBPNS_SAMPLING_HPP_
#define MBPNS_SAMPLING_HPP_

#include <compare>
#include <map>
#include <vector>

#include "mbpns/geometry.hpp"
#include "mbpns/signal.hpp"

namespace mbpns {

struct SampleKey {
  IntVec j;
  OffsetIndex k;
  auto operator<=>(const SampleKey&) const = default;
};

// Samples f((j + k delta) Delta) over one period, j in {0..T/Delta-1}^d and
// k in {0..2M}^d. Iteration order is lexicographic in (j, k).
class SampleGrid {
 public:
  // Throws GridMismatch unless `values` covers exactly the index ranges of cfg.
  SampleGrid(SamplingConfig cfg, std::map<SampleKey, Complex> values);

  const SamplingConfig& config() const { return cfg_; }
  const std::map<SampleKey, Complex>& values() const { return values_; }

 private:
  SamplingConfig cfg_;
  std::map<SampleKey, Complex> values_;
};

// xi -> F_k(xi) on the grid of Omega_Delta.
using FoldedSlice = std::map<RatVec, Complex>;

struct FoldedSpectrum {
  SamplingConfig cfg;
  std::map<OffsetIndex, FoldedSlice> slices;
};

SampleGrid take_samples(const MultibandSignal& sig);

// Fourier coefficients of the k-th uniform subsequence, restricted to Omega_Delta:
//   F_k(xi) = (Delta/T)^d sum_j f((j + k delta) Delta) e^{-2 pi i <xi, (j + k delta) Delta>}
// A unit tone at nu = 0 gives F_k(0) = 1.
FoldedSlice analyze(const SampleGrid& grid, const OffsetIndex& k);
FoldedSpectrum analyze_all(const SampleGrid& grid);

// The same slice computed from the spectrum by folding each band onto the base
// cell:  F_k(xi) = sum_m C_m(xi) e^{2 pi i <L_m(xi), k> delta}. Absent shifts
// contribute nothing.
FoldedSlice forward_model(const MultibandSignal& sig, const OffsetIndex& k);
FoldedSpectrum forward_model_all(const MultibandSignal& sig);

// Delta^d sum_{(j,k)} |f(y)|^2.
double sampling_energy(const SampleGrid& grid);
// Delta^d sum_j |f((j + k delta) Delta)|^2 for one offset.
double offset_energy(const SampleGrid& grid, const OffsetIndex& k);

// Band-limited interpolant S_{X_k} f evaluated at arbitrary points.
std::vector<Complex> synthesize(const SamplingConfig& cfg, const FoldedSlice& slice,
                                const std::vector<RatVec>& xs);
// Per-period energy T^d sum_xi |F_k(xi)|^2 of the interpolant.
double slice_norm_squared(const SamplingConfig& cfg, const FoldedSlice& slice);

}  // namespace mbpns

#endif  // MBPNS_SAMPLING_HPP_
