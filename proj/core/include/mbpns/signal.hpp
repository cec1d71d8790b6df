#ifndef MBPNS_SIGNAL_HPP_
#define MBPNS_SIGNAL_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "mbpns/geometry.hpp"
#include "mbpns/rational.hpp"

namespace mbpns {

using Spectrum = std::map<RatVec, Complex>;

// T-periodic trigonometric polynomial f(x) = sum_nu a_nu e^{2 pi i <nu, x>}
// with every frequency on (1/T)Z^d inside the multiband spectrum. Per-period
// energy stands in for the L2(R^d) norm.
class MultibandSignal {
 public:
  // Throws GridMismatch for keys off (1/T)Z^d or of the wrong dimension and
  // RangeViolation("nu", ...) for keys outside the spectrum.
  MultibandSignal(SamplingConfig cfg, Spectrum coeffs);

  const SamplingConfig& config() const { return cfg_; }
  const Spectrum& coeffs() const { return coeffs_; }

 private:
  SamplingConfig cfg_;
  Spectrum coeffs_;
};

// Band m restricted and re-centred to [-1/2, 1/2)^d (key nu - mN).
struct CoefficientBundle {
  std::map<BandIndex, Spectrum> bands;
};

// i.i.d. complex standard normal amplitudes (E|a|^2 = 1) at every grid
// frequency of the spectrum. Deterministic in (cfg, seed).
MultibandSignal random_signal(const SamplingConfig& cfg, std::uint64_t seed);

// Independent stream seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

Complex evaluate(const MultibandSignal& sig, const RatVec& x);

// Batched evaluation using per-axis phase tables; equal to calling evaluate
// on each point.
std::vector<Complex> evaluate_points(const MultibandSignal& sig, const std::vector<RatVec>& xs);

CoefficientBundle decompose(const MultibandSignal& sig);
MultibandSignal recompose(const SamplingConfig& cfg, const CoefficientBundle& bundle);

// Per-period energy T^d sum |a_nu|^2.
double norm_squared(const MultibandSignal& sig);
// Same normalisation applied to each re-centred band c_m.
std::map<BandIndex, double> band_norms_squared(const SamplingConfig& cfg,
                                               const CoefficientBundle& bundle);

MultibandSignal linear_combination(Complex alpha, const MultibandSignal& f, Complex beta,
                                   const MultibandSignal& g);

// T^d for the configured period.
double period_volume(const SamplingConfig& cfg);

}  // namespace mbpns

#endif  // MBPNS_SIGNAL_HPP_
