#ifndef MBPNS_RECONSTRUCT_HPP_
#define MBPNS_RECONSTRUCT_HPP_

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mbpns/geometry.hpp"
#include "mbpns/sampling.hpp"
#include "mbpns/signal.hpp"

namespace mbpns {

// Per grid frequency xi, the band unknowns C_m(xi) = c^_m(xi - mN + z_m(xi))
// in index_box(d, -M, M) order. Bands with an absent shift hold exact zeros.
using UnknownTensor = std::map<RatVec, std::vector<Complex>>;

enum class Method { iterative, oracle };

std::string to_string(Method m);

struct ReconstructionReport {
  MultibandSignal recovered;
  UnknownTensor unknowns;
  // Against the reference signal when one is supplied; otherwise the relative
  // L2 mismatch between the input spectra and the forward model of `recovered`.
  double relative_l2_error = 0.0;
  // Worst relative solve residual of each peeling step (iterative) or of the
  // least-squares solves (oracle).
  std::vector<double> per_step_residuals;
  Method method = Method::iterative;
  // Frequencies whose active band set is not a full box; these are solved by
  // the oracle even on the iterative path.
  std::size_t fallback_frequencies = 0;
};

struct ReconstructOptions {
  // Axes in peeling order; empty means d-1, d-2, ..., 0.
  std::vector<int> axis_order;
  const MultibandSignal* reference = nullptr;
};

// Dimension-by-dimension reconstruction: for every xi the (2M+1)^d folded
// values are peeled one axis at a time with 1-D Vandermonde solves along
// fibres, then each unknown is written to the output frequency xi + z_m(xi).
// Throws GridMismatch if slices are missing or off-grid, DegenerateNodes if an
// axis system is singular.
ReconstructionReport reconstruct_iterative(const FoldedSpectrum& spectra,
                                           const ReconstructOptions& options = {});

// Brute force: per xi, least squares on the full Kronecker system restricted to
// the active bands. Throws SingularSystem on rank deficiency.
ReconstructionReport reconstruct_oracle(const FoldedSpectrum& spectra,
                                        const ReconstructOptions& options = {});

// sqrt(sum |a - a^|^2 / sum |a|^2); absolute when the original is zero.
double reconstruction_error(const MultibandSignal& original, const MultibandSignal& recovered);

// Rows: offsets k in index_box(d, 0, 2M); columns: bands m whose shift at xi is
// present, in index_box(d, -M, M) order. Entry e^{2 pi i <L_m(xi), k> delta}.
struct FullSystem {
  Eigen::MatrixXcd matrix;
  std::vector<BandIndex> active;
};

FullSystem full_system(const SamplingConfig& cfg, const RatVec& xi);

// factors[0] (x) factors[1] (x) ... with the first factor most significant.
Eigen::MatrixXcd kronecker(const std::vector<Eigen::MatrixXcd>& factors);

}  // namespace mbpns

#endif  // MBPNS_RECONSTRUCT_HPP_
