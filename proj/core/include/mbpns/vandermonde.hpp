#ifndef MBPNS_VANDERMONDE_HPP_
#define MBPNS_VANDERMONDE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mbpns/geometry.hpp"
#include "mbpns/rational.hpp"

namespace mbpns {

// Unit-circle nodes w_c = e^{i theta_c}. Nodes built from sampling geometry
// keep their angles as exact turns (theta / 2 pi, reduced mod 1) so that
// coincidence is decided without a tolerance.
class NodeSet {
 public:
  // Throws DegenerateNodes if two reduced turns are equal.
  static NodeSet from_turns(std::vector<Rational> turns, std::vector<std::int64_t> bands = {});
  // Matrix-analysis mode for arbitrary (possibly irrational) angles in radians.
  static NodeSet from_angles(std::vector<double> angles);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Complex>& nodes() const { return nodes_; }
  // Band index m of each node; -M..M for geometry-built sets.
  const std::vector<std::int64_t>& bands() const { return bands_; }
  const std::optional<std::vector<Rational>>& turns() const { return turns_; }

  // |w_a - w_b| = 2 |sin((theta_a - theta_b) / 2)|.
  double chord(std::size_t a, std::size_t b) const;

 private:
  std::vector<Complex> nodes_;
  std::vector<double> angles_;
  std::vector<std::int64_t> bands_;
  std::optional<std::vector<Rational>> turns_;
};

// Nodes e^{2 pi i L_m(xi) delta} of the folding system along one axis at the
// frequency component xi. Bands whose shift is absent at xi are skipped, so
// the set can have fewer than 2M+1 nodes when Delta > 1/N.
NodeSet nodes_from_geometry(const SamplingConfig& cfg, int axis, const Rational& xi);

// V[j][c] = w_c^j, j = 0..n-1, with an LU factorisation and the explicit
// inverse cached at construction.
class VandermondeSystem {
 public:
  explicit VandermondeSystem(NodeSet nodes);

  const NodeSet& nodeset() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  const Eigen::MatrixXcd& inverse() const { return inverse_; }

  std::vector<Complex> solve(std::span<const Complex> rhs) const;

  double inf_norm_inverse() const { return inf_norm_inverse_; }
  double two_norm() const { return two_norm_; }
  double two_norm_inverse() const { return two_norm_inverse_; }

 private:
  NodeSet nodes_;
  Eigen::MatrixXcd matrix_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  Eigen::MatrixXcd inverse_;
  double inf_norm_inverse_ = 0.0;
  double two_norm_ = 0.0;
  double two_norm_inverse_ = 0.0;
};

// max_c sum_j |V^{-1}[c][j]|
double inverse_inf_norm(const VandermondeSystem& sys);

// ||V x - rhs||_inf / ||rhs||_inf (absolute when rhs = 0).
double relative_residual(const VandermondeSystem& sys, std::span<const Complex> x,
                         std::span<const Complex> rhs);

struct Bracket {
  double lower;
  double upper;
};

// Gautschi: max_c prod_{c' != c} 1/|w_c' - w_c|  <  ||V^{-1}||_inf  <=
//           max_c prod_{c' != c} 2/|w_c' - w_c|.
// A single node gives (1, 1).
Bracket gautschi_bounds(const NodeSet& nodes);

// (1/(2M+1), prod_{m=1}^{2M} 1/sin(m pi delta)).
Bracket vest_bounds(const SamplingConfig& cfg);

// One row of the `bounds` report, for the system at xi = 0.
struct BoundsRow {
  int M;
  Rational N;
  Rational delta;
  double inv_inf_norm;
  Bracket gautschi;
  Bracket vest;
  double two_norm_sq;
};

BoundsRow bounds_row(const SamplingConfig& cfg);

// M in 1..max_M, N in 1..max_N, Delta = 1/N, delta = t/(steps (2M+1) N) for
// t = 1..steps.
std::vector<BoundsRow> bounds_sweep(int max_M, int max_N, int steps);

}  // namespace mbpns

#endif  // MBPNS_VANDERMONDE_HPP_
