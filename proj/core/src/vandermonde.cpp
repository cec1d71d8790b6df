#include "mbpns/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mbpns/error.hpp"

namespace mbpns {

NodeSet NodeSet::from_turns(std::vector<Rational> turns, std::vector<std::int64_t> bands) {
  for (auto& t : turns) t = frac(t);
  auto sorted = turns;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DegenerateNodes("two node angles coincide mod 2 pi");
  if (bands.empty()) {
    for (std::size_t i = 0; i < turns.size(); ++i) bands.push_back(static_cast<std::int64_t>(i));
  } else if (bands.size() != turns.size()) {
    throw std::invalid_argument("NodeSet: bands and turns differ in length");
  }
  NodeSet ns;
  for (const auto& t : turns) {
    ns.nodes_.push_back(unit_phase(t));
    ns.angles_.push_back(2.0 * std::numbers::pi * to_double(t));
  }
  ns.bands_ = std::move(bands);
  ns.turns_ = std::move(turns);
  return ns;
}

NodeSet NodeSet::from_angles(std::vector<double> angles) {
  NodeSet ns;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (std::sin(0.5 * (angles[i] - angles[j])) == 0.0)
        throw DegenerateNodes("two node angles coincide mod 2 pi");
    ns.nodes_.push_back(std::polar(1.0, angles[i]));
    ns.bands_.push_back(static_cast<std::int64_t>(i));
  }
  ns.angles_ = std::move(angles);
  return ns;
}

double NodeSet::chord(std::size_t a, std::size_t b) const {
  if (turns_) return 2.0 * std::abs(std::sin(std::numbers::pi * to_double(frac((*turns_)[a] - (*turns_)[b]))));
  return 2.0 * std::abs(std::sin(0.5 * (angles_[a] - angles_[b])));
}

NodeSet nodes_from_geometry(const SamplingConfig& cfg, int axis, const Rational& xi) {
  if (axis < 0 || axis >= cfg.d) throw RangeViolation("axis", "0 <= axis < d");
  if (!in_omega_delta(cfg, xi)) throw RangeViolation("xi", to_string(xi) + " outside Omega_Delta");
  std::vector<Rational> turns;
  std::vector<std::int64_t> bands;
  for (std::int64_t m = -cfg.M; m <= cfg.M; ++m) {
    const auto shift = axis_band_shift(cfg, m, xi);
    if (!shift) continue;
    turns.push_back(shift->L * cfg.delta);
    bands.push_back(m);
  }
  return NodeSet::from_turns(std::move(turns), std::move(bands));
}

VandermondeSystem::VandermondeSystem(NodeSet nodes) : nodes_(std::move(nodes)) {
  const auto n = static_cast<Eigen::Index>(nodes_.size());
  matrix_.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Complex p{1.0, 0.0};
    for (Eigen::Index j = 0; j < n; ++j) {
      matrix_(j, c) = p;
      p *= nodes_.nodes()[c];
    }
  }
  if (n == 0) return;
  lu_.compute(matrix_);
  inverse_ = lu_.inverse();
  inf_norm_inverse_ = inverse_.cwiseAbs().rowwise().sum().maxCoeff();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix_);
  const auto& s = svd.singularValues();
  two_norm_ = s(0);
  two_norm_inverse_ = 1.0 / s(n - 1);
}

std::vector<Complex> VandermondeSystem::solve(std::span<const Complex> rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("VandermondeSystem::solve: rhs length");
  Eigen::Map<const Eigen::VectorXcd> b(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  const Eigen::VectorXcd x = lu_.solve(b);
  return {x.data(), x.data() + x.size()};
}

double inverse_inf_norm(const VandermondeSystem& sys) { return sys.inf_norm_inverse(); }

double relative_residual(const VandermondeSystem& sys, std::span<const Complex> x,
                         std::span<const Complex> rhs) {
  const auto n = static_cast<Eigen::Index>(rhs.size());
  Eigen::Map<const Eigen::VectorXcd> xv(x.data(), n);
  Eigen::Map<const Eigen::VectorXcd> bv(rhs.data(), n);
  const double err = (sys.matrix() * xv - bv).cwiseAbs().maxCoeff();
  const double scale = bv.cwiseAbs().maxCoeff();
  return scale > 0.0 ? err / scale : err;
}

Bracket gautschi_bounds(const NodeSet& nodes) {
  Bracket out{0.0, 0.0};
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    double lo = 1.0;
    double hi = 1.0;
    for (std::size_t o = 0; o < nodes.size(); ++o) {
      if (o == c) continue;
      const double chord = nodes.chord(c, o);
      if (chord == 0.0) throw DegenerateNodes("zero chord between distinct nodes");
      lo /= chord;
      hi *= 2.0 / chord;
    }
    out.lower = std::max(out.lower, lo);
    out.upper = std::max(out.upper, hi);
  }
  return out;
}

Bracket vest_bounds(const SamplingConfig& cfg) {
  double upper = 1.0;
  for (int m = 1; m <= 2 * cfg.M; ++m) upper /= std::sin(std::numbers::pi * to_double(m * cfg.delta));
  return {1.0 / (2 * cfg.M + 1), upper};
}

BoundsRow bounds_row(const SamplingConfig& cfg) {
  const VandermondeSystem sys(nodes_from_geometry(cfg, 0, Rational(0)));
  return {cfg.M,
          cfg.N,
          cfg.delta,
          sys.inf_norm_inverse(),
          gautschi_bounds(sys.nodeset()),
          vest_bounds(cfg),
          sys.two_norm() * sys.two_norm()};
}

std::vector<BoundsRow> bounds_sweep(int max_M, int max_N, int steps) {
  std::vector<BoundsRow> rows;
  for (int M = 1; M <= max_M; ++M) {
    for (int N = 1; N <= max_N; ++N) {
      for (int t = 1; t <= steps; ++t) {
        SamplingConfig cfg;
        cfg.M = M;
        cfg.N = N;
        cfg.Delta = Rational(1, N);
        cfg.delta = Rational(t, steps * (2 * M + 1) * N);
        rows.push_back(bounds_row(validate_config(cfg)));
      }
    }
  }
  return rows;
}

}  // namespace mbpns
