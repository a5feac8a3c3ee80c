#include "hbgrowth/tightening.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace hbg {

WeightSystem standard_weights(const NonNegMatrix& m, double tol, int max_iter) {
  const PFResult pf = pf_eigen(m, tol, max_iter);  // throws on reducible input
  WeightSystem w;
  w.weights = pf.vector;
  w.standard = true;
  w.lambda = pf.lambda;
  return w;
}

double move_gain(const TighteningMove& move, const WeightSystem& w) {
  if (move.delta.size() != w.weights.size()) throw Error("move_gain: dimension mismatch");
  double gain = 0.0;
  for (size_t j = 0; j < move.delta.size(); ++j) {
    gain += static_cast<double>(move.delta[j]) * w.weights[j];
  }
  return gain;
}

NonNegMatrix apply_move(const NonNegMatrix& m, const TighteningMove& move) {
  if (move.row < 0 || move.row >= m.dim) throw Error("apply_move: row out of range");
  if (static_cast<int>(move.delta.size()) != m.dim) throw Error("apply_move: delta length mismatch");
  NonNegMatrix out = m;
  for (int j = 0; j < m.dim; ++j) {
    out.at(move.row, j) += move.delta[j];
    if (out.at(move.row, j) < 0) {
      throw Error("apply_move: move not realizable (entry would become negative)");
    }
  }
  return out;
}

MoveOutcome evaluate_move(const NonNegMatrix& m, const TighteningMove& move, double tol,
                          int max_iter) {
  const WeightSystem weights = standard_weights(m, tol, max_iter);
  const double gain = move_gain(move, weights);
  if (gain >= -kGainDeadZone) {
    throw Error("evaluate_move: not a tightening candidate (gain is not negative)");
  }
  MoveOutcome out;
  out.move = move;
  out.matrix_after = apply_move(m, move);
  out.gain = gain;
  out.growth_before = weights.lambda;
  const SCCReport scc = scc_decomposition(out.matrix_after);
  if (scc.irreducible()) {
    out.branch = MoveBranch::irreducible;
    out.growth_after = pf_eigen(out.matrix_after, tol, max_iter).lambda;
    return out;
  }
  out.branch = MoveBranch::restricted;
  double best = -1.0;
  for (const auto& comp : scc.components) {
    const int n = static_cast<int>(comp.size());
    NonNegMatrix block;
    block.dim = n;
    block.entries.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) block.at(i, j) = out.matrix_after.at(comp[i], comp[j]);
    }
    const double lambda = pf_eigen(block, tol, max_iter).lambda;
    if (lambda > best + kGainDeadZone) {
      best = lambda;
      out.subsystem = comp;
      out.subsystem_matrix = block;
    }
  }
  out.growth_after = best;
  return out;
}

std::vector<MoveOutcome> search_moves(const NonNegMatrix& m, const MoveCatalog& catalog,
                                      double tol, int max_iter) {
  const WeightSystem weights = standard_weights(m, tol, max_iter);
  const int step = catalog.kind == MoveCatalog::swap_even ? 2 : 1;
  struct Ranked {
    MoveOutcome outcome;
    int p, q, c;
  };
  std::vector<Ranked> found;
  for (int row = 0; row < m.dim; ++row) {
    for (int p = 0; p < m.dim; ++p) {
      for (int q = 0; q < m.dim; ++q) {
        if (p == q) continue;
        for (int c = 1; step * c <= m.at(row, p); ++c) {
          TighteningMove move;
          move.row = row;
          move.delta.assign(m.dim, 0);
          move.delta[p] = -step * c;
          move.delta[q] = +step * c;
          if (move_gain(move, weights) >= -kGainDeadZone) continue;
          found.push_back({evaluate_move(m, move, tol, max_iter), p, q, c});
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Ranked& a, const Ranked& b) {
    return std::tuple(a.outcome.growth_after, a.outcome.gain, a.outcome.move.row, a.p, a.q, a.c) <
           std::tuple(b.outcome.growth_after, b.outcome.gain, b.outcome.move.row, b.p, b.q, b.c);
  });
  std::vector<MoveOutcome> out;
  out.reserve(found.size());
  for (auto& r : found) out.push_back(std::move(r.outcome));
  return out;
}

PowerGrowth growth_of_power(const NonNegMatrix& m, int n, double tol, int max_iter) {
  if (n < 1) throw Error("growth_of_power: exponent must be positive");
  if (!is_irreducible(m)) throw Error("growth_of_power: matrix must be irreducible");
  PowerGrowth out;
  // Powers of an irreducible matrix can be reducible (periodic case), so
  // the block-maximum spectral radius is used on the exact power.
  out.lambda_of_power = spectral_radius_big(exact_power(m, n), tol, max_iter);
  out.power_of_lambda = std::pow(pf_eigen(m, tol, max_iter).lambda, n);
  const double denom = std::max(out.power_of_lambda, 1e-300);
  out.relative_difference = std::abs(out.lambda_of_power - out.power_of_lambda) / denom;
  return out;
}

}  // namespace hbg
