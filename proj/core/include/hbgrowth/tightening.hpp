#ifndef HBGROWTH_TIGHTENING_HPP_
#define HBGROWTH_TIGHTENING_HPP_

#include <vector>

#include "hbgrowth/matrix.hpp"
#include "hbgrowth/spectral.hpp"

namespace hbg {

// Gains within this band of zero are treated as zero and rejected as
// tightening candidates.
inline constexpr double kGainDeadZone = 1e-9;

// Positive weights on the 1-handles. `standard` marks the PF eigenvector
// of a bound matrix (max-norm 1), in which case `lambda` carries the
// eigenvalue.
struct WeightSystem {
  std::vector<double> weights;
  bool standard = false;
  double lambda = 0.0;
};

// PF eigenvector of an irreducible matrix, flagged standard.
WeightSystem standard_weights(const NonNegMatrix& m, double tol = kDefaultTol,
                              int max_iter = kDefaultMaxIter);

// Integer row modification: row `row` (0-based) changes by +delta.
struct TighteningMove {
  int row = 0;
  std::vector<long long> delta;
};

// Sum of delta_j * w_j. Negative gain is what makes a move a tightening
// candidate.
double move_gain(const TighteningMove& move, const WeightSystem& w);

// Apply the row modification; throws when an entry would go negative.
NonNegMatrix apply_move(const NonNegMatrix& m, const TighteningMove& move);

enum class MoveBranch { irreducible, restricted };

struct MoveOutcome {
  TighteningMove move;
  NonNegMatrix matrix_after;
  double gain = 0.0;
  MoveBranch branch = MoveBranch::irreducible;
  double growth_before = 0.0;
  double growth_after = 0.0;
  // Restricted branch only: the SCC block of maximal eigenvalue (first in
  // topological order on ties) and its indices into the full matrix.
  std::vector<int> subsystem;
  NonNegMatrix subsystem_matrix;
};

// Evaluate a negative-gain move on an irreducible matrix. When the new
// matrix stays irreducible the outcome carries its eigenvalue; otherwise
// the analysis passes to the dominant irreducible diagonal block of the
// SCC condensation. Both branches strictly reduce the growth rate.
MoveOutcome evaluate_move(const NonNegMatrix& m, const TighteningMove& move,
                          double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

// Candidate generator for search_moves. `swap_even` enumerates the moves
// that trade intersections pairwise, two at a time: d_p = -2c, d_q = +2c
// over rows, ordered column pairs and 1 <= c <= m_ip / 2. `swap_free`
// admits odd trades as well (step c over 1 <= c <= m_ip).
struct MoveCatalog {
  enum Kind { swap_even, swap_free };
  Kind kind = swap_even;
};

// Enumerate the catalog, keep valid negative-gain moves, and rank by
// resulting growth ascending with the deterministic tie-break
// (gain, row, column pair, step).
std::vector<MoveOutcome> search_moves(const NonNegMatrix& m, const MoveCatalog& catalog = {},
                                      double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

struct PowerGrowth {
  double lambda_of_power = 0.0;  // lambda(M^n), exact integer power
  double power_of_lambda = 0.0;  // lambda(M)^n
  double relative_difference = 0.0;
};

PowerGrowth growth_of_power(const NonNegMatrix& m, int n, double tol = kDefaultTol,
                            int max_iter = kDefaultMaxIter);

}  // namespace hbg

#endif  // HBGROWTH_TIGHTENING_HPP_
