#ifndef HBGROWTH_SPECTRAL_HPP_
#define HBGROWTH_SPECTRAL_HPP_

#include <string>
#include <vector>

#include "hbgrowth/matrix.hpp"

namespace hbg {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kDefaultMaxIter = 100000;
inline constexpr double kSubinvarianceSlack = 1e-9;

// Perron-Frobenius eigenpair of an irreducible nonnegative matrix.
// The eigenvector is strictly positive and normalized to max-norm 1.
struct PFResult {
  double lambda = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // max-norm of M*v - lambda*v at return
  int iterations = 0;
};

// Strongly connected components of the positivity digraph (arc i->j when
// m_ij > 0), listed in a topological order of the condensation: every arc
// runs from an earlier component to a later one.
struct SCCReport {
  std::vector<std::vector<int>> components;

  bool irreducible() const { return components.size() == 1; }
};

// True iff the positivity digraph is strongly connected; equivalently
// (I+M)^(dim-1) has no zero entry.
bool is_irreducible(const NonNegMatrix& m);

SCCReport scc_decomposition(const NonNegMatrix& m);

// Power iteration on M+I (primitive whenever M is irreducible) with the
// all-ones start vector; converges iff m is irreducible. Throws on a
// reducible input and on hitting the iteration cap.
PFResult pf_eigen(const NonNegMatrix& m, double tol = kDefaultTol,
                  int max_iter = kDefaultMaxIter);

// Spectral radius of an arbitrary nonnegative matrix: the maximum PF
// eigenvalue over the irreducible diagonal blocks of the SCC condensation.
double spectral_radius_reducible(const NonNegMatrix& m, double tol = kDefaultTol,
                                 int max_iter = kDefaultMaxIter);

// Same, for an exact integer power held as a BigMatrix.
double spectral_radius_big(const BigMatrix& m, double tol = kDefaultTol,
                           int max_iter = kDefaultMaxIter);

enum class Subinvariance { le, lt, inconclusive };

std::string to_string(Subinvariance v);

// Verdict on lambda(M) vs lambda from a subinvariant vector:
//   (Mv)_i <= lambda*v_i for all i        -> le   (lambda(M) <= lambda)
//   ... and strict for some i             -> lt   (lambda(M) <  lambda)
//   some row violates the inequality      -> inconclusive
// Comparisons use an absolute slack since v usually comes from a prior
// eigen computation.
Subinvariance subinvariance_test(const NonNegMatrix& m, const std::vector<double>& v,
                                 double lambda, double slack = kSubinvarianceSlack);

namespace detail {

// Shared double-precision core. `entries` is row-major dim*dim, assumed
// nonnegative with a strongly connected positivity digraph.
PFResult pf_irreducible_double(const std::vector<double>& entries, int dim, double tol,
                               int max_iter);

SCCReport scc_of_pattern(const std::vector<bool>& positive, int dim);

double spectral_radius_double(const std::vector<double>& entries, int dim, double tol,
                              int max_iter);

}  // namespace detail

}  // namespace hbg

#endif  // HBGROWTH_SPECTRAL_HPP_
