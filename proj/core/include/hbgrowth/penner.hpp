#ifndef HBGROWTH_PENNER_HPP_
#define HBGROWTH_PENNER_HPP_

#include <string>
#include <vector>

#include "hbgrowth/error.hpp"
#include "hbgrowth/matrix.hpp"
#include "hbgrowth/spectral.hpp"

namespace hbg {

struct SurfaceDecl {
  int genus = 0;
  int boundary_components = 0;

  int euler_characteristic() const { return 2 - 2 * genus - boundary_components; }
  bool operator==(const SurfaceDecl&) const = default;
};

// Two curve systems with their geometric intersection matrix. Curves are
// indexed C first, then D; the matrix is symmetric with zero diagonal.
// Filling and no-parallel-components cannot be decided from this data and
// enter as caller-supplied certificates.
struct PennerPair {
  SurfaceDecl surface;
  std::vector<std::string> curves_c;
  std::vector<std::string> curves_d;
  std::vector<long long> inter;  // (|C|+|D|)^2, row-major
  bool cert_no_parallel = false;
  bool cert_fills = false;

  int num_curves() const { return static_cast<int>(curves_c.size() + curves_d.size()); }
  bool in_c(int index) const { return index < static_cast<int>(curves_c.size()); }
  const std::string& curve_name(int index) const;
  int curve_index(const std::string& name) const;  // -1 when absent
  long long intersection(int i, int j) const {
    return inter[static_cast<size_t>(i) * num_curves() + j];
  }
  long long& intersection_ref(int i, int j) {
    return inter[static_cast<size_t>(i) * num_curves() + j];
  }

  bool operator==(const PennerPair&) const = default;
};

// Machine-checkable necessary conditions: chi(S) < 0, symmetry, zero
// within-family intersections, every curve meeting the opposite family,
// connected bipartite intersection graph. Filling itself stays an
// asserted certificate and is reported, not decided.
ValidityReport validate_pair(const PennerPair& p);

struct TwistLetter {
  std::string curve;
  int sign = +1;  // +1 right, -1 left

  bool operator==(const TwistLetter&) const = default;
};

using TwistWord = std::vector<TwistLetter>;

// Unsigned twist matrix over C then D: identity except the twisted row,
// which gains the intersection numbers with every other curve.
NonNegMatrix twist_matrix(const PennerPair& p, int curve_index);
NonNegMatrix twist_matrix(const PennerPair& p, const std::string& curve);

struct PennerProduct {
  NonNegMatrix matrix;       // product of twist matrices in application order
  PFResult growth;           // lambda_boundary and its eigenvector
};

// Product of the word's twist matrices (first letter applied first) and
// its PF eigenvalue, the boundary dilatation. Enforces the coverage
// hypothesis (each curve twisted at least once), the per-family sign
// convention, and the pair's necessary validity checks.
PennerProduct penner_product(const PennerPair& p, const TwistWord& word,
                             double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

// Essential arc meeting the union of the two systems exactly once, on
// curve `gamma`. The meeting count is a caller assertion, recorded here.
struct DualArc {
  std::string gamma;
  int meets = 1;
};

enum class CurveProvenance { level0, level1, boundary_disc };

std::string to_string(CurveProvenance p);

// The induced pair on the boundary of S x I: two copies of every curve
// plus the boundary of the band-sum disc. `pair` is ready for
// validate_pair / twisting; provenance records where each curve of Q and
// R came from. Level copies are named "<base>.0" and "<base>.1".
struct BoundaryPairData {
  PennerPair pair;  // curves_c = Q, curves_d = R
  std::vector<CurveProvenance> q_provenance;
  std::vector<CurveProvenance> r_provenance;
  std::string disc_name;
  bool swapped_roles = false;  // gamma was in D, roles of C and D exchanged
};

BoundaryPairData build_boundary_pair(const PennerPair& p, const DualArc& arc);

struct GrowthComparison {
  double lambda = 0.0;
  double lambda_boundary = 0.0;
  bool consistent = false;
  std::string message;
};

// Reports whether lambda <= lambda_boundary (non-strict). The inequality
// is a tightness-conditional consistency flag; the comparison never
// throws on its own account.
GrowthComparison compare_growth(double lambda, const PennerPair& p, const TwistWord& word,
                                double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

}  // namespace hbg

#endif  // HBGROWTH_PENNER_HPP_
