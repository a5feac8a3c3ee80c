#include "hbgrowth/penner.hpp"

#include <algorithm>

namespace hbg {

const std::string& PennerPair::curve_name(int index) const {
  const int nc = static_cast<int>(curves_c.size());
  return index < nc ? curves_c[index] : curves_d[index - nc];
}

int PennerPair::curve_index(const std::string& name) const {
  for (int i = 0; i < num_curves(); ++i) {
    if (curve_name(i) == name) return i;
  }
  return -1;
}

ValidityReport validate_pair(const PennerPair& p) {
  ValidityReport report;
  const int n = p.num_curves();
  if (p.inter.size() != static_cast<size_t>(n) * n) {
    report.flag("intersection matrix size mismatch");
    return report;
  }
  if (p.surface.euler_characteristic() >= 0) {
    report.flag("surface must have negative Euler characteristic");
  }
  if (p.curves_c.empty() || p.curves_d.empty()) {
    report.flag("both curve systems must be nonempty");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.intersection(i, j) < 0) report.flag("negative intersection number");
      if (p.intersection(i, j) != p.intersection(j, i)) {
        report.flag("intersection matrix not symmetric");
      }
      if (p.in_c(i) == p.in_c(j) && p.intersection(i, j) != 0) {
        report.flag("within-family intersection between '" + p.curve_name(i) + "' and '" +
                    p.curve_name(j) + "' must be zero");
      }
    }
  }
  if (!report.ok()) return report;
  for (int i = 0; i < n; ++i) {
    bool meets_opposite = false;
    for (int j = 0; j < n; ++j) {
      if (p.in_c(i) != p.in_c(j) && p.intersection(i, j) > 0) meets_opposite = true;
    }
    if (!meets_opposite) {
      report.flag("curve '" + p.curve_name(i) +
                  "' has no intersection with the opposite family (cannot fill)");
    }
  }
  if (n > 0) {
    std::vector<bool> seen(n, false);
    std::vector<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!seen[w] && p.intersection(v, w) > 0) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      report.flag("intersection graph is disconnected (cannot fill a connected surface)");
    }
  }
  return report;
}

NonNegMatrix twist_matrix(const PennerPair& p, int curve_index) {
  const int n = p.num_curves();
  if (curve_index < 0 || curve_index >= n) throw Error("twist_matrix: unknown curve");
  NonNegMatrix t = NonNegMatrix::identity(n);
  for (int j = 0; j < n; ++j) t.at(curve_index, j) += p.intersection(curve_index, j);
  return t;
}

NonNegMatrix twist_matrix(const PennerPair& p, const std::string& curve) {
  const int index = p.curve_index(curve);
  if (index < 0) throw Error("twist_matrix: unknown curve '" + curve + "'");
  return twist_matrix(p, index);
}

PennerProduct penner_product(const PennerPair& p, const TwistWord& word, double tol,
                             int max_iter) {
  const ValidityReport validity = validate_pair(p);
  if (!validity.ok()) {
    throw Error("penner_product: pair fails necessary checks: " + validity.violations.front());
  }
  const int n = p.num_curves();
  std::vector<bool> covered(n, false);
  int sign_c = 0, sign_d = 0;
  for (const TwistLetter& letter : word) {
    const int index = p.curve_index(letter.curve);
    if (index < 0) throw Error("penner_product: unknown curve '" + letter.curve + "'");
    if (letter.sign != +1 && letter.sign != -1) throw Error("penner_product: sign must be +1 or -1");
    covered[index] = true;
    int& family_sign = p.in_c(index) ? sign_c : sign_d;
    if (family_sign == 0) {
      family_sign = letter.sign;
    } else if (family_sign != letter.sign) {
      throw Error("penner_product: twist signs must be uniform within a family");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!covered[i]) {
      throw Error("penner_product: Penner hypothesis violated, curve '" + p.curve_name(i) +
                  "' does not appear in the twist word");
    }
  }
  if (sign_c == sign_d) {
    throw Error("penner_product: the two families must twist in opposite directions");
  }
  PennerProduct out;
  out.matrix = NonNegMatrix::identity(n);
  for (const TwistLetter& letter : word) {
    out.matrix = multiply(twist_matrix(p, letter.curve), out.matrix);
  }
  if (!is_irreducible(out.matrix)) {
    throw Error("penner_product: twist product is reducible (intersection data inconsistent)");
  }
  out.growth = pf_eigen(out.matrix, tol, max_iter);
  return out;
}

std::string to_string(CurveProvenance p) {
  switch (p) {
    case CurveProvenance::level0:
      return "level-0 copy";
    case CurveProvenance::level1:
      return "level-1 copy";
    case CurveProvenance::boundary_disc:
      return "boundary of disc";
  }
  return "?";
}

namespace {

BoundaryPairData build_boundary_pair_gamma_in_c(const PennerPair& p, const DualArc& arc,
                                                bool swapped) {
  const int gamma = p.curve_index(arc.gamma);
  const int nc = static_cast<int>(p.curves_c.size());
  const int nd = static_cast<int>(p.curves_d.size());

  BoundaryPairData out;
  out.swapped_roles = swapped;
  out.disc_name = "dDelta";

  // Q = D0 u C1 u {boundary disc};  R = C0 u D1.
  PennerPair& q = out.pair;
  // The construction lives on the boundary of S x I, a closed surface of
  // doubled genus.
  q.surface = {2 * p.surface.genus, 0};
  q.cert_no_parallel = p.cert_no_parallel;
  q.cert_fills = p.cert_fills;
  for (int d = 0; d < nd; ++d) {
    q.curves_c.push_back(p.curves_d[d] + ".0");
    out.q_provenance.push_back(CurveProvenance::level0);
  }
  for (int c = 0; c < nc; ++c) {
    q.curves_c.push_back(p.curves_c[c] + ".1");
    out.q_provenance.push_back(CurveProvenance::level1);
  }
  q.curves_c.push_back(out.disc_name);
  out.q_provenance.push_back(CurveProvenance::boundary_disc);
  for (int c = 0; c < nc; ++c) {
    q.curves_d.push_back(p.curves_c[c] + ".0");
    out.r_provenance.push_back(CurveProvenance::level0);
  }
  for (int d = 0; d < nd; ++d) {
    q.curves_d.push_back(p.curves_d[d] + ".1");
    out.r_provenance.push_back(CurveProvenance::level1);
  }

  const int total = q.num_curves();
  q.inter.assign(static_cast<size_t>(total) * total, 0);
  // Q indices: d0 at d, c1 at nd + c, disc at nd + nc.
  // R indices (offset by |Q|): c0 at c, d1 at nc + d.
  const int q_count = nd + nc + 1;
  const int disc = nd + nc;
  auto set_sym = [&](int i, int j, long long value) {
    q.intersection_ref(i, j) = value;
    q.intersection_ref(j, i) = value;
  };
  // Level 0 copies intersect level 0 copies as the originals did; same at
  // level 1. Copies at different levels are disjoint.
  for (int d = 0; d < nd; ++d) {
    for (int c = 0; c < nc; ++c) {
      set_sym(d, q_count + c, p.intersection(nc + d, c));             // d0 vs c0
      set_sym(nd + c, q_count + nc + d, p.intersection(c, nc + d));   // c1 vs d1
    }
  }
  // The disc boundary: two crossings with gamma at level 0, two per
  // intersection of gamma with each D-curve at level 1, disjoint from the
  // rest by the band-sum construction.
  set_sym(disc, q_count + gamma, 2);
  for (int d = 0; d < nd; ++d) {
    set_sym(disc, q_count + nc + d, 2 * p.intersection(gamma, nc + d));
  }
  return out;
}

}  // namespace

BoundaryPairData build_boundary_pair(const PennerPair& p, const DualArc& arc) {
  const ValidityReport validity = validate_pair(p);
  if (!validity.ok()) {
    throw Error("build_boundary_pair: pair fails necessary checks: " + validity.violations.front());
  }
  if (p.surface.boundary_components != 1) {
    throw Error("build_boundary_pair: surface must have exactly one boundary component");
  }
  if (arc.meets != 1) {
    throw Error("build_boundary_pair: dual arc must meet the curve systems exactly once");
  }
  const int gamma = p.curve_index(arc.gamma);
  if (gamma < 0) throw Error("build_boundary_pair: unknown curve '" + arc.gamma + "'");
  if (p.in_c(gamma)) {
    return build_boundary_pair_gamma_in_c(p, arc, false);
  }
  // gamma lies in D: exchange the roles of the two families and rerun.
  PennerPair swapped = p;
  std::swap(swapped.curves_c, swapped.curves_d);
  const int nc = static_cast<int>(p.curves_c.size());
  const int nd = static_cast<int>(p.curves_d.size());
  const int n = p.num_curves();
  auto old_index = [&](int i) { return i < nd ? nc + i : i - nd; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      swapped.intersection_ref(i, j) = p.intersection(old_index(i), old_index(j));
    }
  }
  return build_boundary_pair_gamma_in_c(swapped, arc, true);
}

GrowthComparison compare_growth(double lambda, const PennerPair& p, const TwistWord& word,
                                double tol, int max_iter) {
  GrowthComparison out;
  out.lambda = lambda;
  out.lambda_boundary = penner_product(p, word, tol, max_iter).growth.lambda;
  out.consistent = lambda <= out.lambda_boundary + kSubinvarianceSlack;
  out.message = out.consistent ? "consistent with tightness"
                               : "inconsistent: lamination not tight or data mismatch";
  return out;
}

}  // namespace hbg
