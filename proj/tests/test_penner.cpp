#include <doctest.h>

#include <cmath>
#include <random>

#include "hbgrowth/penner.hpp"
#include "test_support.hpp"

using namespace hbg;

namespace {

// once-punctured torus, one curve per family, a single crossing
PennerPair torus_pair() {
  PennerPair p;
  p.surface = {1, 1};
  p.curves_c = {"a0"};
  p.curves_d = {"a1"};
  p.inter = {0, 1, 1, 0};
  p.cert_no_parallel = true;
  p.cert_fills = true;
  return p;
}

// C = {c}, D = {d1, d2}, c crossing each d once
PennerPair chain_pair() {
  PennerPair p;
  p.surface = {2, 1};
  p.curves_c = {"c"};
  p.curves_d = {"d1", "d2"};
  p.inter = {0, 1, 1, 1, 0, 0, 1, 0, 0};
  p.cert_no_parallel = true;
  p.cert_fills = true;
  return p;
}

TwistWord torus_word() { return {{"a0", -1}, {"a1", +1}}; }

constexpr double kGolden = 2.618033988749895;  // (3 + sqrt 5) / 2

}  // namespace

TEST_SUITE("penner") {

TEST_CASE("validate_pair") {
  CHECK(validate_pair(torus_pair()).ok());
  CHECK(validate_pair(chain_pair()).ok());

  SUBCASE("curve with no opposite intersections") {
    PennerPair p = chain_pair();
    p.intersection_ref(0, 2) = 0;
    p.intersection_ref(2, 0) = 0;  // d2 now meets nothing
    const ValidityReport report = validate_pair(p);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().find("opposite family") != std::string::npos);
  }
  SUBCASE("within-family intersection") {
    PennerPair p = chain_pair();
    p.intersection_ref(1, 2) = 2;
    p.intersection_ref(2, 1) = 2;  // d1 x d2 nonzero
    const ValidityReport report = validate_pair(p);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().find("within-family") != std::string::npos);
  }
  SUBCASE("Euler characteristic") {
    PennerPair p = torus_pair();
    p.surface = {0, 1};  // a disc cannot carry the construction
    CHECK_FALSE(validate_pair(p).ok());
  }
  SUBCASE("disconnected intersection graph") {
    PennerPair p;
    p.surface = {2, 1};
    p.curves_c = {"c1", "c2"};
    p.curves_d = {"d1", "d2"};
    p.inter.assign(16, 0);
    p.intersection_ref(0, 2) = p.intersection_ref(2, 0) = 1;  // c1 x d1
    p.intersection_ref(1, 3) = p.intersection_ref(3, 1) = 1;  // c2 x d2
    const ValidityReport report = validate_pair(p);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().find("disconnected") != std::string::npos);
  }
}

TEST_CASE("twist_matrix") {
  CHECK(twist_matrix(torus_pair(), "a0") == NonNegMatrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(twist_matrix(torus_pair(), "a1") == NonNegMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK(twist_matrix(chain_pair(), "c") ==
        NonNegMatrix::from_rows({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));

  // no intersections: twisting does nothing to the coordinates
  PennerPair blank = torus_pair();
  blank.inter.assign(4, 0);
  CHECK(twist_matrix(blank, "a0") == NonNegMatrix::identity(2));

  CHECK_THROWS_AS(twist_matrix(torus_pair(), "zz"), Error);
}

TEST_CASE("twist matrices are one-row unipotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const PennerPair p = hbgtest::random_penner_pair(rng, 2, 3);
    const int index = hbgtest::pick(rng, 0, p.num_curves() - 1);
    const NonNegMatrix t = twist_matrix(p, index);
    IntMatrix signed_copy(t.dim, std::vector<long long>(t.entries.begin(), t.entries.end()));
    CHECK(determinant(signed_copy) == 1);
    for (int i = 0; i < t.dim; ++i) {
      if (i == index) continue;
      for (int j = 0; j < t.dim; ++j) CHECK(t.at(i, j) == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("penner_product on the torus oracle") {
  const PennerProduct product = penner_product(torus_pair(), torus_word());
  CHECK(product.matrix == NonNegMatrix::from_rows({{1, 1}, {1, 2}}));
  CHECK(product.matrix.at(0, 0) + product.matrix.at(1, 1) == 3);
  CHECK(std::abs(product.growth.lambda - kGolden) < 1e-9);
}

TEST_CASE("penner_product hypothesis checks") {
  CHECK_THROWS_WITH_AS(penner_product(torus_pair(), {}),
                       doctest::Contains("Penner hypothesis violated"), Error);
  CHECK_THROWS_WITH_AS(penner_product(torus_pair(), {{"a0", -1}}),
                       doctest::Contains("does not appear"), Error);
  CHECK_THROWS_WITH_AS(penner_product(torus_pair(), {{"a0", -1}, {"a1", -1}}),
                       doctest::Contains("opposite directions"), Error);
  CHECK_THROWS_WITH_AS(
      penner_product(torus_pair(), {{"a0", -1}, {"a0", +1}, {"a1", +1}}),
      doctest::Contains("uniform within a family"), Error);
  CHECK_THROWS_AS(penner_product(torus_pair(), {{"zz", +1}, {"a0", -1}, {"a1", +1}}), Error);

  PennerPair invalid = chain_pair();
  invalid.intersection_ref(0, 2) = 0;
  invalid.intersection_ref(2, 0) = 0;
  CHECK_THROWS_WITH_AS(
      penner_product(invalid, {{"c", +1}, {"d1", -1}, {"d2", -1}}),
      doctest::Contains("necessary checks"), Error);
}

TEST_CASE("penner_product on the chain case") {
  // hand product: T_d2 T_d1 T_c has characteristic polynomial
  // (1-x)(x^2-4x+1), so the dilatation is 2+sqrt(3)
  const PennerProduct product =
      penner_product(chain_pair(), {{"c", +1}, {"d1", -1}, {"d2", -1}});
  NonNegMatrix expected = NonNegMatrix::identity(3);
  for (const char* curve : {"c", "d1", "d2"}) {
    expected = multiply(twist_matrix(chain_pair(), curve), expected);
  }
  CHECK(product.matrix == expected);
  CHECK(product.matrix == NonNegMatrix::from_rows({{1, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
  CHECK(std::abs(product.growth.lambda - (2.0 + std::sqrt(3.0))) < 1e-9);
}

TEST_CASE("word reversal preserves the dilatation") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const PennerPair p = hbgtest::random_penner_pair(rng, 2, 3);
    const TwistWord word = hbgtest::random_covering_word(rng, p);
    TwistWord reversed(word.rbegin(), word.rend());
    const double forward = penner_product(p, word).growth.lambda;
    const double backward = penner_product(p, reversed).growth.lambda;
    CHECK(std::abs(forward - backward) < 1e-9);
    CHECK(forward > 1.0 + 1e-9);  // coverage and connectivity force stretching
  }
}

TEST_CASE("build_boundary_pair on the torus") {
  const BoundaryPairData data = build_boundary_pair(torus_pair(), {"a0", 1});
  const PennerPair& q = data.pair;
  REQUIRE(q.curves_c.size() == 3);  // |Q| = |D| + |C| + 1
  REQUIRE(q.curves_d.size() == 2);  // |R| = |C| + |D|
  CHECK_FALSE(data.swapped_roles);
  CHECK(q.curves_c == std::vector<std::string>{"a1.0", "a0.1", "dDelta"});
  CHECK(q.curves_d == std::vector<std::string>{"a0.0", "a1.1"});
  CHECK(data.q_provenance ==
        std::vector<CurveProvenance>{CurveProvenance::level0, CurveProvenance::level1,
                                     CurveProvenance::boundary_disc});

  const int disc = q.curve_index("dDelta");
  CHECK(q.intersection(disc, q.curve_index("a0.0")) == 2);   // two crossings with gamma_0
  CHECK(q.intersection(disc, q.curve_index("a1.1")) == 2);   // 2 * i(gamma, d)
  CHECK(q.intersection(disc, q.curve_index("a1.0")) == 0);   // disjoint from D_0
  CHECK(q.intersection(disc, q.curve_index("a0.1")) == 0);   // disjoint from C_1
  // levels never mix
  CHECK(q.intersection(q.curve_index("a1.0"), q.curve_index("a1.1")) == 0);
  CHECK(q.intersection(q.curve_index("a0.0"), q.curve_index("a0.1")) == 0);
  // level copies intersect as the originals
  CHECK(q.intersection(q.curve_index("a1.0"), q.curve_index("a0.0")) == 1);
  CHECK(q.intersection(q.curve_index("a0.1"), q.curve_index("a1.1")) == 1);

  CHECK(validate_pair(q).ok());
}

TEST_CASE("build_boundary_pair size law") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    PennerPair p = hbgtest::random_penner_pair(rng, 2, 2);
    p.surface.boundary_components = 1;
    const std::string gamma = p.curve_name(hbgtest::pick(rng, 0, p.num_curves() - 1));
    const BoundaryPairData data = build_boundary_pair(p, {gamma, 1});
    CHECK(data.pair.curves_c.size() == p.curves_c.size() + p.curves_d.size() + 1);
    CHECK(data.pair.curves_d.size() == p.curves_c.size() + p.curves_d.size());
    CHECK(validate_pair(data.pair).ok());
  }
}

TEST_CASE("build_boundary_pair swaps roles for a D-side arc") {
  const BoundaryPairData data = build_boundary_pair(torus_pair(), {"a1", 1});
  CHECK(data.swapped_roles);
  const PennerPair& q = data.pair;
  const int disc = q.curve_index("dDelta");
  REQUIRE(disc >= 0);
  CHECK(q.intersection(disc, q.curve_index("a1.0")) == 2);
  CHECK(q.intersection(disc, q.curve_index("a0.1")) == 2);
  CHECK(validate_pair(q).ok());
}

TEST_CASE("build_boundary_pair error paths") {
  CHECK_THROWS_WITH_AS(build_boundary_pair(torus_pair(), {"a0", 2}),
                       doctest::Contains("exactly once"), Error);
  PennerPair closed = torus_pair();
  closed.surface = {2, 0};
  CHECK_THROWS_WITH_AS(build_boundary_pair(closed, {"a0", 1}),
                       doctest::Contains("one boundary"), Error);
  CHECK_THROWS_AS(build_boundary_pair(torus_pair(), {"zz", 1}), Error);
}

TEST_CASE("compare_growth") {
  const GrowthComparison low = compare_growth(2.0, torus_pair(), torus_word());
  CHECK(low.consistent);
  CHECK(low.message == "consistent with tightness");

  const GrowthComparison high = compare_growth(3.0, torus_pair(), torus_word());
  CHECK_FALSE(high.consistent);
  CHECK(high.message == "inconsistent: lamination not tight or data mismatch");

  const GrowthComparison equal =
      compare_growth(high.lambda_boundary, torus_pair(), torus_word());
  CHECK(equal.consistent);
}

}  // TEST_SUITE
