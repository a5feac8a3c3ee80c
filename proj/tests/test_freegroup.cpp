#include <doctest.h>

#include <cstdlib>
#include <random>

#include "hbgrowth/freegroup.hpp"
#include "test_support.hpp"

using namespace hbg;

namespace {

Word w(std::initializer_list<int> letters) { return Word{std::vector<int>(letters)}; }

FreeEndomorphism endo2(Word a, Word b) {
  FreeEndomorphism e;
  e.rank = 2;
  e.images = {std::move(a), std::move(b)};
  return e;
}

}  // namespace

TEST_SUITE("freegroup") {

TEST_CASE("parse and print words") {
  CHECK(parse_word("x1 x2- x1") == w({1, -2, 1}));
  CHECK(parse_word("") == Word{});
  CHECK(word_to_string(w({1, -2})) == "x1 x2-");
  CHECK(word_to_string(Word{}) == "1");
  CHECK_THROWS_WITH_AS(parse_word("y1"), doctest::Contains("unknown generator"), Error);
  CHECK_THROWS_AS(parse_word("x0"), Error);
  CHECK_THROWS_AS(parse_word("x3", 2), Error);
}

TEST_CASE("reduce_word") {
  CHECK(reduce_word(w({1, 2, -2})) == w({1}));
  CHECK(reduce_word(Word{}) == Word{});
  CHECK(reduce_word(w({1, -1, 1})) == w({1}));
  CHECK(is_reduced_word(w({1, 2})));
  CHECK_FALSE(is_reduced_word(w({1, -1})));
}

TEST_CASE("apply_endo") {
  const FreeEndomorphism e = endo2(w({1, 2}), w({2}));  // x -> xy, y -> y
  CHECK(apply_endo(e, w({1, -2})) == w({1}));
  CHECK(apply_endo(FreeEndomorphism::identity(2), w({1, -2, 1})) == w({1, -2, 1}));
  CHECK(apply_endo(e, Word{}) == Word{});
  CHECK_THROWS_AS(apply_endo(e, w({3})), Error);
}

TEST_CASE("compose_endos") {
  const FreeEndomorphism e = endo2(w({1, 2}), w({2}));
  const FreeEndomorphism squared = compose_endos(e, e);
  CHECK(squared.images[0] == w({1, 2, 2}));
  CHECK(squared.images[1] == w({2}));

  const FreeEndomorphism id = FreeEndomorphism::identity(2);
  CHECK(compose_endos(e, id) == e);
  // a twist along a disc induces the identity, so composing changes nothing
  CHECK(compose_endos(id, e) == e);

  FreeEndomorphism r3 = FreeEndomorphism::identity(3);
  CHECK_THROWS_AS(compose_endos(e, r3), Error);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(endo2(w({1, 2}), w({2}))) == IntMatrix(2, {1, 1, 0, 1}));
  CHECK(abelianization(endo2(w({1, 1}), w({2}))) == IntMatrix(2, {2, 0, 0, 1}));
  CHECK(abelianization(FreeEndomorphism::identity(3)) == IntMatrix::identity(3));
  CHECK(determinant(abelianization(endo2(w({1, 2}), w({2})))) == 1);
  CHECK(determinant(abelianization(endo2(w({1, 1}), w({2})))) == 2);
}

TEST_CASE("is_surjective") {
  CHECK(is_surjective(endo2(w({1, 2}), w({2}))));       // Nielsen move
  CHECK_FALSE(is_surjective(endo2(w({1, 1}), w({2}))));  // det 2
  CHECK(is_surjective(FreeEndomorphism::identity(3)));
  CHECK_FALSE(is_surjective(endo2(w({1, 2}), w({1, 2}))));  // collapsed rank
  CHECK_FALSE(is_surjective(endo2(w({2, 1, -2}), w({2, 1, -2}))));
  // conjugated basis still generates
  CHECK(is_surjective(endo2(w({2, 1, -2}), w({2}))));
}

TEST_CASE("random Nielsen products are automorphisms") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    const int rank = hbgtest::pick(rng, 1, 4);
    const FreeEndomorphism e = hbgtest::random_nielsen_automorphism(rng, rank, 10);
    CHECK(is_surjective(e));
    CHECK(std::llabs(determinant(abelianization(e))) == 1);
  }
}

TEST_CASE("conjugated bases still generate") {
  // {w x w^-1, w y w^-1} generates the whole group for any w; the folded
  // graph temporarily grows a stem that must fold back into the rose
  CHECK(is_surjective(endo2(w({1, 2, 1, -2, -1}), w({1, 2, -1}))));  // w = xy
  std::mt19937 rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const int rank = hbgtest::pick(rng, 2, 3);
    Word conj;
    const int len = hbgtest::pick(rng, 1, 4);
    for (int k = 0; k < len; ++k) {
      const int g = hbgtest::pick(rng, 1, rank);
      conj.letters.push_back(hbgtest::pick(rng, 0, 1) == 1 ? g : -g);
    }
    FreeEndomorphism e;
    e.rank = rank;
    for (int i = 1; i <= rank; ++i) {
      Word image = conj;
      image.letters.push_back(i);
      for (size_t k = conj.letters.size(); k-- > 0;) image.letters.push_back(-conj.letters[k]);
      e.images.push_back(reduce_word(image));
    }
    CHECK(is_surjective(e));
  }
}

TEST_CASE("squaring one image of an automorphism breaks surjectivity") {
  // {u^2, v, ...} generates a proper subgroup whenever {u, v, ...} is a
  // basis, so folding must answer false even though only one image changed
  std::mt19937 rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    const int rank = hbgtest::pick(rng, 1, 3);
    FreeEndomorphism e = hbgtest::random_nielsen_automorphism(rng, rank, 8);
    const int which = hbgtest::pick(rng, 0, rank - 1);
    Word doubled = e.images[which];
    doubled.letters.insert(doubled.letters.end(), e.images[which].letters.begin(),
                           e.images[which].letters.end());
    e.images[which] = reduce_word(doubled);
    CHECK_FALSE(is_surjective(e));
  }
}

TEST_CASE("composition properties") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 25; ++trial) {
    const int rank = hbgtest::pick(rng, 2, 4);
    FreeEndomorphism e1, e2;
    e1.rank = e2.rank = rank;
    auto random_word = [&](int max_len) {
      Word word;
      const int len = hbgtest::pick(rng, 0, max_len);
      for (int k = 0; k < len; ++k) {
        const int g = hbgtest::pick(rng, 1, rank);
        word.letters.push_back(hbgtest::pick(rng, 0, 1) == 1 ? g : -g);
      }
      return reduce_word(word);
    };
    for (int i = 0; i < rank; ++i) {
      e1.images.push_back(random_word(5));
      e2.images.push_back(random_word(5));
    }
    const Word probe = random_word(6);
    CHECK(apply_endo(compose_endos(e1, e2), probe) == apply_endo(e1, apply_endo(e2, probe)));
    // row convention: abelianization of e1 after e2 multiplies as ab(e2) * ab(e1)
    CHECK(abelianization(compose_endos(e1, e2)) ==
          multiply(abelianization(e2), abelianization(e1)));
  }
}

TEST_CASE("induced_pi1_map on a rose is verbatim") {
  GraphMap f;
  f.source = Graph::rose(2);
  f.target = f.source;
  f.vertex_map = {0};
  f.edge_map.resize(2);
  f.edge_map[0].tokens = {{0, false}, {1, false}};
  f.edge_map[1].tokens = {{1, false}};
  const FreeEndomorphism e = induced_pi1_map(f, {});
  CHECK(e.rank == 2);
  CHECK(e.images[0] == w({1, 2}));
  CHECK(e.images[1] == w({2}));
}

TEST_CASE("induced_pi1_map collapses a theta graph") {
  Graph theta;
  theta.add_vertex("u");
  theta.add_vertex("v");
  theta.add_edge("e1", 0, 1);
  theta.add_edge("e2", 0, 1);
  theta.add_edge("e3", 0, 1);
  const FreeEndomorphism e = induced_pi1_map(GraphMap::identity(theta), {0});
  CHECK(e.rank == 2);
  CHECK(e == FreeEndomorphism::identity(2));
}

TEST_CASE("induced_pi1_map on a barbell swap") {
  // loops at both ends of a bar; the map swaps the loops through the bar
  Graph barbell;
  barbell.add_vertex("u");
  barbell.add_vertex("v");
  barbell.add_edge("p", 0, 0);
  barbell.add_edge("q", 1, 1);
  barbell.add_edge("bar", 0, 1);
  GraphMap f;
  f.source = barbell;
  f.target = barbell;
  f.vertex_map = {0, 1};
  f.edge_map.resize(3);
  f.edge_map[0].tokens = {{2, false}, {1, false}, {2, true}};  // p -> bar q bar~
  f.edge_map[1].tokens = {{2, true}, {0, false}, {2, false}};  // q -> bar~ p bar
  f.edge_map[2].tokens = {{2, false}};
  const FreeEndomorphism e = induced_pi1_map(f, {2});
  CHECK(e.rank == 2);
  CHECK(e.images[0] == w({2}));
  CHECK(e.images[1] == w({1}));
  CHECK(is_surjective(e));
}

TEST_CASE("induced_pi1_map validates the tree") {
  const GraphMap id = GraphMap::identity(Graph::rose(2));
  CHECK_THROWS_AS(induced_pi1_map(id, {0}), Error);   // too many edges for one vertex
  CHECK_THROWS_AS(induced_pi1_map(id, {9}), Error);   // out of range
  Graph theta;
  theta.add_vertex("u");
  theta.add_vertex("v");
  theta.add_edge("e1", 0, 1);
  theta.add_edge("e2", 0, 1);
  CHECK_THROWS_AS(induced_pi1_map(GraphMap::identity(theta), {0, 1}), Error);  // not a tree
  CHECK_THROWS_AS(induced_pi1_map(GraphMap::identity(theta), {}), Error);      // misses a vertex
}

TEST_CASE("outer-class invariants do not depend on the tree") {
  // different spanning trees change the basis, not the outer class, so
  // surjectivity and |det| of the abelianization must agree
  Graph theta;
  theta.add_vertex("u");
  theta.add_vertex("v");
  theta.add_edge("e1", 0, 1);
  theta.add_edge("e2", 0, 1);
  theta.add_edge("e3", 0, 1);
  std::mt19937 rng(515);
  for (int trial = 0; trial < 20; ++trial) {
    const GraphMap f = hbgtest::random_graph_map(rng, theta, 5);
    const FreeEndomorphism a = induced_pi1_map(f, {0});
    const FreeEndomorphism b = induced_pi1_map(f, {1});
    const FreeEndomorphism c = induced_pi1_map(f, {2});
    CHECK(is_surjective(a) == is_surjective(b));
    CHECK(is_surjective(b) == is_surjective(c));
    CHECK(std::llabs(determinant(abelianization(a))) ==
          std::llabs(determinant(abelianization(b))));
    CHECK(std::llabs(determinant(abelianization(b))) ==
          std::llabs(determinant(abelianization(c))));
  }
}

TEST_CASE("default_spanning_tree spans") {
  Graph theta;
  theta.add_vertex("u");
  theta.add_vertex("v");
  theta.add_edge("e1", 0, 1);
  theta.add_edge("e2", 0, 1);
  CHECK(default_spanning_tree(theta) == std::vector<int>{0});
  CHECK(default_spanning_tree(Graph::rose(3)).empty());
}

}  // TEST_SUITE
