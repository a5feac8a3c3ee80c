#ifndef HBGROWTH_FREEGROUP_HPP_
#define HBGROWTH_FREEGROUP_HPP_

#include <string>
#include <vector>

#include "hbgrowth/graph.hpp"
#include "hbgrowth/matrix.hpp"

namespace hbg {

// Word over generators x1..xn: letter +g means x_g, letter -g means x_g^-1.
struct Word {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

// Parse/print the token format "x1 x2- x1". Tokens are whitespace
// separated; a trailing '-' marks the inverse letter. rank <= 0 accepts
// any generator index.
Word parse_word(const std::string& text, int rank = 0);
std::string word_to_string(const Word& w);

bool is_reduced_word(const Word& w);
Word reduce_word(Word w);

struct FreeEndomorphism {
  int rank = 0;
  std::vector<Word> images;  // image of x_i at index i-1, stored reduced

  static FreeEndomorphism identity(int rank);
  bool operator==(const FreeEndomorphism&) const = default;
};

// Throws when images use generators outside 1..rank or the image count is
// wrong.
void check_endo(const FreeEndomorphism& e);

// Substitute images for the letters of w and reduce.
Word apply_endo(const FreeEndomorphism& e, const Word& w);

// e1 after e2: (e1 . e2)(w) = e1(e2(w)).
FreeEndomorphism compose_endos(const FreeEndomorphism& e1, const FreeEndomorphism& e2);

// Entry (i, j) = exponent sum of x_j in the image of x_i.
IntMatrix abelianization(const FreeEndomorphism& e);

// True iff the images generate the whole free group, decided by Stallings
// folding of the wedge of image words: the subgroup is everything exactly
// when the folded core at the base vertex is the rank-n rose. Combined
// with the Hopfian property of free groups this decides whether e is an
// automorphism.
bool is_surjective(const FreeEndomorphism& e);

// Endomorphism induced on the fundamental group by a graph endomorphism,
// with respect to a spanning tree (canonical edge indices). Generators
// are the non-tree edges in canonical order; images are the f-images of
// the generator loops through the base vertex (vertex 0), rewritten by
// collapsing the tree. Deterministic for a fixed tree; different trees
// give representatives of the same outer class.
FreeEndomorphism induced_pi1_map(const GraphMap& f, const std::vector<int>& tree_edges);

// Spanning tree picked greedily in canonical edge order from vertex 0;
// the default tree used by the command-line front end.
std::vector<int> default_spanning_tree(const Graph& g);

}  // namespace hbg

#endif  // HBGROWTH_FREEGROUP_HPP_
