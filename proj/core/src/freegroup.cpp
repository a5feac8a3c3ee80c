#include "hbgrowth/freegroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hbg {

Word parse_word(const std::string& text, int rank) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "1") continue;  // the trivial word, as printed by word_to_string
    bool inverse = false;
    if (token.size() > 1 && token.back() == '-') {
      inverse = true;
      token.pop_back();
    }
    if (token.size() < 2 || token[0] != 'x') {
      throw Error("parse_word: unknown generator symbol '" + token + "'");
    }
    int index = 0;
    for (size_t k = 1; k < token.size(); ++k) {
      if (token[k] < '0' || token[k] > '9') {
        throw Error("parse_word: unknown generator symbol '" + token + "'");
      }
      index = index * 10 + (token[k] - '0');
    }
    if (index < 1 || (rank > 0 && index > rank)) {
      throw Error("parse_word: generator index out of range in '" + token + "'");
    }
    w.letters.push_back(inverse ? -index : index);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(letter > 0 ? letter : -letter);
    if (letter < 0) out += '-';
  }
  return out;
}

bool is_reduced_word(const Word& w) {
  for (size_t k = 0; k + 1 < w.letters.size(); ++k) {
    if (w.letters[k] == -w.letters[k + 1]) return false;
  }
  return true;
}

Word reduce_word(Word w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (int letter : w.letters) {
    if (letter == 0) throw Error("reduce_word: zero is not a letter");
    if (!out.letters.empty() && out.letters.back() == -letter) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(letter);
    }
  }
  return out;
}

FreeEndomorphism FreeEndomorphism::identity(int rank) {
  FreeEndomorphism e;
  e.rank = rank;
  e.images.resize(rank);
  for (int i = 0; i < rank; ++i) e.images[i].letters = {i + 1};
  return e;
}

void check_endo(const FreeEndomorphism& e) {
  if (e.rank < 0) throw Error("endomorphism: negative rank");
  if (static_cast<int>(e.images.size()) != e.rank) {
    throw Error("endomorphism: image count differs from rank");
  }
  for (const Word& w : e.images) {
    for (int letter : w.letters) {
      const int g = letter > 0 ? letter : -letter;
      if (g < 1 || g > e.rank) throw Error("endomorphism: image uses generator outside alphabet");
    }
  }
}

Word apply_endo(const FreeEndomorphism& e, const Word& w) {
  check_endo(e);
  Word out;
  for (int letter : w.letters) {
    const int g = letter > 0 ? letter : -letter;
    if (g < 1 || g > e.rank) throw Error("apply_endo: rank mismatch");
    const Word& image = e.images[g - 1];
    if (letter > 0) {
      out.letters.insert(out.letters.end(), image.letters.begin(), image.letters.end());
    } else {
      for (size_t k = image.letters.size(); k-- > 0;) out.letters.push_back(-image.letters[k]);
    }
  }
  return reduce_word(std::move(out));
}

FreeEndomorphism compose_endos(const FreeEndomorphism& e1, const FreeEndomorphism& e2) {
  check_endo(e1);
  check_endo(e2);
  if (e1.rank != e2.rank) throw Error("compose_endos: rank mismatch");
  FreeEndomorphism out;
  out.rank = e1.rank;
  out.images.reserve(e1.rank);
  for (const Word& w : e2.images) out.images.push_back(apply_endo(e1, w));
  return out;
}

IntMatrix abelianization(const FreeEndomorphism& e) {
  check_endo(e);
  IntMatrix m;
  m.dim = e.rank;
  m.entries.assign(static_cast<size_t>(e.rank) * e.rank, 0);
  for (int i = 0; i < e.rank; ++i) {
    for (int letter : e.images[i].letters) {
      const int g = letter > 0 ? letter : -letter;
      m.at(i, g - 1) += letter > 0 ? 1 : -1;
    }
  }
  return m;
}

namespace {

// Stallings graph: vertices under union-find, labeled edges as triples.
struct FoldGraph {
  struct LabeledEdge {
    int label;  // 1..rank
    int from;
    int to;
    bool alive = true;
  };
  std::vector<int> parent;
  std::vector<LabeledEdge> edges;

  int make_vertex() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Repeatedly identify pairs of same-labeled edges leaving a common vertex
// (in either direction) until the graph is folded.
void fold(FoldGraph& fg) {
  bool changed = true;
  while (changed) {
    changed = false;
    // (vertex, signed label) -> edge index
    std::map<std::pair<int, int>, int> seen;
    for (int idx = 0; idx < static_cast<int>(fg.edges.size()) && !changed; ++idx) {
      auto& e = fg.edges[idx];
      if (!e.alive) continue;
      const int u = fg.find(e.from);
      const int v = fg.find(e.to);
      for (const auto& [vertex, slabel, other_end] :
           {std::tuple{u, e.label, v}, std::tuple{v, -e.label, u}}) {
        auto [it, inserted] = seen.try_emplace({vertex, slabel}, idx);
        if (inserted) continue;
        auto& prior = fg.edges[it->second];
        const int prior_end = slabel > 0 ? fg.find(prior.to) : fg.find(prior.from);
        if (it->second == idx) continue;  // loop seen from both ends
        fg.unite(other_end, prior_end);
        e.alive = false;
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

bool is_surjective(const FreeEndomorphism& e) {
  check_endo(e);
  if (e.rank == 0) return true;
  FoldGraph fg;
  const int base = fg.make_vertex();
  for (const Word& raw : e.images) {
    const Word w = reduce_word(raw);
    int at = base;
    for (size_t k = 0; k < w.letters.size(); ++k) {
      const int next = (k + 1 == w.letters.size()) ? base : fg.make_vertex();
      const int letter = w.letters[k];
      if (letter > 0) {
        fg.edges.push_back({letter, at, next});
      } else {
        fg.edges.push_back({-letter, next, at});
      }
      at = next;
    }
  }
  fold(fg);
  // Trim the folded graph to its core: drop non-base vertices of degree 1.
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::map<int, int> degree;
    for (const auto& edge : fg.edges) {
      if (!edge.alive) continue;
      ++degree[fg.find(edge.from)];
      ++degree[fg.find(edge.to)];
    }
    for (auto& edge : fg.edges) {
      if (!edge.alive) continue;
      const int u = fg.find(edge.from);
      const int v = fg.find(edge.to);
      if (u == v) continue;
      if ((degree[u] == 1 && u != fg.find(base)) || (degree[v] == 1 && v != fg.find(base))) {
        edge.alive = false;
        trimmed = true;
      }
    }
  }
  // Core must be the full rank-n rose at the base vertex.
  std::vector<bool> label_seen(e.rank + 1, false);
  int live = 0;
  const int root = fg.find(base);
  for (const auto& edge : fg.edges) {
    if (!edge.alive) continue;
    ++live;
    if (fg.find(edge.from) != root || fg.find(edge.to) != root) return false;
    if (label_seen[edge.label]) return false;
    label_seen[edge.label] = true;
  }
  if (live != e.rank) return false;
  for (int g = 1; g <= e.rank; ++g) {
    if (!label_seen[g]) return false;
  }
  return true;
}

std::vector<int> default_spanning_tree(const Graph& g) {
  std::vector<int> tree;
  if (g.num_vertices() == 0) return tree;
  std::vector<bool> seen(g.num_vertices(), false);
  seen[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int e = 0; e < g.num_edges(); ++e) {
      const int a = g.edge_from[e];
      const int b = g.edge_to[e];
      if (seen[a] != seen[b]) {
        tree.push_back(e);
        seen[a] = seen[b] = true;
        grew = true;
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

namespace {

// Walk inside the tree from `from` to `to`; parent structure is rebuilt
// per call (graphs here are tiny).
EdgePath tree_path(const Graph& g, const std::vector<bool>& in_tree, int from, int to) {
  const int nv = g.num_vertices();
  std::vector<int> parent_vertex(nv, -1);
  std::vector<OrientedEdge> parent_dart(nv, OrientedEdge{});
  std::vector<int> queue{from};
  std::vector<bool> seen(nv, false);
  seen[from] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!in_tree[e]) continue;
      for (const OrientedEdge t : {OrientedEdge{e, false}, OrientedEdge{e, true}}) {
        if (g.source_of(t) != v) continue;
        const int w = g.target_of(t);
        if (!seen[w]) {
          seen[w] = true;
          parent_vertex[w] = v;
          parent_dart[w] = t;
          queue.push_back(w);
        }
      }
    }
  }
  if (!seen[to]) throw Error("induced_pi1_map: spanning tree does not connect the graph");
  EdgePath out;
  for (int v = to; v != from; v = parent_vertex[v]) out.tokens.push_back(parent_dart[v]);
  std::reverse(out.tokens.begin(), out.tokens.end());
  return out;
}

}  // namespace

FreeEndomorphism induced_pi1_map(const GraphMap& f, const std::vector<int>& tree_edges) {
  check_map(f);
  if (!f.is_endomorphism()) throw Error("induced_pi1_map: map is not an endomorphism");
  const Graph& g = f.source;
  if (!validate_graph(g).ok()) throw Error("induced_pi1_map: invalid graph");
  std::vector<bool> in_tree(g.num_edges(), false);
  for (int e : tree_edges) {
    if (e < 0 || e >= g.num_edges()) throw Error("induced_pi1_map: tree edge out of range");
    if (in_tree[e]) throw Error("induced_pi1_map: repeated tree edge");
    in_tree[e] = true;
  }
  if (static_cast<int>(tree_edges.size()) != g.num_vertices() - 1) {
    throw Error("induced_pi1_map: tree must have (vertex count - 1) edges");
  }
  {
    // A subgraph with V-1 edges spans iff it reaches every vertex.
    std::vector<bool> seen(g.num_vertices(), false);
    seen[0] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < g.num_edges(); ++e) {
        if (!in_tree[e]) continue;
        if (seen[g.edge_from[e]] != seen[g.edge_to[e]]) {
          seen[g.edge_from[e]] = seen[g.edge_to[e]] = true;
          grew = true;
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error("induced_pi1_map: spanning tree does not connect the graph");
    }
  }
  std::vector<int> generator_of_edge(g.num_edges(), 0);  // signed generator index
  int rank = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!in_tree[e]) generator_of_edge[e] = ++rank;
  }
  const int base = 0;
  FreeEndomorphism out;
  out.rank = rank;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (in_tree[e]) continue;
    EdgePath loop = tree_path(g, in_tree, base, g.edge_from[e]);
    loop.tokens.push_back({e, false});
    const EdgePath back = tree_path(g, in_tree, g.edge_to[e], base);
    loop.tokens.insert(loop.tokens.end(), back.tokens.begin(), back.tokens.end());
    const EdgePath image = apply_map(f, loop);
    Word w;
    for (const OrientedEdge& t : image.tokens) {
      const int gen = generator_of_edge[t.edge];
      if (gen == 0) continue;  // tree edge collapses
      w.letters.push_back(t.reversed ? -gen : gen);
    }
    out.images.push_back(reduce_word(std::move(w)));
  }
  return out;
}

}  // namespace hbg
