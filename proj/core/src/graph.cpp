#include "hbgrowth/graph.hpp"

#include <algorithm>

namespace hbg {

int Graph::add_vertex(const std::string& name) {
  if (vertex_index(name) != -1) throw Error("add_vertex: duplicate vertex id '" + name + "'");
  vertex_names.push_back(name);
  return num_vertices() - 1;
}

int Graph::add_edge(const std::string& name, int from, int to) {
  if (edge_index(name) != -1) throw Error("add_edge: duplicate edge id '" + name + "'");
  if (from < 0 || from >= num_vertices() || to < 0 || to >= num_vertices()) {
    throw Error("add_edge: endpoint references a missing vertex");
  }
  edge_names.push_back(name);
  edge_from.push_back(from);
  edge_to.push_back(to);
  const int e = num_edges() - 1;
  involution.push_back(2 * e + 1);
  involution.push_back(2 * e);
  return e;
}

int Graph::vertex_index(const std::string& name) const {
  auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
  return it == vertex_names.end() ? -1 : static_cast<int>(it - vertex_names.begin());
}

int Graph::edge_index(const std::string& name) const {
  auto it = std::find(edge_names.begin(), edge_names.end(), name);
  return it == edge_names.end() ? -1 : static_cast<int>(it - edge_names.begin());
}

Graph Graph::rose(int n) {
  Graph g;
  const int v = g.add_vertex("v");
  for (int i = 0; i < n; ++i) {
    g.add_edge(std::string(1, static_cast<char>('a' + i)), v, v);
  }
  return g;
}

namespace {

int dart_source(const Graph& g, int dart) {
  const int e = dart / 2;
  return (dart % 2 == 0) ? g.edge_from[e] : g.edge_to[e];
}

int dart_target(const Graph& g, int dart) {
  const int e = dart / 2;
  return (dart % 2 == 0) ? g.edge_to[e] : g.edge_from[e];
}

}  // namespace

ValidityReport validate_graph(const Graph& g) {
  ValidityReport report;
  const int nv = g.num_vertices();
  const int ne = g.num_edges();
  bool endpoints_ok = true;
  for (int e = 0; e < ne; ++e) {
    if (g.edge_from[e] < 0 || g.edge_from[e] >= nv || g.edge_to[e] < 0 || g.edge_to[e] >= nv) {
      report.flag("dangling endpoint on edge '" + g.edge_names[e] + "'");
      endpoints_ok = false;
    }
  }
  if (static_cast<int>(g.involution.size()) != 2 * ne) {
    report.flag("involution table size mismatch");
  } else {
    for (int d = 0; d < 2 * ne; ++d) {
      const int i = g.involution[d];
      if (i < 0 || i >= 2 * ne) {
        report.flag("involution maps dart out of range");
        continue;
      }
      if (i == d) {
        report.flag("involution has fixed point");
        continue;
      }
      if (g.involution[i] != d) {
        report.flag("involution is not an involution");
        continue;
      }
      if (endpoints_ok && dart_source(g, i) != dart_target(g, d)) {
        report.flag("involution breaks endpoint duality on edge '" + g.edge_names[d / 2] + "'");
      }
    }
  }
  if (nv > 0 && endpoints_ok) {
    std::vector<bool> seen(nv, false);
    std::vector<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int e = 0; e < ne; ++e) {
        for (int w : {g.edge_from[e] == v ? g.edge_to[e] : -1, g.edge_to[e] == v ? g.edge_from[e] : -1}) {
          if (w >= 0 && !seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) report.flag("disconnected");
  }
  return report;
}

int valence(const Graph& g, int vertex) {
  if (vertex < 0 || vertex >= g.num_vertices()) throw Error("valence: unknown vertex");
  int count = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.edge_from[e] == vertex) ++count;
    if (g.edge_to[e] == vertex) ++count;
  }
  return count;
}

bool endpoint_compatible(const Graph& g, const EdgePath& p) {
  for (const OrientedEdge& t : p.tokens) {
    if (t.edge < 0 || t.edge >= g.num_edges()) return false;
  }
  for (size_t k = 0; k + 1 < p.tokens.size(); ++k) {
    if (g.target_of(p.tokens[k]) != g.source_of(p.tokens[k + 1])) return false;
  }
  return true;
}

bool is_reduced_path(const EdgePath& p) {
  for (size_t k = 0; k + 1 < p.tokens.size(); ++k) {
    if (p.tokens[k + 1] == p.tokens[k].inverse()) return false;
  }
  return true;
}

EdgePath free_reduce_path(const Graph& g, const EdgePath& p) {
  if (!endpoint_compatible(g, p)) throw Error("free_reduce_path: path is not endpoint compatible");
  EdgePath out;
  out.tokens.reserve(p.tokens.size());
  for (const OrientedEdge& t : p.tokens) {
    if (!out.tokens.empty() && out.tokens.back() == t.inverse()) {
      out.tokens.pop_back();
    } else {
      out.tokens.push_back(t);
    }
  }
  return out;
}

GraphMap GraphMap::identity(const Graph& g) {
  GraphMap f;
  f.source = g;
  f.target = g;
  f.vertex_map.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) f.vertex_map[v] = v;
  f.edge_map.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) f.edge_map[e].tokens = {{e, false}};
  return f;
}

void check_map(const GraphMap& f) {
  if (static_cast<int>(f.vertex_map.size()) != f.source.num_vertices()) {
    throw Error("graph map: vertex map size mismatch");
  }
  if (static_cast<int>(f.edge_map.size()) != f.source.num_edges()) {
    throw Error("graph map: edge map size mismatch");
  }
  for (int v : f.vertex_map) {
    if (v < 0 || v >= f.target.num_vertices()) throw Error("graph map: vertex image out of range");
  }
  for (int e = 0; e < f.source.num_edges(); ++e) {
    const EdgePath& image = f.edge_map[e];
    if (image.empty()) {
      // Only a composition that collapsed can carry an empty image; it is a
      // constant map on that edge and needs matching endpoint images.
      if (f.vertex_map[f.source.edge_from[e]] != f.vertex_map[f.source.edge_to[e]]) {
        throw Error("graph map: empty image of edge '" + f.source.edge_names[e] +
                    "' does not respect endpoints");
      }
      continue;
    }
    if (!endpoint_compatible(f.target, image)) {
      throw Error("graph map: image of edge '" + f.source.edge_names[e] +
                  "' is not a path in the target");
    }
    if (f.target.source_of(image.tokens.front()) != f.vertex_map[f.source.edge_from[e]] ||
        f.target.target_of(image.tokens.back()) != f.vertex_map[f.source.edge_to[e]]) {
      throw Error("graph map: image of edge '" + f.source.edge_names[e] +
                  "' does not respect endpoints");
    }
  }
}

void require_nondegenerate(const GraphMap& f) {
  for (int e = 0; e < f.source.num_edges(); ++e) {
    if (f.edge_map[e].empty()) {
      throw Error("graph map: edge '" + f.source.edge_names[e] + "' maps to the empty path");
    }
  }
}

EdgePath apply_map(const GraphMap& f, const EdgePath& p) {
  EdgePath out;
  for (const OrientedEdge& t : p.tokens) {
    const EdgePath& image = f.edge_map[t.edge];
    if (!t.reversed) {
      out.tokens.insert(out.tokens.end(), image.tokens.begin(), image.tokens.end());
    } else {
      for (size_t k = image.tokens.size(); k-- > 0;) {
        out.tokens.push_back(image.tokens[k].inverse());
      }
    }
  }
  return out;
}

GraphMap compose_maps(const GraphMap& f, const GraphMap& g, bool reduce) {
  check_map(f);
  check_map(g);
  if (!(g.target == f.source)) throw Error("compose_maps: target(g) differs from source(f)");
  GraphMap out;
  out.source = g.source;
  out.target = f.target;
  out.vertex_map.resize(g.source.num_vertices());
  for (int v = 0; v < g.source.num_vertices(); ++v) {
    out.vertex_map[v] = f.vertex_map[g.vertex_map[v]];
  }
  out.edge_map.resize(g.source.num_edges());
  for (int e = 0; e < g.source.num_edges(); ++e) {
    EdgePath image = apply_map(f, g.edge_map[e]);
    out.edge_map[e] = reduce ? free_reduce_path(out.target, image) : std::move(image);
  }
  return out;
}

NonNegMatrix incidence_matrix(const GraphMap& f) {
  check_map(f);
  if (!f.is_endomorphism()) throw Error("incidence_matrix: map is not an endomorphism");
  for (int v = 0; v < f.source.num_vertices(); ++v) {
    if (valence(f.source, v) == 0) throw Error("incidence_matrix: graph has an isolated vertex");
  }
  const int n = f.source.num_edges();
  NonNegMatrix m;
  m.dim = n;
  m.entries.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (const OrientedEdge& t : f.edge_map[i].tokens) ++m.at(i, t.edge);
  }
  return m;
}

NonNegMatrix carrier_incidence(const GraphMap& g, const GraphMap& carrier_decl) {
  check_map(g);
  if (!carrier_decl.is_endomorphism()) {
    throw Error("carrier_incidence: declared paths must form an endomorphism of the carrier graph");
  }
  return incidence_matrix(carrier_decl);
}

}  // namespace hbg
