#ifndef HBGROWTH_GRAPH_HPP_
#define HBGROWTH_GRAPH_HPP_

#include <string>
#include <vector>

#include "hbgrowth/error.hpp"
#include "hbgrowth/matrix.hpp"

namespace hbg {

// One token of an edge path: an edge traversed in its canonical orientation
// (reversed = false) or against it. Serialized with a "~" prefix when
// reversed.
struct OrientedEdge {
  int edge = 0;
  bool reversed = false;

  OrientedEdge inverse() const { return {edge, !reversed}; }
  bool operator==(const OrientedEdge&) const = default;
};

struct EdgePath {
  std::vector<OrientedEdge> tokens;

  bool empty() const { return tokens.empty(); }
  size_t size() const { return tokens.size(); }
  bool operator==(const EdgePath&) const = default;
};

// Finite labeled graph. Each canonical edge stands for an inverse pair of
// directed darts 2e (forward) and 2e+1 (backward); the involution table is
// kept explicitly so that malformed pairings can be represented and
// reported by validate_graph. Builders always produce the standard pairing
// dart ^ 1.
struct Graph {
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;
  std::vector<int> edge_from;  // initial vertex of the canonical orientation
  std::vector<int> edge_to;    // terminal vertex
  std::vector<int> involution;  // over darts, size 2*edges

  int add_vertex(const std::string& name);
  int add_edge(const std::string& name, int from, int to);

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_edges() const { return static_cast<int>(edge_names.size()); }

  int vertex_index(const std::string& name) const;  // -1 when absent
  int edge_index(const std::string& name) const;

  int source_of(OrientedEdge t) const { return t.reversed ? edge_to[t.edge] : edge_from[t.edge]; }
  int target_of(OrientedEdge t) const { return t.reversed ? edge_from[t.edge] : edge_to[t.edge]; }

  // Rose with n loop edges "a","b",... on a single vertex "v".
  static Graph rose(int n);

  bool operator==(const Graph&) const = default;
};

ValidityReport validate_graph(const Graph& g);

// Number of edge ends incident to v; a loop contributes 2.
int valence(const Graph& g, int vertex);

bool endpoint_compatible(const Graph& g, const EdgePath& p);
bool is_reduced_path(const EdgePath& p);

// Unique reduced path with the same endpoints and homotopy class.
// Throws when p is not endpoint compatible in g.
EdgePath free_reduce_path(const Graph& g, const EdgePath& p);

// Map of graphs: vertex images plus an edge path image per canonical edge.
// The image of a reversed edge is the reversed image path, so only
// canonical images are stored.
struct GraphMap {
  Graph source;
  Graph target;
  std::vector<int> vertex_map;
  std::vector<EdgePath> edge_map;

  static GraphMap identity(const Graph& g);
  bool is_endomorphism() const { return source == target; }
};

// Throws on any violated GraphMap invariant (size mismatch, dangling
// indices, endpoint-incompatible image).
void check_map(const GraphMap& f);

// Degenerate input policy: maps supplied as data may not send an edge to
// the empty path. Reduced compositions may collapse, so this is enforced
// at input boundaries rather than inside check_map.
void require_nondegenerate(const GraphMap& f);

// Tokenwise image of a path under f, without reduction.
EdgePath apply_map(const GraphMap& f, const EdgePath& p);

// f after g. Requires target(g) == source(f). Image paths are freely
// reduced when reduce is set (the default; the unreduced variant exists
// for the exact incidence product law).
GraphMap compose_maps(const GraphMap& f, const GraphMap& g, bool reduce = true);

// m_ij = occurrences of edge j (either orientation) in the image path of
// edge i, indexed in canonical edge order. Requires an endomorphism on a
// graph without isolated vertices.
NonNegMatrix incidence_matrix(const GraphMap& f);

// Incidence counts of carrier-path declarations: carrier_decl assigns to
// each edge of the carrier graph the path its g-image traverses there
// (an endomorphism of the carrier; the geometric relation is asserted by
// the caller, g is validated for well-formedness only). Rows and columns
// follow the carrier's canonical edge order.
NonNegMatrix carrier_incidence(const GraphMap& g, const GraphMap& carrier_decl);

}  // namespace hbg

#endif  // HBGROWTH_GRAPH_HPP_
