#include "hbgrowth/io.hpp"

#include <fstream>
#include <sstream>

namespace hbg::io {

namespace {

const json& require(const json& doc, const std::string& key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(where + key, "missing required field");
  return *it;
}

void require_schema(const json& doc, const std::string& expected) {
  if (schema_of(doc) != expected) {
    throw SchemaError("schema", "expected \"" + expected + "\", found \"" + schema_of(doc) + "\"");
  }
}

std::string require_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw SchemaError(where, "expected a string");
  return value.get<std::string>();
}

long long require_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw SchemaError(where, "expected an integer");
  return value.get<long long>();
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  return json::parse(in);  // json::parse_error carries the byte position
}

std::string schema_of(const json& doc) {
  if (!doc.is_object()) throw SchemaError("(document)", "top level must be an object");
  auto it = doc.find("schema");
  if (it == doc.end() || !it->is_string()) {
    throw SchemaError("schema", "missing required schema version field");
  }
  return it->get<std::string>();
}

Graph graph_from_json(const json& doc) {
  require_schema(doc, "graph/1");
  Graph g;
  const json& vertices = require(doc, "vertices", "");
  if (!vertices.is_array()) throw SchemaError("vertices", "expected an array");
  for (size_t k = 0; k < vertices.size(); ++k) {
    g.add_vertex(require_string(vertices[k], "vertices[" + std::to_string(k) + "]"));
  }
  const json& edges = require(doc, "edges", "");
  if (!edges.is_array()) throw SchemaError("edges", "expected an array");
  for (size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "].";
    const json& e = edges[k];
    if (!e.is_object()) throw SchemaError("edges[" + std::to_string(k) + "]", "expected an object");
    const std::string id = require_string(require(e, "id", where), where + "id");
    const std::string from = require_string(require(e, "from", where), where + "from");
    const std::string to = require_string(require(e, "to", where), where + "to");
    const int vf = g.vertex_index(from);
    const int vt = g.vertex_index(to);
    if (vf < 0) throw SchemaError(where + "from", "unknown vertex '" + from + "'");
    if (vt < 0) throw SchemaError(where + "to", "unknown vertex '" + to + "'");
    g.add_edge(id, vf, vt);
  }
  return g;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    edges.push_back({{"id", g.edge_names[e]},
                     {"from", g.vertex_names[g.edge_from[e]]},
                     {"to", g.vertex_names[g.edge_to[e]]}});
  }
  return json{{"schema", "graph/1"}, {"vertices", g.vertex_names}, {"edges", edges}};
}

EdgePath parse_path(const Graph& g, const std::string& text) {
  EdgePath path;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    OrientedEdge t;
    if (!token.empty() && token[0] == '~') {
      t.reversed = true;
      token.erase(0, 1);
    }
    t.edge = g.edge_index(token);
    if (t.edge < 0) throw Error("unknown edge '" + token + "' in path");
    path.tokens.push_back(t);
  }
  return path;
}

std::string path_to_string(const Graph& g, const EdgePath& p) {
  std::string out;
  for (const OrientedEdge& t : p.tokens) {
    if (!out.empty()) out += ' ';
    if (t.reversed) out += '~';
    out += g.edge_names[t.edge];
  }
  return out;
}

namespace {

Graph graph_body_from_json(const json& body, const std::string& where) {
  json wrapped = body;
  wrapped["schema"] = "graph/1";
  try {
    return graph_from_json(wrapped);
  } catch (const SchemaError& e) {
    throw SchemaError(where + e.path, e.what());
  }
}

}  // namespace

GraphMap graphmap_from_json(const json& doc) {
  require_schema(doc, "graphmap/1");
  GraphMap f;
  if (doc.contains("graph")) {
    f.source = graph_body_from_json(doc["graph"], "graph.");
    f.target = f.source;
  } else {
    f.source = graph_body_from_json(require(doc, "source", ""), "source.");
    f.target = graph_body_from_json(require(doc, "target", ""), "target.");
  }
  const json& vmap = require(doc, "vertex_map", "");
  if (!vmap.is_object()) throw SchemaError("vertex_map", "expected an object");
  f.vertex_map.assign(f.source.num_vertices(), -1);
  for (const auto& [name, image] : vmap.items()) {
    const int v = f.source.vertex_index(name);
    if (v < 0) throw SchemaError("vertex_map." + name, "unknown vertex");
    const int w = f.target.vertex_index(require_string(image, "vertex_map." + name));
    if (w < 0) throw SchemaError("vertex_map." + name, "unknown image vertex");
    f.vertex_map[v] = w;
  }
  for (int v = 0; v < f.source.num_vertices(); ++v) {
    if (f.vertex_map[v] < 0) {
      throw SchemaError("vertex_map", "no image for vertex '" + f.source.vertex_names[v] + "'");
    }
  }
  const json& emap = require(doc, "edge_map", "");
  if (!emap.is_object()) throw SchemaError("edge_map", "expected an object");
  f.edge_map.assign(f.source.num_edges(), EdgePath{});
  std::vector<bool> assigned(f.source.num_edges(), false);
  for (const auto& [name, image] : emap.items()) {
    const int e = f.source.edge_index(name);
    if (e < 0) throw SchemaError("edge_map." + name, "unknown edge");
    try {
      f.edge_map[e] = parse_path(f.target, require_string(image, "edge_map." + name));
    } catch (const Error& err) {
      throw SchemaError("edge_map." + name, err.what());
    }
    assigned[e] = true;
  }
  for (int e = 0; e < f.source.num_edges(); ++e) {
    if (!assigned[e]) {
      throw SchemaError("edge_map", "no image for edge '" + f.source.edge_names[e] + "'");
    }
  }
  try {
    check_map(f);
    require_nondegenerate(f);
  } catch (const Error& err) {
    throw SchemaError("edge_map", err.what());
  }
  return f;
}

json graphmap_to_json(const GraphMap& f) {
  json doc{{"schema", "graphmap/1"}};
  json source = graph_to_json(f.source);
  source.erase("schema");
  if (f.source == f.target) {
    doc["graph"] = source;
  } else {
    json target = graph_to_json(f.target);
    target.erase("schema");
    doc["source"] = source;
    doc["target"] = target;
  }
  json vmap = json::object();
  for (int v = 0; v < f.source.num_vertices(); ++v) {
    vmap[f.source.vertex_names[v]] = f.target.vertex_names[f.vertex_map[v]];
  }
  doc["vertex_map"] = vmap;
  json emap = json::object();
  for (int e = 0; e < f.source.num_edges(); ++e) {
    emap[f.source.edge_names[e]] = path_to_string(f.target, f.edge_map[e]);
  }
  doc["edge_map"] = emap;
  return doc;
}

NonNegMatrix matrix_from_json(const json& doc) {
  require_schema(doc, "matrix/1");
  const json& rows = require(doc, "entries", "");
  if (!rows.is_array() || rows.empty()) throw SchemaError("entries", "expected a nonempty array");
  const int n = static_cast<int>(rows.size());
  NonNegMatrix m;
  m.dim = n;
  m.entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
      throw SchemaError(where, "expected a row of length " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const long long x = require_int(rows[i][j], where + "[" + std::to_string(j) + "]");
      if (x < 0) throw SchemaError(where + "[" + std::to_string(j) + "]", "entry must be nonnegative");
      m.entries.push_back(x);
    }
  }
  return m;
}

json matrix_to_json(const NonNegMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return json{{"schema", "matrix/1"}, {"entries", rows}};
}

TighteningMove move_from_json(const json& doc, int dim) {
  require_schema(doc, "move/1");
  TighteningMove move;
  const long long row = require_int(require(doc, "row", ""), "row");
  if (row < 1 || (dim > 0 && row > dim)) throw SchemaError("row", "row index out of range (1-based)");
  move.row = static_cast<int>(row - 1);
  const json& delta = require(doc, "delta", "");
  if (!delta.is_array()) throw SchemaError("delta", "expected an array");
  if (dim > 0 && static_cast<int>(delta.size()) != dim) {
    throw SchemaError("delta", "expected " + std::to_string(dim) + " entries");
  }
  for (size_t j = 0; j < delta.size(); ++j) {
    move.delta.push_back(require_int(delta[j], "delta[" + std::to_string(j) + "]"));
  }
  return move;
}

json move_to_json(const TighteningMove& move) {
  return json{{"schema", "move/1"}, {"row", move.row + 1}, {"delta", move.delta}};
}

TwistWord word_from_json(const json& word_array) {
  if (!word_array.is_array()) throw SchemaError("word", "expected an array");
  TwistWord word;
  for (size_t k = 0; k < word_array.size(); ++k) {
    const std::string where = "word[" + std::to_string(k) + "]";
    const json& item = word_array[k];
    if (!item.is_object()) throw SchemaError(where, "expected an object {curve, sign}");
    TwistLetter letter;
    letter.curve = require_string(require(item, "curve", where + "."), where + ".curve");
    const std::string sign = require_string(require(item, "sign", where + "."), where + ".sign");
    if (sign == "+") {
      letter.sign = +1;
    } else if (sign == "-") {
      letter.sign = -1;
    } else {
      throw SchemaError(where + ".sign", "expected \"+\" or \"-\"");
    }
    word.push_back(letter);
  }
  return word;
}

json word_to_json(const TwistWord& word) {
  json out = json::array();
  for (const TwistLetter& letter : word) {
    out.push_back({{"curve", letter.curve}, {"sign", letter.sign > 0 ? "+" : "-"}});
  }
  return out;
}

bool has_word(const json& doc) { return doc.contains("word"); }

PennerPair penner_from_json(const json& doc) {
  require_schema(doc, "penner/1");
  PennerPair p;
  p.surface.genus = static_cast<int>(require_int(require(doc, "genus", ""), "genus"));
  p.surface.boundary_components =
      static_cast<int>(require_int(require(doc, "boundary", ""), "boundary"));
  for (const char* family : {"C", "D"}) {
    const json& list = require(doc, family, "");
    if (!list.is_array()) throw SchemaError(family, "expected an array of curve ids");
    for (size_t k = 0; k < list.size(); ++k) {
      const std::string id = require_string(list[k], std::string(family) + "[" + std::to_string(k) + "]");
      (family[0] == 'C' ? p.curves_c : p.curves_d).push_back(id);
    }
  }
  const int n = p.num_curves();
  p.inter.assign(static_cast<size_t>(n) * n, 0);
  const json& inter = require(doc, "intersections", "");
  if (!inter.is_array()) throw SchemaError("intersections", "expected an array of [id, id, count]");
  for (size_t k = 0; k < inter.size(); ++k) {
    const std::string where = "intersections[" + std::to_string(k) + "]";
    const json& item = inter[k];
    if (!item.is_array() || item.size() != 3) throw SchemaError(where, "expected [id, id, count]");
    const int a = p.curve_index(require_string(item[0], where + "[0]"));
    const int b = p.curve_index(require_string(item[1], where + "[1]"));
    if (a < 0) throw SchemaError(where + "[0]", "unknown curve");
    if (b < 0) throw SchemaError(where + "[1]", "unknown curve");
    const long long count = require_int(item[2], where + "[2]");
    if (count < 0) throw SchemaError(where + "[2]", "count must be nonnegative");
    p.intersection_ref(a, b) = count;
    p.intersection_ref(b, a) = count;
  }
  if (doc.contains("certificates")) {
    const json& certs = doc["certificates"];
    if (!certs.is_object()) throw SchemaError("certificates", "expected an object");
    p.cert_no_parallel = certs.value("no_parallel", false);
    p.cert_fills = certs.value("fills", false);
  }
  return p;
}

json penner_to_json(const PennerPair& p, const TwistWord* word) {
  json inter = json::array();
  const int n = p.num_curves();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.intersection(i, j) != 0) {
        inter.push_back({p.curve_name(i), p.curve_name(j), p.intersection(i, j)});
      }
    }
  }
  json doc{{"schema", "penner/1"},
           {"genus", p.surface.genus},
           {"boundary", p.surface.boundary_components},
           {"C", p.curves_c},
           {"D", p.curves_d},
           {"intersections", inter},
           {"certificates", {{"no_parallel", p.cert_no_parallel}, {"fills", p.cert_fills}}}};
  if (word != nullptr) doc["word"] = word_to_json(*word);
  return doc;
}

DualArc arc_from_json(const json& doc) {
  require_schema(doc, "arc/1");
  DualArc arc;
  arc.gamma = require_string(require(doc, "gamma", ""), "gamma");
  arc.meets = static_cast<int>(require_int(require(doc, "meets", ""), "meets"));
  return arc;
}

json arc_to_json(const DualArc& arc) {
  return json{{"schema", "arc/1"}, {"gamma", arc.gamma}, {"meets", arc.meets}};
}

}  // namespace hbg::io
