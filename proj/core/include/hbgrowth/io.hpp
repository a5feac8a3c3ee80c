#ifndef HBGROWTH_IO_HPP_
#define HBGROWTH_IO_HPP_

#include <string>

#include <json.hpp>

#include "hbgrowth/freegroup.hpp"
#include "hbgrowth/graph.hpp"
#include "hbgrowth/matrix.hpp"
#include "hbgrowth/penner.hpp"
#include "hbgrowth/tightening.hpp"

namespace hbg::io {

using json = nlohmann::ordered_json;

// Violation of one of the versioned input schemas; `path` names the field.
struct SchemaError : std::runtime_error {
  std::string path;

  SchemaError(std::string field_path, const std::string& message)
      : std::runtime_error(field_path + ": " + message), path(std::move(field_path)) {}
};

// Parse a JSON document from disk. Malformed JSON raises
// nlohmann::json::parse_error (with byte position); a missing or
// non-string "schema" field raises SchemaError.
json load_file(const std::string& path);
std::string schema_of(const json& doc);

// graph/1
Graph graph_from_json(const json& doc);
json graph_to_json(const Graph& g);

// graphmap/1 -- either a single "graph" (endomorphism) or separate
// "source"/"target" graphs; edge images are token strings like "a ~b a".
GraphMap graphmap_from_json(const json& doc);
json graphmap_to_json(const GraphMap& f);

EdgePath parse_path(const Graph& g, const std::string& text);
std::string path_to_string(const Graph& g, const EdgePath& p);

// matrix/1
NonNegMatrix matrix_from_json(const json& doc);
json matrix_to_json(const NonNegMatrix& m);

// move/1 -- the "row" field is 1-based in files and reports.
TighteningMove move_from_json(const json& doc, int dim);
json move_to_json(const TighteningMove& move);

// penner/1, with an optional "word" member.
PennerPair penner_from_json(const json& doc);
json penner_to_json(const PennerPair& p, const TwistWord* word = nullptr);
TwistWord word_from_json(const json& word_array);
json word_to_json(const TwistWord& word);
bool has_word(const json& doc);

// arc/1
DualArc arc_from_json(const json& doc);
json arc_to_json(const DualArc& arc);

}  // namespace hbg::io

#endif  // HBGROWTH_IO_HPP_
