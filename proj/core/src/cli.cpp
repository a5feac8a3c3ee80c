#include "hbgrowth/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "hbgrowth/freegroup.hpp"
#include "hbgrowth/graph.hpp"
#include "hbgrowth/io.hpp"
#include "hbgrowth/penner.hpp"
#include "hbgrowth/spectral.hpp"
#include "hbgrowth/tightening.hpp"

namespace hbg::cli {

namespace {

using io::json;

constexpr const char* kToolVersion = "1.0.0";

struct CommonOptions {
  bool as_json = false;
  double tol = kDefaultTol;
  int max_iter = kDefaultMaxIter;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_flag("--json", opts->as_json, "emit a machine-readable JSON report");
  cmd->add_option("--tol", opts->tol, "eigenvalue tolerance")->capture_default_str();
  cmd->add_option("--max-iter", opts->max_iter, "power iteration cap")->capture_default_str();
}

// Human mode prints three fixed decimals.
std::string fmt3(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << x;
  return out.str();
}

std::string fmt_vector(const std::vector<double>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt3(v[i]);
  }
  return out + ")";
}

std::string fmt_delta(const std::vector<long long>& d) {
  std::string out = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

std::string fmt_matrix(const NonNegMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.dim; ++i) {
    if (i > 0) out += "; ";
    for (int j = 0; j < m.dim; ++j) {
      if (j > 0) out += " ";
      out += std::to_string(m.at(i, j));
    }
  }
  return out + "]";
}

json matrix_rows(const NonNegMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

void emit(const CommonOptions& opts, std::ostream& out, const std::string& command,
          const json& result, const std::string& human) {
  if (opts.as_json) {
    json report{{"meta", {{"tool", "hbgrowth"}, {"version", kToolVersion}}},
                {"command", command},
                {"result", result}};
    out << report.dump(2) << "\n";
  } else {
    out << human;
  }
}

// growth/irreducible/tighten/power accept either a plain matrix or a graph
// endomorphism whose incidence matrix is taken; in the latter case rows
// carry the edge names.
struct MatrixInput {
  NonNegMatrix matrix;
  std::vector<std::string> labels;  // empty for plain matrices

  std::string row_name(int i) const {
    return labels.empty() ? std::to_string(i + 1) : labels[i];
  }
};

MatrixInput load_matrix_like(const std::string& path) {
  const json doc = io::load_file(path);
  const std::string schema = io::schema_of(doc);
  if (schema == "matrix/1") return {io::matrix_from_json(doc), {}};
  if (schema == "graphmap/1") {
    const GraphMap f = io::graphmap_from_json(doc);
    return {incidence_matrix(f), f.source.edge_names};
  }
  throw io::SchemaError("schema", "expected \"matrix/1\" or \"graphmap/1\", found \"" + schema + "\"");
}

json outcome_to_json(const MoveOutcome& outcome, const MatrixInput& input) {
  json result{{"move", {{"row", outcome.move.row + 1}, {"delta", outcome.move.delta}}},
              {"gain", outcome.gain},
              {"branch", outcome.branch == MoveBranch::irreducible ? "irreducible" : "restricted"},
              {"growth_before", outcome.growth_before},
              {"growth_after", outcome.growth_after},
              {"matrix_before", matrix_rows(input.matrix)},
              {"matrix_after", matrix_rows(outcome.matrix_after)},
              {"realizability", "user-asserted"}};
  if (!input.labels.empty()) result["move"]["row_label"] = input.labels[outcome.move.row];
  if (outcome.branch == MoveBranch::restricted) {
    json indices = json::array();
    for (int i : outcome.subsystem) indices.push_back(i + 1);
    result["subsystem"] = indices;
    result["subsystem_matrix"] = matrix_rows(outcome.subsystem_matrix);
  }
  return result;
}

std::string outcome_to_human(const MoveOutcome& outcome, const MatrixInput& input) {
  std::string text;
  text += "move: row=" + input.row_name(outcome.move.row) + " delta=" +
          fmt_delta(outcome.move.delta) + "\n";
  text += "gain = " + fmt3(outcome.gain) + "\n";
  text += std::string("branch = ") +
          (outcome.branch == MoveBranch::irreducible ? "irreducible" : "restricted") + "\n";
  text += "lambda_before = " + fmt3(outcome.growth_before) + "\n";
  text += "lambda_after = " + fmt3(outcome.growth_after) + "\n";
  if (outcome.branch == MoveBranch::restricted) {
    text += "subsystem =";
    for (int i : outcome.subsystem) text += " " + input.row_name(i);
    text += "\nsubsystem_matrix = " + fmt_matrix(outcome.subsystem_matrix) + "\n";
  }
  text += "realizability: user-asserted\n";
  return text;
}

json validity_to_json(const ValidityReport& report) {
  json violations = json::array();
  for (const std::string& v : report.violations) violations.push_back(v);
  return json{{"ok", report.ok()}, {"violations", violations}};
}

int run_growth(const std::string& path, bool allow_reducible, const CommonOptions& opts,
               std::ostream& out) {
  const NonNegMatrix m = load_matrix_like(path).matrix;
  if (allow_reducible && !is_irreducible(m)) {
    const double radius = spectral_radius_reducible(m, opts.tol, opts.max_iter);
    const size_t blocks = scc_decomposition(m).components.size();
    emit(opts, out, "growth",
         json{{"lambda", radius}, {"reducible", true}, {"blocks", blocks}},
         "lambda = " + fmt3(radius) + " (reducible input, maximum over " +
             std::to_string(blocks) + " diagonal blocks)\n");
    return 0;
  }
  const PFResult pf = pf_eigen(m, opts.tol, opts.max_iter);
  emit(opts, out, "growth",
       json{{"lambda", pf.lambda},
            {"vector", pf.vector},
            {"residual", pf.residual},
            {"iterations", pf.iterations}},
       "lambda = " + fmt3(pf.lambda) + "\nvector = " + fmt_vector(pf.vector) +
           "\niterations = " + std::to_string(pf.iterations) + "\n");
  return 0;
}

int run_irreducible(const std::string& path, const CommonOptions& opts, std::ostream& out) {
  const MatrixInput input = load_matrix_like(path);
  const SCCReport scc = scc_decomposition(input.matrix);
  json components = json::array();
  std::string human = std::string("irreducible = ") + (scc.irreducible() ? "true" : "false") + "\n";
  for (size_t k = 0; k < scc.components.size(); ++k) {
    json indices = json::array();
    human += "component " + std::to_string(k + 1) + ":";
    for (int i : scc.components[k]) {
      indices.push_back(i + 1);
      human += " " + input.row_name(i);
    }
    human += "\n";
    components.push_back(indices);
  }
  emit(opts, out, "irreducible",
       json{{"irreducible", scc.irreducible()}, {"components", components}}, human);
  return 0;
}

int run_tighten(const std::string& path, const std::string& move_path, bool search,
                const std::string& catalog_name, int top, const CommonOptions& opts,
                std::ostream& out) {
  const MatrixInput input = load_matrix_like(path);
  const NonNegMatrix& m = input.matrix;
  MoveCatalog catalog;
  if (catalog_name == "swap") {
    catalog.kind = MoveCatalog::swap_even;
  } else if (catalog_name == "free") {
    catalog.kind = MoveCatalog::swap_free;
  } else {
    throw Error("tighten: unknown catalog '" + catalog_name + "'");
  }
  if (search) {
    const std::vector<MoveOutcome> ranked = search_moves(m, catalog, opts.tol, opts.max_iter);
    json list = json::array();
    std::string human;
    if (ranked.empty()) {
      human = "no tightening candidates in the catalog\n";
    } else {
      human = "candidates = " + std::to_string(ranked.size()) + ", best first:\n";
    }
    const int shown = std::min<int>(top, static_cast<int>(ranked.size()));
    for (int k = 0; k < shown; ++k) {
      list.push_back(outcome_to_json(ranked[k], input));
      human += "#" + std::to_string(k + 1) + " row=" + input.row_name(ranked[k].move.row) +
               " delta=" + fmt_delta(ranked[k].move.delta) +
               " lambda_after=" + fmt3(ranked[k].growth_after) + " gain=" + fmt3(ranked[k].gain) +
               (ranked[k].branch == MoveBranch::irreducible ? "" : " (restricted)") + "\n";
    }
    if (!ranked.empty()) human += "realizability: user-asserted\n";
    emit(opts, out, "tighten",
         json{{"catalog", catalog_name},
              {"candidates", ranked.size()},
              {"shown", shown},
              {"outcomes", list}},
         human);
    return 0;
  }
  const json move_doc = io::load_file(move_path);
  const TighteningMove move = io::move_from_json(move_doc, m.dim);
  const MoveOutcome outcome = evaluate_move(m, move, opts.tol, opts.max_iter);
  emit(opts, out, "tighten", outcome_to_json(outcome, input), outcome_to_human(outcome, input));
  return 0;
}

int run_power(const std::string& path, int n, const CommonOptions& opts, std::ostream& out) {
  const NonNegMatrix m = load_matrix_like(path).matrix;
  const PowerGrowth pg = growth_of_power(m, n, opts.tol, opts.max_iter);
  std::ostringstream reldiff;
  reldiff << std::scientific << std::setprecision(3) << pg.relative_difference;
  emit(opts, out, "power",
       json{{"n", n},
            {"lambda_of_power", pg.lambda_of_power},
            {"power_of_lambda", pg.power_of_lambda},
            {"relative_difference", pg.relative_difference}},
       "lambda(M^" + std::to_string(n) + ") = " + fmt3(pg.lambda_of_power) + "\nlambda(M)^" +
           std::to_string(n) + " = " + fmt3(pg.power_of_lambda) +
           "\nrelative difference = " + reldiff.str() + "\n");
  return 0;
}

TwistWord word_of_scenario(const json& doc) {
  if (!io::has_word(doc)) {
    throw Error("scenario carries no twist word (add a \"word\" array to the penner/1 file)");
  }
  return io::word_from_json(doc["word"]);
}

int run_penner(const std::string& path, const CommonOptions& opts, std::ostream& out) {
  const json doc = io::load_file(path);
  const PennerPair pair = io::penner_from_json(doc);
  const TwistWord word = word_of_scenario(doc);
  const PennerProduct product = penner_product(pair, word, opts.tol, opts.max_iter);
  const ValidityReport validity = validate_pair(pair);
  std::string human = "necessary checks: passed";
  human += pair.cert_fills ? "; filling asserted\n" : "; filling not asserted\n";
  human += "lambda_boundary = " + fmt3(product.growth.lambda) + "\n";
  human += "matrix = " + fmt_matrix(product.matrix) + "\n";
  emit(opts, out, "penner",
       json{{"validation", validity_to_json(validity)},
            {"filling_asserted", pair.cert_fills},
            {"lambda_boundary", product.growth.lambda},
            {"matrix", matrix_rows(product.matrix)}},
       human);
  return 0;
}

int run_boundary_pair(const std::string& path, const std::string& arc_path,
                      const CommonOptions& opts, std::ostream& out) {
  const PennerPair pair = io::penner_from_json(io::load_file(path));
  const DualArc arc = io::arc_from_json(io::load_file(arc_path));
  const BoundaryPairData result = build_boundary_pair(pair, arc);
  const ValidityReport validity = validate_pair(result.pair);
  json q = json::array(), r = json::array();
  std::string human = "Q =";
  for (size_t k = 0; k < result.pair.curves_c.size(); ++k) {
    q.push_back({{"curve", result.pair.curves_c[k]}, {"from", to_string(result.q_provenance[k])}});
    human += " " + result.pair.curves_c[k];
  }
  human += "\nR =";
  for (size_t k = 0; k < result.pair.curves_d.size(); ++k) {
    r.push_back({{"curve", result.pair.curves_d[k]}, {"from", to_string(result.r_provenance[k])}});
    human += " " + result.pair.curves_d[k];
  }
  human += "\n";
  const int n = result.pair.num_curves();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (result.pair.intersection(i, j) != 0) {
        human += "i(" + result.pair.curve_name(i) + ", " + result.pair.curve_name(j) +
                 ") = " + std::to_string(result.pair.intersection(i, j)) + "\n";
      }
    }
  }
  human += std::string("necessary checks: ") + (validity.ok() ? "passed" : "FAILED") + "\n";
  if (result.swapped_roles) human += "note: arc met the second family, roles exchanged\n";
  emit(opts, out, "boundary-pair",
       json{{"pair", io::penner_to_json(result.pair)},
            {"Q", q},
            {"R", r},
            {"swapped_roles", result.swapped_roles},
            {"validation", validity_to_json(validity)}},
       human);
  return 0;
}

int run_compare(const std::string& path, double lambda, const CommonOptions& opts,
                std::ostream& out) {
  const json doc = io::load_file(path);
  const PennerPair pair = io::penner_from_json(doc);
  const GrowthComparison cmp =
      compare_growth(lambda, pair, word_of_scenario(doc), opts.tol, opts.max_iter);
  emit(opts, out, "compare",
       json{{"lambda", cmp.lambda},
            {"lambda_boundary", cmp.lambda_boundary},
            {"consistent", cmp.consistent},
            {"message", cmp.message}},
       "lambda = " + fmt3(cmp.lambda) + "\nlambda_boundary = " + fmt3(cmp.lambda_boundary) +
           "\nverdict: " + cmp.message + "\n");
  return 0;
}

std::vector<int> tree_from_names(const Graph& g, const std::string& tree_spec) {
  std::vector<int> edges;
  std::string token;
  std::istringstream in(tree_spec);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const int e = g.edge_index(token);
    if (e < 0) throw Error("unknown tree edge '" + token + "'");
    edges.push_back(e);
  }
  return edges;
}

json endo_report(const FreeEndomorphism& endo) {
  json images = json::array();
  for (const Word& w : endo.images) images.push_back(word_to_string(w));
  const IntMatrix ab = abelianization(endo);
  json rows = json::array();
  for (int i = 0; i < ab.dim; ++i) {
    json row = json::array();
    for (int j = 0; j < ab.dim; ++j) row.push_back(ab.at(i, j));
    rows.push_back(row);
  }
  return json{{"rank", endo.rank},
              {"images", images},
              {"abelianization", rows},
              {"determinant", determinant(ab)},
              {"surjective", is_surjective(endo)}};
}

std::string endo_human(const FreeEndomorphism& endo) {
  std::string human = "rank = " + std::to_string(endo.rank) + "\n";
  for (int i = 0; i < endo.rank; ++i) {
    human += "x" + std::to_string(i + 1) + " -> " + word_to_string(endo.images[i]) + "\n";
  }
  const long long det = determinant(abelianization(endo));
  const bool onto = is_surjective(endo);
  human += "abelianization determinant = " + std::to_string(det) + "\n";
  human += std::string("surjective = ") + (onto ? "true" : "false") + "\n";
  human += std::string("automorphism = ") + (onto ? "true" : "false") +
           " (surjective endomorphisms of free groups are automorphisms)\n";
  return human;
}

int run_pi1(const std::string& path, const std::string& tree_spec, const CommonOptions& opts,
            std::ostream& out) {
  const GraphMap f = io::graphmap_from_json(io::load_file(path));
  const std::vector<int> tree =
      tree_spec.empty() ? default_spanning_tree(f.source) : tree_from_names(f.source, tree_spec);
  const FreeEndomorphism endo = induced_pi1_map(f, tree);
  json tree_names = json::array();
  std::string tree_human = "tree =";
  for (int e : tree) {
    tree_names.push_back(f.source.edge_names[e]);
    tree_human += " " + f.source.edge_names[e];
  }
  json result = endo_report(endo);
  result["tree"] = tree_names;
  emit(opts, out, "pi1", result, tree_human + "\n" + endo_human(endo));
  return 0;
}

int run_verify_auto(const std::string& path, const std::string& images_spec,
                    const std::string& tree_spec, const CommonOptions& opts, std::ostream& out) {
  FreeEndomorphism endo;
  if (!images_spec.empty()) {
    std::istringstream in(images_spec);
    std::string chunk;
    while (std::getline(in, chunk, ',')) endo.images.push_back(parse_word(chunk));
    int max_gen = 0;
    for (const Word& w : endo.images) {
      for (int letter : w.letters) max_gen = std::max(max_gen, letter > 0 ? letter : -letter);
    }
    endo.rank = static_cast<int>(endo.images.size());
    if (max_gen > endo.rank) {
      throw Error("verify-auto: images use generator x" + std::to_string(max_gen) + " but only " +
                  std::to_string(endo.rank) + " images were given");
    }
    for (Word& w : endo.images) w = reduce_word(std::move(w));
  } else if (!path.empty()) {
    const GraphMap f = io::graphmap_from_json(io::load_file(path));
    const std::vector<int> tree =
        tree_spec.empty() ? default_spanning_tree(f.source) : tree_from_names(f.source, tree_spec);
    endo = induced_pi1_map(f, tree);
  } else {
    throw Error("verify-auto: provide a graphmap file or --images");
  }
  emit(opts, out, "verify-auto", endo_report(endo), endo_human(endo));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"growth rates of handlebody automorphism data: Perron-Frobenius eigenvalues of "
               "incidence matrices, tightening moves, and Penner twist products"};
  app.name("hbgrowth");
  app.require_subcommand(1);

  CommonOptions opts;
  std::string input, move_path, arc_path, catalog = "swap", tree_spec, images_spec;
  bool search = false, allow_reducible = false;
  int power_n = 2, top = 5;
  double compare_lambda = 0.0;

  CLI::App* growth = app.add_subcommand("growth", "Perron-Frobenius growth rate of a matrix or graph map");
  growth->add_option("input", input, "matrix/1 or graphmap/1 file")->required();
  growth->add_flag("--reducible", allow_reducible, "accept reducible input and report the block maximum");
  add_common(growth, &opts);

  CLI::App* irreducible = app.add_subcommand("irreducible", "irreducibility and strongly connected components");
  irreducible->add_option("input", input, "matrix/1 or graphmap/1 file")->required();
  add_common(irreducible, &opts);

  CLI::App* tighten = app.add_subcommand("tighten", "evaluate a tightening move or search the move catalog");
  tighten->add_option("input", input, "matrix/1 or graphmap/1 file")->required();
  tighten->add_option("--move", move_path, "move/1 file to evaluate");
  tighten->add_flag("--search", search, "enumerate and rank the move catalog");
  tighten->add_option("--catalog", catalog, "candidate generator: swap|free")->capture_default_str();
  tighten->add_option("--top", top, "number of ranked outcomes to show")->capture_default_str();
  add_common(tighten, &opts);

  CLI::App* power = app.add_subcommand("power", "compare lambda(M^n) with lambda(M)^n, exact powers");
  power->add_option("input", input, "matrix/1 or graphmap/1 file")->required();
  power->add_option("-n,--exponent", power_n, "power to take")->capture_default_str();
  add_common(power, &opts);

  CLI::App* penner = app.add_subcommand("penner", "boundary dilatation of a twist word");
  penner->add_option("input", input, "penner/1 scenario file with a word")->required();
  add_common(penner, &opts);

  CLI::App* boundary = app.add_subcommand("boundary-pair", "induced pair on the product boundary from a dual arc");
  boundary->add_option("input", input, "penner/1 file")->required();
  boundary->add_option("--arc", arc_path, "arc/1 file")->required();
  add_common(boundary, &opts);

  CLI::App* compare = app.add_subcommand("compare", "compare a growth rate against the boundary dilatation");
  compare->add_option("input", input, "penner/1 scenario file with a word")->required();
  compare->add_option("--lambda", compare_lambda, "growth rate to compare")->required();
  add_common(compare, &opts);

  CLI::App* pi1 = app.add_subcommand("pi1", "endomorphism induced on the fundamental group by a graph map");
  pi1->add_option("input", input, "graphmap/1 file (endomorphism)")->required();
  pi1->add_option("--tree", tree_spec, "comma-separated spanning tree edge ids (default: greedy)");
  add_common(pi1, &opts);

  CLI::App* verify = app.add_subcommand("verify-auto", "automorphism check: Stallings folding plus abelianization");
  verify->add_option("input", input, "graphmap/1 file (optional when --images is given)");
  verify->add_option("--images", images_spec, "comma-separated generator images, e.g. \"x1 x2, x2\"");
  verify->add_option("--tree", tree_spec, "spanning tree edge ids when reading a graphmap");
  add_common(verify, &opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (growth->parsed()) return run_growth(input, allow_reducible, opts, out);
    if (irreducible->parsed()) return run_irreducible(input, opts, out);
    if (tighten->parsed()) {
      if (search != move_path.empty()) {
        throw Error("tighten: provide exactly one of --move <file> or --search");
      }
      return run_tighten(input, move_path, search, catalog, top, opts, out);
    }
    if (power->parsed()) return run_power(input, power_n, opts, out);
    if (penner->parsed()) return run_penner(input, opts, out);
    if (boundary->parsed()) return run_boundary_pair(input, arc_path, opts, out);
    if (compare->parsed()) return run_compare(input, compare_lambda, opts, out);
    if (pi1->parsed()) return run_pi1(input, tree_spec, opts, out);
    if (verify->parsed()) return run_verify_auto(input, images_spec, tree_spec, opts, out);
  } catch (const nlohmann::json::parse_error& e) {
    err << "error: malformed JSON at byte " << e.byte << ": " << e.what() << "\n";
    return 2;
  } catch (const io::SchemaError& e) {
    err << "error: schema violation: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace hbg::cli
