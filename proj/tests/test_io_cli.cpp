#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hbgrowth/cli.hpp"
#include "hbgrowth/io.hpp"

using namespace hbg;

#ifndef HBGROWTH_DATA_DIR
#define HBGROWTH_DATA_DIR "data"
#endif

namespace {

std::string data_file(const std::string& name) {
  return std::string(HBGROWTH_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& contents) {
  const std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path);
  out << contents;
  return path;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("shipped files round-trip") {
  SUBCASE("matrices") {
    for (const char* name : {"paper_M.json", "paper_Mprime.json"}) {
      const io::json doc = io::load_file(data_file(name));
      const NonNegMatrix m = io::matrix_from_json(doc);
      CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    }
  }
  SUBCASE("move") {
    const io::json doc = io::load_file(data_file("paper_move.json"));
    const TighteningMove move = io::move_from_json(doc, 4);
    CHECK(move.row == 1);  // "row": 2 in the file is 1-based
    CHECK(move.delta == std::vector<long long>{-2, 0, -2, 0});
    const TighteningMove again = io::move_from_json(io::move_to_json(move), 4);
    CHECK(again.row == move.row);
    CHECK(again.delta == move.delta);
  }
  SUBCASE("penner scenarios") {
    for (const char* name : {"torus_penner.json", "chain_penner.json"}) {
      const io::json doc = io::load_file(data_file(name));
      const PennerPair pair = io::penner_from_json(doc);
      REQUIRE(io::has_word(doc));
      const TwistWord word = io::word_from_json(doc["word"]);
      const io::json serialized = io::penner_to_json(pair, &word);
      CHECK(io::penner_from_json(serialized) == pair);
      CHECK(io::word_from_json(serialized["word"]) == word);
    }
  }
  SUBCASE("arc") {
    const DualArc arc = io::arc_from_json(io::load_file(data_file("torus_arc.json")));
    CHECK(arc.gamma == "a0");
    CHECK(arc.meets == 1);
    const DualArc again = io::arc_from_json(io::arc_to_json(arc));
    CHECK(again.gamma == arc.gamma);
  }
  SUBCASE("graph map") {
    const GraphMap f = io::graphmap_from_json(io::load_file(data_file("rose2_map.json")));
    CHECK(f.source.num_edges() == 2);
    const GraphMap again = io::graphmap_from_json(io::graphmap_to_json(f));
    CHECK(again.source == f.source);
    CHECK(again.edge_map == f.edge_map);
    CHECK(again.vertex_map == f.vertex_map);
  }
}

TEST_CASE("schema violations carry field paths") {
  CHECK_THROWS_AS(io::matrix_from_json(io::json{{"entries", {{1}}}}), io::SchemaError);
  CHECK_THROWS_AS(io::matrix_from_json(io::json{{"schema", "matrix/1"}}), io::SchemaError);
  CHECK_THROWS_AS(
      io::matrix_from_json(io::json{{"schema", "matrix/1"}, {"entries", {{1, 2}, {3}}}}),
      io::SchemaError);
  CHECK_THROWS_AS(
      io::matrix_from_json(io::json{{"schema", "matrix/1"}, {"entries", {{1, -2}, {3, 1}}}}),
      io::SchemaError);
  CHECK_THROWS_AS(io::move_from_json(io::json{{"schema", "move/1"}, {"row", 0}, {"delta", {1}}}, 1),
                  io::SchemaError);
  try {
    io::matrix_from_json(io::json{{"schema", "matrix/1"}, {"entries", {{1, 2}, {3}}}});
  } catch (const io::SchemaError& e) {
    CHECK(e.path == "entries[1]");
  }
}

TEST_CASE("growth subcommand human output") {
  const RunResult r = run_cli({"growth", data_file("paper_M.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda = 4.987") == 0);
}

TEST_CASE("json reports are byte-identical across runs") {
  const RunResult a = run_cli({"growth", data_file("paper_M.json"), "--json"});
  const RunResult b = run_cli({"growth", data_file("paper_M.json"), "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const io::json report = io::json::parse(a.out);
  CHECK(report["command"] == "growth");
  CHECK(std::abs(report["result"]["lambda"].get<double>() - 4.987) < 1e-3);
  CHECK(report["meta"]["tool"] == "hbgrowth");
}

TEST_CASE("tighten subcommand") {
  const RunResult move = run_cli(
      {"tighten", data_file("paper_M.json"), "--move", data_file("paper_move.json")});
  CHECK(move.code == 0);
  CHECK(move.out.find("row=2 delta=(-2,0,-2,0)") != std::string::npos);
  CHECK(move.out.find("lambda_after = 4.542") != std::string::npos);
  CHECK(move.out.find("realizability: user-asserted") != std::string::npos);

  const RunResult search = run_cli({"tighten", data_file("paper_M.json"), "--search", "--json"});
  CHECK(search.code == 0);
  const io::json report = io::json::parse(search.out);
  CHECK(report["result"]["candidates"].get<int>() == 8);

  const RunResult both = run_cli({"tighten", data_file("paper_M.json")});
  CHECK(both.code == 4);  // neither --move nor --search
}

TEST_CASE("exit code 2 on malformed JSON") {
  const std::string bad = write_temp("hbgrowth_bad.json", "{\"schema\": \"matrix/1\", ");
  const RunResult r = run_cli({"growth", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("malformed JSON") != std::string::npos);
  CHECK(r.err.find("byte") != std::string::npos);  // position from the parser
}

TEST_CASE("exit code 3 on schema violations") {
  const std::string bad =
      write_temp("hbgrowth_schema.json", "{\"schema\": \"matrix/1\", \"entries\": [[1,2],[3]]}");
  const RunResult r = run_cli({"growth", bad});
  CHECK(r.code == 3);
  CHECK(r.err.find("schema violation") != std::string::npos);
  CHECK(r.err.find("entries[1]") != std::string::npos);

  const std::string unknown =
      write_temp("hbgrowth_unknown.json", "{\"schema\": \"nope/9\", \"entries\": []}");
  CHECK(run_cli({"growth", unknown}).code == 3);
}

TEST_CASE("exit code 4 on reducible growth names the alternative") {
  const std::string reducible = write_temp(
      "hbgrowth_reducible.json",
      "{\"schema\": \"matrix/1\", \"entries\": [[1,1,0],[0,1,1],[0,0,1]]}");
  const RunResult r = run_cli({"growth", reducible});
  CHECK(r.code == 4);
  CHECK(r.err.find("spectral_radius_reducible") != std::string::npos);

  const RunResult fallback = run_cli({"growth", reducible, "--reducible"});
  CHECK(fallback.code == 0);
  CHECK(fallback.out.find("lambda = 1.000") == 0);
}

TEST_CASE("penner and compare subcommands") {
  const RunResult penner = run_cli({"penner", data_file("torus_penner.json")});
  CHECK(penner.code == 0);
  CHECK(penner.out.find("lambda_boundary = 2.618") != std::string::npos);

  const RunResult chain = run_cli({"penner", data_file("chain_penner.json"), "--json"});
  CHECK(chain.code == 0);
  const io::json report = io::json::parse(chain.out);
  CHECK(std::abs(report["result"]["lambda_boundary"].get<double>() - 3.7320508) < 1e-6);

  const RunResult cmp =
      run_cli({"compare", data_file("torus_penner.json"), "--lambda", "2.0"});
  CHECK(cmp.code == 0);
  CHECK(cmp.out.find("consistent with tightness") != std::string::npos);

  const RunResult cmp_bad =
      run_cli({"compare", data_file("torus_penner.json"), "--lambda", "3.0"});
  CHECK(cmp_bad.code == 0);  // inconsistent is still a successful report
  CHECK(cmp_bad.out.find("inconsistent") != std::string::npos);
}

TEST_CASE("boundary-pair subcommand") {
  const RunResult r = run_cli({"boundary-pair", data_file("torus_penner.json"), "--arc",
                               data_file("torus_arc.json"), "--json"});
  CHECK(r.code == 0);
  const io::json report = io::json::parse(r.out);
  CHECK(report["result"]["Q"].size() == 3);
  CHECK(report["result"]["R"].size() == 2);
  CHECK(report["result"]["validation"]["ok"] == true);
  // the emitted pair is itself a valid penner/1 document
  CHECK(io::penner_from_json(report["result"]["pair"]).num_curves() == 5);
}

TEST_CASE("pi1 and verify-auto subcommands") {
  const RunResult pi1 = run_cli({"pi1", data_file("rose2_map.json")});
  CHECK(pi1.code == 0);
  CHECK(pi1.out.find("x1 -> x1 x2") != std::string::npos);
  CHECK(pi1.out.find("surjective = true") != std::string::npos);

  const RunResult direct = run_cli({"verify-auto", "--images", "x1 x2, x2"});
  CHECK(direct.code == 0);
  CHECK(direct.out.find("automorphism = true") != std::string::npos);

  const RunResult squares = run_cli({"verify-auto", "--images", "x1 x1, x2"});
  CHECK(squares.code == 0);
  CHECK(squares.out.find("surjective = false") != std::string::npos);
  CHECK(squares.out.find("determinant = 2") != std::string::npos);

  const RunResult map_based = run_cli({"verify-auto", data_file("rose2_map.json")});
  CHECK(map_based.code == 0);
  CHECK(map_based.out.find("automorphism = true") != std::string::npos);

  const RunResult missing = run_cli({"verify-auto"});
  CHECK(missing.code == 4);
}

TEST_CASE("graphmap input feeds the matrix subcommands") {
  const RunResult r = run_cli({"growth", data_file("rose2_map.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda = 2.618") == 0);  // incidence [[1,1],[1,2]]

  const RunResult irr = run_cli({"irreducible", data_file("rose2_map.json")});
  CHECK(irr.code == 0);
  CHECK(irr.out.find("irreducible = true") == 0);
  CHECK(irr.out.find("component 1: a b") != std::string::npos);  // edge-name labels

  // graphmap rows are labeled by edge name in move reports
  const std::string move = write_temp("hbgrowth_rose_move.json",
                                      "{\"schema\": \"move/1\", \"row\": 2, \"delta\": [0, -1]}");
  const RunResult tight = run_cli({"tighten", data_file("rose2_map.json"), "--move", move});
  CHECK(tight.code == 0);
  CHECK(tight.out.find("move: row=b") != std::string::npos);
}

}  // TEST_SUITE
