#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hh"
#include "pgtk/decomp.hh"
#include "pgtk/generate.hh"
#include "pgtk/pgsolver.hh"

using namespace pgtk;
namespace fs = std::filesystem;

namespace {

struct CaptureCout {
  std::ostringstream buf;
  std::streambuf* old;
  CaptureCout() : old(std::cout.rdbuf(buf.rdbuf())) {}
  ~CaptureCout() { std::cout.rdbuf(old); }
  std::string str() const { return buf.str(); }
};

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("pgtk_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("generation is deterministic and self-consistent") {
  fs::path a = fresh_dir("gen_a"), b = fresh_dir("gen_b");
  cli::GenerateOptions o;
  o.n = 7;
  o.k = 2;
  o.d = 3;
  o.count = 3;
  o.seed = 21;
  {
    CaptureCout cap;
    o.out_dir = a.string();
    REQUIRE(cli::cmd_generate(o) == 0);
    o.out_dir = b.string();
    REQUIRE(cli::cmd_generate(o) == 0);
  }
  for (int i = 0; i < 3; ++i) {
    std::string stem = "game-" + std::to_string(21 + i);
    CHECK(slurp(a / (stem + ".pg")) == slurp(b / (stem + ".pg")));
    CHECK(slurp(a / (stem + ".td")) == slurp(b / (stem + ".td")));
    ParityGame g = parse_pgsolver(slurp(a / (stem + ".pg")));
    CHECK(validate_game(g).empty());
    DecompositionFile df = parse_decomposition(slurp(a / (stem + ".td")));
    CHECK(validate_tree_decomposition(g, df.decomposition).empty());
    CHECK(width(df.decomposition) <= 3);
  }
}

TEST_CASE("a one-vertex instance is a self-loop") {
  GeneratedInstance inst = generate_game(1, 2, 3, 5);
  CHECK(inst.game.size() == 1);
  CHECK(inst.game.succ(0) == std::vector<int>{0});
}

TEST_CASE("generated decompositions stay within the width bound") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    int n = 1 + static_cast<int>(seed % 9);
    int k = 1 + static_cast<int>(seed % 3);
    GeneratedInstance inst = generate_game(n, k, 3, seed);
    CAPTURE(seed);
    CHECK(validate_game(inst.game).empty());
    CHECK(validate_tree_decomposition(inst.game, inst.decomposition).empty());
    CHECK(width(inst.decomposition) <= k + 1);
  }
}

TEST_CASE("solve command end to end") {
  fs::path dir = fresh_dir("solve");
  spit(dir / "g.pg", "parity 1;\n0 2 0 1;\n1 1 1 0;");
  cli::SolveOptions o;
  o.game_file = (dir / "g.pg").string();
  o.start = 0;
  {
    CaptureCout cap;
    CHECK(cli::cmd_solve(o) == 0);
    CHECK(cap.str().find("Even") != std::string::npos);
  }
  o.solver = "nc";
  o.k = 0;
  {
    CaptureCout cap;
    CHECK(cli::cmd_solve(o) == 0);
    CHECK(cap.str().find("TreewidthExceeded") != std::string::npos);
  }
  o.solver = "treewidth";  // decomposition missing
  {
    CaptureCout cap;
    CHECK(cli::cmd_solve(o) == cli::kInputError);
  }
  o.solver = "zielonka";
  o.game_file = (dir / "missing.pg").string();
  {
    CaptureCout cap;
    CHECK(cli::cmd_solve(o) == cli::kInputError);
  }
}

TEST_CASE("treewidth via heuristic decomposition matches the oracle winner") {
  fs::path dir = fresh_dir("heur");
  GeneratedInstance inst = generate_game(6, 2, 3, 33);
  spit(dir / "g.pg", write_pgsolver(inst.game));
  TreeDecomposition td = build_tree_decomposition_heuristic(inst.game);
  spit(dir / "g.td", write_decomposition(td));
  cli::SolveOptions o;
  o.game_file = (dir / "g.pg").string();
  o.start = 0;
  o.json = true;
  std::string zw, tw;
  {
    CaptureCout cap;
    REQUIRE(cli::cmd_solve(o) == 0);
    zw = cap.str();
  }
  o.solver = "treewidth";
  o.decomp_file = (dir / "g.td").string();
  {
    CaptureCout cap;
    REQUIRE(cli::cmd_solve(o) == 0);
    tw = cap.str();
  }
  bool ze = zw.find("\"winner\":\"Even\"") != std::string::npos;
  bool te = tw.find("\"winner\":\"Even\"") != std::string::npos;
  CHECK(ze == te);
}

TEST_CASE("compare sweeps a corpus and keeps going past bad files") {
  fs::path dir = fresh_dir("cmp");
  cli::GenerateOptions go;
  go.n = 5;
  go.k = 2;
  go.d = 2;
  go.count = 3;
  go.seed = 50;
  go.out_dir = dir.string();
  {
    CaptureCout cap;
    REQUIRE(cli::cmd_generate(go) == 0);
  }
  cli::CompareOptions co;
  co.corpus_dir = dir.string();
  co.solvers = {"zielonka", "bruteforce", "treewidth"};
  {
    CaptureCout cap;
    CHECK(cli::cmd_compare(co) == 0);
  }
  spit(dir / "broken.pg", "not a game");
  {
    CaptureCout cap;
    CHECK(cli::cmd_compare(co) == cli::kInputError);
    CHECK(cap.str().find("error") != std::string::npos);
    CHECK(cap.str().find("game-50") != std::string::npos);  // sweep continued
  }
}

TEST_CASE("compare on an empty corpus succeeds") {
  fs::path dir = fresh_dir("empty");
  cli::CompareOptions co;
  co.corpus_dir = dir.string();
  co.solvers = {"zielonka"};
  CaptureCout cap;
  CHECK(cli::cmd_compare(co) == 0);
}

TEST_CASE("validate lists violations") {
  fs::path dir = fresh_dir("val");
  spit(dir / "ok.pg", "parity 1;\n0 2 0 1;\n1 1 1 0;");
  spit(dir / "dead.pg", "0 2 0 ;");
  cli::ValidateOptions vo;
  vo.game_file = (dir / "ok.pg").string();
  {
    CaptureCout cap;
    CHECK(cli::cmd_validate(vo) == 0);
    CHECK(cap.str().find("OK") != std::string::npos);
  }
  vo.game_file = (dir / "dead.pg").string();
  {
    CaptureCout cap;
    CHECK(cli::cmd_validate(vo) == cli::kInputError);
  }
  // Bag cover hole in the decomposition.
  spit(dir / "hole.td", "td 1 1;\nb 0 0;\n");
  vo.game_file = (dir / "ok.pg").string();
  vo.decomp_file = (dir / "hole.td").string();
  {
    CaptureCout cap;
    CHECK(cli::cmd_validate(vo) == cli::kInputError);
    CHECK(cap.str().find("decomposition") != std::string::npos);
  }
}
