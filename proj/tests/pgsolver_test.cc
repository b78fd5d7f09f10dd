#include <doctest.h>

#include "pgtk/generate.hh"
#include "pgtk/pgsolver.hh"
#include "util.hh"

using namespace pgtk;

TEST_CASE("parses the two-vertex example") {
  ParityGame g = parse_pgsolver("parity 1;\n0 2 0 1;\n1 3 1 0;");
  REQUIRE(g.size() == 2);
  CHECK(g.priority(0) == 2);
  CHECK(g.owner(0) == Owner::Even);
  CHECK(g.succ(0) == std::vector<int>{1});
  CHECK(g.priority(1) == 3);
  CHECK(g.owner(1) == Owner::Odd);
  CHECK(g.succ(1) == std::vector<int>{0});
}

TEST_CASE("write then parse is the identity") {
  ParityGame g = parse_pgsolver("parity 1;\n0 2 0 1;\n1 3 1 0;");
  std::string text = write_pgsolver(g);
  std::string again = write_pgsolver(parse_pgsolver(text));
  CHECK(text == again);
}

TEST_CASE("missing header is tolerated, ids are remapped densely") {
  ParityGame g = parse_pgsolver("4 2 0 8;\n8 3 1 4 \"x\";");
  REQUIRE(g.size() == 2);
  CHECK(g.succ(0) == std::vector<int>{1});
  CHECK(g.verts[1].name == "x");
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_pgsolver("parity 1;\n0 2 0 1;\nbogus;");
    FAIL("expected a parse error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("duplicate vertex ids are rejected") {
  CHECK_THROWS(parse_pgsolver("0 2 0 0;\n0 3 1 0;"));
}

TEST_CASE("empty successor list parses and surfaces as a dead end") {
  ParityGame g = parse_pgsolver("0 2 0 ;");
  CHECK(g.size() == 1);
  CHECK(validate_game(g).size() == 1);
}

TEST_CASE("generated games round-trip byte-exactly") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ParityGame g = generate_game(3 + static_cast<int>(seed % 8), 2, 4, seed).game;
    std::string text = write_pgsolver(g);
    CHECK(write_pgsolver(parse_pgsolver(text)) == text);
  }
}
