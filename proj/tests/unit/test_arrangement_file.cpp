#include <doctest.h>

#include <fstream>
#include <sstream>

#include "osbc/arrangement_file.hpp"
#include "osbc/error.hpp"

using namespace osbc;

namespace {
std::string read(const std::string& name) {
  std::ifstream in(std::string(OSBC_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_parse_error(const std::string& text, const std::string& kind, std::size_t line, std::size_t col) {
  try {
    auto f = parse_arrangement_file(text);
    to_biarrangement(f);
    FAIL("no error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.kind() == kind);
    CHECK(e.line() == line);
    CHECK(e.column() == col);
  }
}
}  // namespace

TEST_CASE("the Z(2) file") {
  auto text = serialize_arrangement_file(file_of(multizeta_biarrangement({2})));
  auto f = parse_arrangement_file(text);
  CHECK(f.hyperplanes.size() == 6);
  CHECK(f.colors.size() == 4);
  CHECK(f.projective);
  CHECK(serialize_arrangement_file(f) == text);
  CHECK(text == read("multizeta_2.osbc"));
  auto pb = to_projective(f);
  CHECK(pb.arrangement.coloring() == multizeta_biarrangement({2}).arrangement.coloring());
}

TEST_CASE("parse errors carry positions") {
  check_parse_error("dim 3\nL a : 1 0 0\nM b : 1 2\n", "DimensionMismatch", 3, 7);
  check_parse_error("dim 2\nL a : 1 0\nM a : 0 1\n", "DuplicateLabel", 3, 3);
  check_parse_error("dim 2\nL a : 1 x\n", "SyntaxError", 2, 9);
  check_parse_error("L a : 1 0\n", "SyntaxError", 1, 1);
  check_parse_error("dim 2\nL a 1 0\n", "SyntaxError", 2, 5);
  check_parse_error("dim 2\ncolor {a,b} purple\n", "SyntaxError", 2, 13);
  check_parse_error("dim 2\norigin mu\n", "SyntaxError", 2, 1);
  check_parse_error("dim 2\nL a : 1 0\nL b : 0 1\ncolor {a,c} lambda\n", "UnknownStratum", 4, 1);
  check_parse_error("dim 2\nL a : 1 0\nL b : 0 1\nL c : 1 1\ncolor {a,b,c} lambda\n", "UnknownStratum", 5, 1);
  check_parse_error("dim 2\nL a : 1 0\nM b : 0 1\ncolor {a,b} lambda\n", "UnknownStratum", 4, 1);
}

TEST_CASE("empty hyperplane section") {
  auto f = parse_arrangement_file("dim 2\n");
  CHECK(f.hyperplanes.empty());
  auto b = to_biarrangement(f);
  CHECK(b.poset().size() == 1);
}

TEST_CASE("comments, blank lines and rationals") {
  auto f = parse_arrangement_file("# header\n\ndim 2\nL a : 1/2 -3  # trailing\nM b:0 1\n");
  REQUIRE(f.hyperplanes.size() == 2);
  CHECK(to_string(f.hyperplanes[0].coefficients[0]) == "1/2");
  CHECK(f.hyperplanes[1].side == Color::Mu);
}

TEST_CASE("round trip of the data files") {
  for (auto name : {"counterexample_1.osbc", "counterexample_2.osbc", "concurrent.osbc",
                    "concurrent_mu_origin.osbc", "multizeta_2.osbc"}) {
    auto f = parse_arrangement_file(read(name));
    auto g = parse_arrangement_file(serialize_arrangement_file(f));
    if (f.projective) {
      CHECK(to_projective(f).arrangement.coloring() == to_projective(g).arrangement.coloring());
    } else {
      auto a = to_biarrangement(f);
      auto b = to_biarrangement(g);
      CHECK(a.coloring() == b.coloring());
      CHECK(serialize_arrangement_file(file_of(a)) == serialize_arrangement_file(file_of(b)));
    }
  }
}
