#include <doctest.h>

#include "corpus.hpp"
#include "osbc/arrangement.hpp"
#include "osbc/error.hpp"

using namespace osbc;
using testing::from_rows;

namespace {
const auto L = Color::Lambda;
const auto M = Color::Mu;

StratumPoset poset(const std::vector<std::vector<long>>& rows) {
  std::vector<LinearForm> forms;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Vector v;
    for (auto x : rows[k]) v.push_back(Rational(x));
    forms.push_back({v, "H" + std::to_string(k + 1), L});
  }
  return build_poset(forms, rows.front().size());
}
}  // namespace

TEST_CASE("strata of three concurrent lines") {
  auto p = poset({{1, 0}, {0, 1}, {1, -1}});
  CHECK(p.size() == 5);
  auto o = p.origin();
  REQUIRE(o);
  CHECK(p.down(*o).empty());
  CHECK(p.up(*o).size() == 3);
  CHECK(p.is_irreducible(*o));
  CHECK(decompose_irreducible(p, *o).size() == 1);
}

TEST_CASE("small posets") {
  CHECK(poset({{1, 0}}).size() == 2);
  auto b = poset({{1, 0}, {0, 1}});
  CHECK(b.size() == 4);
  CHECK(b.factors(*b.origin()).size() == 2);
  CHECK(!b.is_irreducible(*b.origin()));
  CHECK(decompose_irreducible(b, 0).empty());
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(poset({{0, 0}}), ZeroForm);
  CHECK_THROWS_AS(poset({{1, 1}, {2, 2}}), DuplicateHyperplane);
  CHECK_THROWS_AS(poset({{1, 0}, {1, 0, 0}}), DimensionError);
  std::vector<std::vector<long>> many;
  for (long k = 1; k <= 65; ++k) many.push_back({1, k});
  CHECK_THROWS_AS(poset(many), TooManyHyperplanes);
}

TEST_CASE("circuits of the example bi-arrangements") {
  auto p3 = testing::poset_of({{1, 0}, {0, 1}, {1, -1}}, {L, L, M});
  BiArrangement b(p3, {{*p3.origin(), L}});
  auto c = circuits(b);
  REQUIRE(c.size() == 1);
  CHECK(c[0].lambda_part == std::vector<std::size_t>{0, 1});
  CHECK(c[0].mu_part == std::vector<std::size_t>{0});

  auto pc = testing::poset_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}}, {L, L, L, M, M});
  BiArrangement ce(pc, {{pc.stratum_of(bit(0) | bit(2)), M}, {pc.stratum_of(bit(1) | bit(2)), M}}, true);
  auto cs = circuits(ce);
  REQUIRE(cs.size() == 3);
  // ({1,3},{1}), ({2,3},{2}), ({1,2},{1,2}) in 1-based side positions
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> got;
  for (const auto& x : cs) got.emplace_back(x.lambda_part, x.mu_part);
  CHECK(std::count(got.begin(), got.end(), std::pair{std::vector<std::size_t>{0, 2}, std::vector<std::size_t>{0}}) == 1);
  CHECK(std::count(got.begin(), got.end(), std::pair{std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{1}}) == 1);
  CHECK(std::count(got.begin(), got.end(), std::pair{std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{0, 1}}) == 1);

  auto generic = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {L, M, L}, {});
  CHECK(circuits(generic).empty());
}

TEST_CASE("circuit cap") {
  std::vector<std::vector<long>> rows;
  for (long k = 1; k <= 13; ++k) rows.push_back({1, k});
  CHECK_THROWS_AS(matroid_circuits(poset(rows), 12), CircuitCapExceeded);
}

TEST_CASE("good strata agree with a brute-force search") {
  auto p = poset({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
  for (std::size_t z = 1; z < p.size(); ++z) {
    bool brute = false;
    HyperplaneSet all = bit(p.forms().size()) - 1;
    for (std::size_t u = 0; u < p.size(); ++u) {
      auto hz = p.stratum(z).hyperplanes, hu = p.stratum(u).hyperplanes;
      if ((hz | hu) == all && (hz & hu) == 0 && p.rank_of(hz | hu) == p.stratum(z).codim + p.stratum(u).codim)
        brute = true;
    }
    bool lib = is_good_stratum(p, z);
    if (p.stratum(z).codim == 3) CHECK(lib);
    CHECK(lib == brute);
  }
}

TEST_CASE("coloring validation and extreme colorings") {
  auto p = poset({{1, 0}, {0, 1}, {1, -1}});
  Coloring c(p.size());
  for (std::size_t s = 1; s < p.size(); ++s)
    if (p.stratum(s).codim == 1) c[s] = L;
  auto v = validate_coloring(p, c);
  REQUIRE(v);
  CHECK(v->kind == ColoringViolation::Kind::MissingColor);
  CHECK(!validate_coloring(p, c, true));
  c[*p.origin()] = L;
  CHECK(!validate_coloring(p, c));

  std::vector<LinearForm> forms{{{Rational(1), Rational(0)}, "x", L}, {{Rational(0), Rational(1)}, "y", M}};
  auto q = build_poset(forms, 2);
  auto e = extreme_coloring(q, L);
  CHECK(!validate_coloring(q, e));
  CHECK(e[*q.origin()] == std::nullopt);  // reducible: no color
}

TEST_CASE("Kunneth violation on a reducible stratum") {
  std::vector<LinearForm> forms{{{Rational(1), Rational(0)}, "x", L}, {{Rational(0), Rational(1)}, "y", L}};
  auto q = build_poset(forms, 2);
  ColorAssignment a{{*q.origin(), M}};
  CHECK_THROWS_AS(BiArrangement(q, a), KunnethViolation);
  ColorAssignment ok{{*q.origin(), L}};
  CHECK_NOTHROW(BiArrangement(q, ok));
}

TEST_CASE("side mismatch on a hyperplane") {
  std::vector<LinearForm> forms{{{Rational(1), Rational(0)}, "x", L}};
  auto q = build_poset(forms, 2);
  ColorAssignment a{{1, M}};
  CHECK_THROWS_AS(BiArrangement(q, a), ColoringInvalid);
}

TEST_CASE("duality is an involution on the corpus") {
  for (const auto& b : testing::random_corpus({.seed = 11, .count = 20})) {
    auto dd = dual(dual(b));
    CHECK(dd.coloring() == b.coloring());
    for (std::size_t h = 0; h < b.forms().size(); ++h) CHECK(dd.forms()[h].side == b.forms()[h].side);
  }
}
