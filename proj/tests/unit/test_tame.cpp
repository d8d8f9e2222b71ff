#include <doctest.h>

#include "corpus.hpp"
#include "osbc/error.hpp"
#include "osbc/tame.hpp"

using namespace osbc;
using testing::from_rows;

namespace {
const auto L = Color::Lambda;
const auto M = Color::Mu;
}  // namespace

TEST_CASE("tame presentation of the two-lambda-lines example") {
  auto p = testing::poset_of({{1, 0}, {0, 1}, {1, -1}}, {L, L, M});
  BiArrangement b(p, {{*p.origin(), L}});
  auto t = build_tame_presentation(b);
  auto bc = build_os_bicomplex(b);
  CHECK(!compare_presentations(t, bc));
  CHECK(!verify_bicomplex_identities(t.complex));
  auto o = *p.origin();
  // relation (e2 - e1) f1 = 0 kills one of the two monomials in A_{1,1}
  CHECK(t.pieces[o][1].monomials.size() == 2);
  CHECK(t.pieces[o][1].dim() == 1);
  CHECK(t.pieces[o][2].dim() == 1);
}

TEST_CASE("tame corpus members agree with the inductive builder") {
  for (const auto& b : testing::random_corpus({.seed = 21, .count = 20, .tame_only = true})) {
    auto t = build_tame_presentation(b);
    auto m = compare_presentations(t, build_os_bicomplex(b));
    CHECK_MESSAGE(!m, (m ? m->stratum + " " + m->what : ""));
  }
}

TEST_CASE("extreme colorings are tame and match") {
  for (const auto& b : testing::random_corpus({.seed = 4, .count = 10})) {
    for (auto side : {L, M}) {
      auto e = BiArrangement::with_coloring(b.poset(), extreme_coloring(b.poset(), side));
      CHECK(check_tameness(e).tame);
      CHECK(!compare_presentations(build_tame_presentation(e), build_os_bicomplex(e)));
    }
  }
}

TEST_CASE("dropping a generator is detected") {
  auto p = testing::poset_of({{1, 0}, {0, 1}, {1, -1}}, {L, L, M});
  BiArrangement b(p, {{*p.origin(), L}});
  auto gens = tame_generators(b);
  REQUIRE(gens.size() == 1);
  auto t = build_subquotient(b, {});
  CHECK(compare_presentations(t, build_os_bicomplex(b)));
}

TEST_CASE("non-tame input is refused") {
  auto p = testing::constant_coloring({{1, 0}, {0, 1}, {1, -1}}, L).poset();
  BiArrangement b(p, {{*p.origin(), M}});
  CHECK_THROWS_AS(build_tame_presentation(b), NotTame);
}
