#include <doctest.h>

#include "corpus.hpp"
#include "osbc/blowup.hpp"
#include "osbc/error.hpp"

using namespace osbc;
using testing::from_rows;

namespace {
const auto L = Color::Lambda;
const auto M = Color::Mu;

AbstractStratifiedBiArrangement abs_of(const BiArrangement& b) {
  return abstractify(b, build_os_bicomplex(b));
}

BiArrangement concurrent_lambda() { return testing::constant_coloring({{1, 0}, {0, 1}, {1, -1}}, L); }

BiArrangement first_counterexample() {
  auto p = testing::poset_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}}, {L, L, L, M, M});
  ColorAssignment a;
  a[p.stratum_of(bit(0) | bit(2))] = M;
  a[p.stratum_of(bit(1) | bit(2))] = M;
  a[*p.origin()] = L;
  return BiArrangement(p, a);
}
}  // namespace

TEST_CASE("abstractify keeps the poset") {
  CHECK(abs_of(concurrent_lambda()).lattice().size() == 5);
  auto boolean = testing::constant_coloring({{1, 0}, {0, 1}}, L);
  auto a = abs_of(boolean);
  CHECK(a.lattice().size() == 4);
  CHECK(a.lattice().node(3).down.empty());
  CHECK(a.lattice().node(3).up.size() == 2);
}

TEST_CASE("blowing up the point of three concurrent lambda lines") {
  auto a = abs_of(concurrent_lambda());
  const auto& L0 = a.lattice();
  std::size_t o = L0.size() - 1;
  auto step = blow_up(a, o);
  const auto& N = step.result.lattice();
  // whole space, E, three strict lines, three points E meet line
  CHECK(N.size() == 8);
  auto e = *step.exceptional[0];
  CHECK(N.node(e).irreducible);
  CHECK(N.node(e).codim == 1);
  CHECK(N.node(e).color == L);
  for (std::size_t s = 1; s < o; ++s) {
    auto p = *step.exceptional[s];
    CHECK(N.node(p).codim == 2);
    CHECK(!N.node(p).irreducible);
    CHECK(step.result.complex.dim(p, 2) == a.complex.dim(s, 1));
    CHECK(step.result.complex.dim(p, 2) == 1);
  }
  CHECK(!step.strict[o]);
  CHECK(!verify_bicomplex_identities(step.result.complex));
  CHECK(check_exactness(step.result.complex).exact);
  CHECK(minimal_irreducibles(N).empty());
}

TEST_CASE("blow-up preconditions") {
  auto a = abs_of(concurrent_lambda());
  CHECK_THROWS_AS(blow_up(a, 1), CodimTooSmall);
  auto boolean = abs_of(testing::constant_coloring({{1, 0}, {0, 1}}, L));
  CHECK_THROWS_AS(blow_up(boolean, 3), NotIrreducible);
  auto ce = abs_of(first_counterexample());
  // a line containing an irreducible point that is not one of its factors
  auto l13 = *ce.lattice().find_label("{H1,H3,H4}");
  CHECK_THROWS_AS(blow_up(ce, l13), NotGood);
}

TEST_CASE("resolution step counts") {
  CHECK(resolve(abs_of(concurrent_lambda())).size() == 1);
  CHECK(resolve(abs_of(testing::constant_coloring({{1, 0}, {0, 1}}, L))).empty());
  auto steps = resolve(abs_of(first_counterexample()));
  CHECK(steps.size() == 3);
  for (const auto& s : steps) CHECK(!verify_bicomplex_identities(s.result.complex));
}

TEST_CASE("terminal resolution does not depend on the tie-break") {
  auto a = abs_of(first_counterexample());
  auto f = resolve(a, TieBreak::First);
  auto l = resolve(a, TieBreak::Last);
  CHECK(terminal_signature(f.back().result) == terminal_signature(l.back().result));
}
