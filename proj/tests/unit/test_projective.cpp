#include <doctest.h>

#include "oracles.hpp"
#include "osbc/error.hpp"
#include "osbc/projective.hpp"

using namespace osbc;

namespace {
const auto L = Color::Lambda;
const auto M = Color::Mu;

std::vector<LinearForm> forms(const std::vector<std::vector<long>>& rows, Color side) {
  std::vector<LinearForm> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Vector v;
    for (auto x : rows[k]) v.push_back(Rational(x));
    out.push_back({v, "H" + std::to_string(k + 1), side});
  }
  return out;
}

const std::vector<std::vector<long>> generic3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

long euler(const std::vector<std::size_t>& dims) {
  long e = 0;
  for (std::size_t q = 0; q < dims.size(); ++q) e += (q % 2 ? -1 : 1) * static_cast<long>(dims[q]);
  return e;
}
}  // namespace

TEST_CASE("three generic lambda lines in the projective plane") {
  auto pb = make_projective(forms(generic3, L), {});
  CHECK(pb.n == 2);
  CHECK(pb.lambda_defined);
  auto t = weight_graded_motive(pb);
  WeightTable expected(5, std::vector<std::size_t>(3, 0));
  expected[0][0] = 1;
  expected[1][1] = 2;
  expected[2][2] = 1;
  CHECK(t == expected);
  CHECK(lambda_exact_motive(pb) == expected);
}

TEST_CASE("three generic mu lines: dual support") {
  auto pb = make_projective(forms(generic3, M), {});
  auto t = mu_exact_motive(pb);
  CHECK(t[2][0] == 1);
  CHECK(t[3][1] == 2);
  CHECK(t[4][2] == 1);
  CHECK(weight_graded_motive(pb) == t);
  CHECK_THROWS_AS(lambda_exact_motive(pb), NotLambdaExact);
}

TEST_CASE("reducible origin and well-definedness") {
  // boolean: origin splits into three lines of the same side
  auto pb = make_projective(forms(generic3, L), {});
  CHECK(pb.lambda_defined);
  CHECK(!pb.mu_defined);
  CHECK_THROWS_AS(completed(pb, M), KunnethViolation);
  CHECK_THROWS_AS(mu_exact_motive(pb), NotMuExact);
}

TEST_CASE("Kunneth violation away from the origin") {
  auto f = forms({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, L);
  auto p = build_poset(f, 3);
  auto s = p.stratum_of(bit(0) | bit(1));
  CHECK_THROWS_AS(make_projective(f, {{s, M}}), KunnethViolation);
}

TEST_CASE("truncated complexes square to zero and keep the origin out") {
  auto pb = multizeta_biarrangement({2});
  for (std::size_t k = 0; k <= pb.n; ++k) {
    auto tc = truncated_complex(pb.partial, pb.n, k);
    CHECK_NOTHROW(complex_homology(tc.dims, tc.differentials));
    for (std::size_t q = 0; q + 1 < tc.dims.size(); ++q)
      CHECK((tc.differentials[q] * (q + 1 < tc.differentials.size() ? tc.differentials[q + 1] : Matrix(tc.dims[q + 1], 0))).is_zero());
  }
}

TEST_CASE("multizeta Z(2)") {
  auto pb = multizeta_biarrangement({2});
  CHECK(pb.arrangement.forms().size() == 6);
  CHECK(!pb.deduplicated);
  CHECK(pb.lambda_defined);
  CHECK(check_tameness(completed(pb, L)).tame);
  auto t = weight_graded_motive(pb);
  CHECK(t[2] == std::vector<std::size_t>{1, 0, 1});
  for (std::size_t r = 0; r < t.size(); ++r)
    if (r != 2) CHECK(t[r] == std::vector<std::size_t>{0, 0, 0});
  CHECK(lambda_exact_motive(pb) == t);
  CHECK(testing::naive_tame_motive(pb) == t);
}

TEST_CASE("multizeta Z(3) and Z(1,2)") {
  for (auto comp : {std::vector<std::size_t>{3}, std::vector<std::size_t>{1, 2}}) {
    auto pb = multizeta_biarrangement(comp);
    CHECK(pb.n == 3);
    CHECK(pb.arrangement.forms().size() == 8);
    CHECK(check_tameness(completed(pb, L)).tame);
    auto t = weight_graded_motive(pb);
    CHECK(lambda_exact_motive(pb) == t);
    CHECK(testing::naive_tame_motive(pb) == t);
    for (std::size_t r = 0; r < t.size(); ++r)
      if (r != 3) CHECK(t[r] == std::vector<std::size_t>(4, 0));
  }
}

TEST_CASE("dual of Z(2) via the mu formula") {
  auto pb = multizeta_biarrangement({2});
  auto d = dual_projective(pb);
  REQUIRE(d.mu_defined);
  auto tl = lambda_exact_motive(pb);
  auto tm = mu_exact_motive(d);
  const std::size_t n = pb.n;
  for (std::size_t r = 0; r <= 2 * n; ++r)
    for (std::size_t k = 0; k <= n; ++k) CHECK(tm[r][k] == tl[2 * n - r][n - k]);
  CHECK(weight_graded_motive(d) == tm);
}

TEST_CASE("Euler characteristic of each rectangle") {
  for (auto comp : {std::vector<std::size_t>{2}, std::vector<std::size_t>{3}}) {
    auto pb = multizeta_biarrangement(comp);
    auto t = weight_graded_motive(pb);
    for (std::size_t k = 0; k <= pb.n; ++k) {
      auto tc = truncated_complex(pb.partial, pb.n, k);
      long chi = 0;
      for (std::size_t r = 0; r < t.size(); ++r) chi += (r % 2 ? -1 : 1) * static_cast<long>(t[r][k]);
      // H_{2k-r} at total degree t = 2k - r, same parity as r
      long rect = euler(tc.dims) * ((tc.lowest % 2 == 0) ? 1 : -1);
      CHECK(chi == rect);
    }
  }
}

TEST_CASE("invalid compositions") {
  CHECK_THROWS_AS(multizeta_biarrangement({}), InvalidComposition);
  CHECK_THROWS_AS(multizeta_biarrangement({1}), InvalidComposition);
  CHECK_THROWS_AS(multizeta_biarrangement({0, 2}), InvalidComposition);
}

TEST_CASE("non-exact projective input is refused") {
  // three concurrent lambda lines meeting in a mu point of P^2
  auto f = forms({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}}, L);
  auto p = build_poset(f, 3);
  auto pt = p.stratum_of(bit(0) | bit(1));
  auto pb = make_projective(f, {{pt, M}});
  CHECK_THROWS_AS(weight_graded_motive(pb), NotExact);
}
