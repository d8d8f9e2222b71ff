#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "osbc/os_algebra.hpp"

using namespace osbc;

namespace {

StratumPoset poset(const std::vector<std::vector<long>>& rows) {
  std::vector<LinearForm> forms;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Vector v;
    for (auto x : rows[k]) v.push_back(Rational(x));
    forms.push_back({v, "H" + std::to_string(k + 1), Color::Lambda});
  }
  return build_poset(forms, rows.front().size());
}

// braid arrangement x_i - x_j in the hyperplane sum x = 0, coordinates x1..x3 (x4 = -x1-x2-x3)
StratumPoset braid() {
  return poset({{1, -1, 0}, {1, 0, -1}, {2, 1, 1}, {0, 1, -1}, {1, 2, 1}, {1, 1, 2}});
}

std::vector<std::size_t> nbc_by_stratum(const StratumPoset& p, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> out(p.size(), 0);
  for (auto s : nbc_sets(p, order)) ++out[p.stratum_of(s)];
  return out;
}

}  // namespace

TEST_CASE("boundary and signs") {
  auto d = boundary(bit(0) | bit(2) | bit(5));
  REQUIRE(d.size() == 3);
  CHECK(d[0].second == 1);
  CHECK(d[1].second == -1);
  CHECK(d[2].second == 1);
  CHECK(merge_sign(bit(1), bit(0)) == -1);
  CHECK(merge_sign(bit(0), bit(1)) == 1);
}

TEST_CASE("concurrent lines: Poincare polynomial 1+3t+2t^2") {
  auto p = poset({{1, 0}, {0, 1}, {1, -1}});
  auto a = build_os_algebra(p);
  CHECK(a.dims_by_degree() == std::vector<std::size_t>{1, 3, 2});
  CHECK(a.dim(*p.origin()) == 2);
  CHECK(os_exactness_check(a, p));
  auto nbc = nbc_sets(p, {0, 1, 2});
  CHECK(std::count_if(nbc.begin(), nbc.end(), [](HyperplaneSet s) { return count(s) == 2; }) == 2);
}

TEST_CASE("OS dims match nbc counts for several orderings") {
  for (const auto& p : {poset({{1, 0}, {0, 1}, {1, -1}}), braid()}) {
    auto a = build_os_algebra(p);
    std::vector<std::size_t> order(p.forms().size());
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      auto counts = nbc_by_stratum(p, order);
      for (std::size_t s = 0; s < p.size(); ++s) CHECK(a.dim(s) == counts[s]);
      std::rotate(order.begin(), order.begin() + 1, order.end());
      std::reverse(order.begin() + 1, order.end());
    }
  }
}

TEST_CASE("braid arrangement: 1+6t+11t^2+6t^3") {
  auto p = braid();
  CHECK(p.size() == 15);
  auto a = build_os_algebra(p);
  CHECK(a.dims_by_degree() == std::vector<std::size_t>{1, 6, 11, 6});
  CHECK(os_exactness_check(a, p));
}

TEST_CASE("OS dims agree with the exterior-algebra oracle") {
  for (const auto& p : {poset({{1, 0}, {0, 1}, {1, -1}}), braid(), poset({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}})}) {
    auto oracle = testing::classical_os_oracle(p);
    auto dims = build_os_algebra(p).dims_by_degree();
    dims.resize(oracle.dims.size(), 0);
    CHECK(dims == oracle.dims);
  }
}

TEST_CASE("degenerate cases") {
  auto one = poset({{1, 0}});
  CHECK(build_os_algebra(one).dims_by_degree() == std::vector<std::size_t>{1, 1});
  CHECK(os_exactness_check(build_os_algebra(one), one));
  auto boolean = poset({{1, 0}, {0, 1}});
  CHECK(os_exactness_check(build_os_algebra(boolean), boolean));
  auto empty = build_poset({}, 2);
  auto nbc = nbc_sets(empty, {});
  REQUIRE(nbc.size() == 1);
  CHECK(nbc[0] == 0);
}
