#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "osbc/error.hpp"
#include "osbc/linalg.hpp"

using namespace osbc;

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/-2"));
}

TEST_CASE("rref, rank and kernel") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto k = kernel_basis(m);
  CHECK(k.dim() == 1);
  CHECK((m * k.basis().transposed()).is_zero());
  auto e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("subspace membership and coordinates") {
  auto s = Subspace::span(Matrix{{1, 1, 0}, {0, 1, 1}});
  Vector v{Rational(2), Rational(3), Rational(1)};
  CHECK(s.contains(v));
  auto x = coordinates_in_span(s, v);
  Vector back(3, Rational(0));
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < 3; ++c) back[c] += x[r] * s.basis()(r, c);
  CHECK(back == v);
  Vector w{Rational(1), Rational(0), Rational(0)};
  CHECK_THROWS_AS(coordinates_in_span(s, w), NotInSpan);
}

TEST_CASE("intersection and quotient") {
  auto a = Subspace::span(Matrix{{1, 0, 0}, {0, 1, 0}});
  auto b = Subspace::span(Matrix{{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(a, b).dim() == 1);
  auto q = quotient_structure(3, intersect(a, b));
  CHECK(q.projection.rows() == 2);
  CHECK((q.projection * q.section) == Matrix::identity(2));
}

TEST_CASE("complex homology") {
  // 0 -> Q -> Q^2 -> Q -> 0 with maps (1,1)^T and (1,-1)
  Matrix d1{{1, -1}};
  Matrix d2{{1}, {1}};
  std::vector<Matrix> maps{d1, d2};
  CHECK(complex_homology(maps) == std::vector<std::size_t>{0, 0, 0});
  std::vector<Matrix> bad{Matrix{{1, 1}}, Matrix{{1}, {1}}};
  CHECK_THROWS_AS(complex_homology(bad), NotAComplex);
  std::vector<std::size_t> dims{1, 2};
  std::vector<Matrix> wrong{Matrix{{1, 0, 0}}};
  CHECK_THROWS_AS(complex_homology(dims, wrong), DimensionError);
}

TEST_CASE("rank agrees with fraction-free elimination on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m(size(rng), size(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(entry(rng), 1 + (trial % 3));
    CHECK(rank(m) == testing::bareiss_rank(m));
  }
}

TEST_CASE("kron and stacking") {
  Matrix a{{1, 2}};
  Matrix b{{0, 1}, {1, 0}};
  auto k = Matrix::kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  CHECK(k(0, 3) == 2);
  CHECK(Matrix::vstack(a, a).rows() == 2);
  CHECK(Matrix::hstack(b, b).cols() == 4);
}
