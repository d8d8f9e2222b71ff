#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "osbc/arrangement.hpp"
#include "osbc/linalg.hpp"

namespace osbc {

// sign of the shuffle putting the disjoint sets a, b (a first) in increasing order
int merge_sign(HyperplaneSet a, HyperplaneSet b);
// d(e_I) as (monomial, sign) pairs
std::vector<std::pair<HyperplaneSet, int>> boundary(HyperplaneSet I);

struct OSPiece {
  std::vector<HyperplaneSet> monomials;  // e_I with K_I = S
  QuotientMap quotient;                  // monomial span -> A_r^S
  std::size_t dim() const { return quotient.projection.rows(); }
};

class OSAlgebra {
 public:
  std::size_t dim(std::size_t s) const { return pieces_.at(s).dim(); }
  const OSPiece& piece(std::size_t s) const { return pieces_.at(s); }
  // d_{S,T}: A^S -> A^T for S covered by T
  const Matrix& differential(std::size_t s, std::size_t t) const { return d_.at({s, t}); }
  std::vector<std::size_t> dims_by_degree() const;
  std::size_t strata_count() const { return pieces_.size(); }

 private:
  friend OSAlgebra build_os_algebra(const StratumPoset& poset);
  std::vector<OSPiece> pieces_;
  std::vector<std::size_t> codim_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> d_;
};

OSAlgebra build_os_algebra(const StratumPoset& poset);
std::vector<HyperplaneSet> nbc_sets(const StratumPoset& poset,
                                    const std::vector<std::size_t>& order);
// total maps d_r : A_r -> A_{r-1}, strata of each degree in poset order
std::vector<Matrix> os_total_differentials(const OSAlgebra& alg, const StratumPoset& poset);
bool os_exactness_check(const OSAlgebra& alg, const StratumPoset& poset);

}  // namespace osbc
