#pragma once

#include <cstddef>
#include <vector>

#include "osbc/arrangement.hpp"
#include "osbc/linalg.hpp"
#include "osbc/projective.hpp"

namespace osbc::testing {

// rank by fraction-free elimination over Z
std::size_t bareiss_rank(const Matrix& m);

// classical OS algebra of the underlying arrangement from the exterior algebra:
// degree-k dims, and dims of ker(boundary: A_k -> A_{k-1})
struct ClassicalOracle {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> boundary_kernel;
};
ClassicalOracle classical_os_oracle(const StratumPoset& poset);

// weight table from the tame presentation of B_lambda, assembled naively as
// monomial-level subquotient complexes on each truncated rectangle
WeightTable naive_tame_motive(const ProjectiveBiArrangement& pb);

}  // namespace osbc::testing
