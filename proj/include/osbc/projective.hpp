#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "osbc/arrangement.hpp"
#include "osbc/bicomplex.hpp"

namespace osbc {

// central bi-arrangement in C^{n+1} read in P^n; the origin carries no color
struct ProjectiveBiArrangement {
  BiArrangement arrangement;
  std::size_t n = 0;
  std::size_t origin = 0;
  bool lambda_requested = true;
  bool mu_requested = true;
  bool lambda_defined = false;  // B_lambda: origin colored lambda is Kunneth-consistent
  bool mu_defined = false;
  bool deduplicated = false;    // coincident hyperplanes were merged
  Bicomplex partial;            // every stratum but the origin
};

ProjectiveBiArrangement make_projective(std::vector<LinearForm> forms,
                                        const ColorAssignment& coloring,
                                        bool origin_lambda = true, bool origin_mu = true);

// sides and colors swapped
ProjectiveBiArrangement dual_projective(const ProjectiveBiArrangement& pb);

// B_lambda / B_mu with the origin colored; throws if not well defined
BiArrangement completed(const ProjectiveBiArrangement& pb, Color origin_color);
Bicomplex completed_bicomplex(const ProjectiveBiArrangement& pb, Color origin_color);

// table[r][k] = dim gr^W_{2k} H^r, r in [0,2n], k in [0,n]
using WeightTable = std::vector<std::vector<std::size_t>>;

struct TruncatedComplex {
  std::size_t k = 0;
  long lowest = 0;                    // total degree of dims[0]
  std::vector<std::size_t> dims;      // by total degree i - j, ascending
  std::vector<Matrix> differentials;  // differentials[q] : C_{lowest+q+1} -> C_{lowest+q}
};

TruncatedComplex truncated_complex(const Bicomplex& partial, std::size_t n, std::size_t k);

WeightTable weight_graded_motive(const ProjectiveBiArrangement& pb);
WeightTable lambda_exact_motive(const ProjectiveBiArrangement& pb);
WeightTable mu_exact_motive(const ProjectiveBiArrangement& pb);

ProjectiveBiArrangement multizeta_biarrangement(const std::vector<std::size_t>& composition);

}  // namespace osbc
