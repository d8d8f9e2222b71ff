#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osbc/arrangement.hpp"
#include "osbc/lattice.hpp"
#include "osbc/linalg.hpp"

namespace osbc {

// S covered by T.  d1[i] : A^S_{i,c-i} -> A^T_{i-1,c-i} for i in [0,c] (d1[0] has no rows);
// d2[i] : A^T_{i,c-1-i} -> A^S_{i,c-i} for i in [0,c-1]; c = codim S
struct CoverMaps {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<Matrix> d1;
  std::vector<Matrix> d2;
};

class Bicomplex {
 public:
  Bicomplex() = default;
  explicit Bicomplex(StratumLattice lattice);

  const StratumLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }
  std::size_t codim(std::size_t s) const { return lattice_.node(s).codim; }

  // dim A^S_{i, codim S - i}; zero outside the range
  std::size_t dim(std::size_t s, long i) const;
  std::size_t dim_ij(std::size_t s, long i, long j) const;
  const std::vector<std::size_t>& dims(std::size_t s) const { return dims_.at(s); }
  void set_dims(std::size_t s, std::vector<std::size_t> d);

  const CoverMaps& maps(std::size_t s, std::size_t t) const;
  CoverMaps& maps(std::size_t s, std::size_t t);
  const std::vector<CoverMaps>& all_maps() const { return edges_; }
  // creates zero maps of the right shapes; dims of both ends must be set
  CoverMaps& add_cover(std::size_t s, std::size_t t);

  const Matrix& dprime(std::size_t s, std::size_t t, std::size_t i) const {
    return maps(s, t).d1.at(i);
  }
  const Matrix& ddouble(std::size_t s, std::size_t t, std::size_t i) const {
    return maps(s, t).d2.at(i);
  }

 private:
  StratumLattice lattice_;
  std::vector<std::vector<std::size_t>> dims_;
  std::vector<CoverMaps> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index_;
};

Bicomplex build_inductive(const StratumLattice& lattice, MixedPolicy policy = MixedPolicy::Lambda);
Bicomplex build_os_bicomplex(const BiArrangement& b, MixedPolicy policy = MixedPolicy::Lambda);

Bicomplex dual_bicomplex(const Bicomplex& bc);
Bicomplex kunneth_product(const Bicomplex& a, const Bicomplex& b);

struct IdentityViolation {
  std::string identity;  // "1'", "1''", "2a", "2b", "2c'", "2c''"
  std::vector<std::string> strata;
  std::size_t i = 0;
  std::string describe() const;
};

std::optional<IdentityViolation> verify_bicomplex_identities(const Bicomplex& bc);

struct SequenceWitness {
  bool row = true;       // row j for lambda strata, column i for mu strata
  std::size_t index = 0;
  std::vector<std::size_t> dims;      // from the stratum outwards
  std::vector<std::size_t> homology;  // same order
  std::string describe() const;
};

struct StratumExactness {
  std::size_t stratum = 0;
  std::string label;
  std::optional<Color> color;
  bool exact = true;
  bool derived = false;  // reducible: verdict taken from the factors
  std::optional<SequenceWitness> failure;
};

struct ExactnessReport {
  bool exact = true;
  std::vector<StratumExactness> strata;
  const StratumExactness* first_failure() const;
};

ExactnessReport check_exactness(const Bicomplex& bc);
// the local sequences of a single stratum (rows for lambda, columns for mu)
std::vector<SequenceWitness> local_sequences(const Bicomplex& bc, std::size_t s, Color c);

struct StratumTameness {
  std::size_t stratum = 0;
  std::string label;
  bool tame = true;
  std::optional<std::size_t> witness;  // hyperplane index
};

struct TamenessReport {
  bool tame = true;
  std::vector<StratumTameness> strata;
  const StratumTameness* first_failure() const;
};

TamenessReport check_tameness(const BiArrangement& b, std::size_t cap = 12);

}  // namespace osbc
