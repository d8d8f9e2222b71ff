#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "osbc/arrangement.hpp"
#include "osbc/bicomplex.hpp"

namespace osbc {

// a circuit together with the color of the stratum it cuts out:
// lambda gives relations, mu gives co-relations
struct ColoredCircuit {
  HyperplaneSet support = 0;
  Color color = Color::Lambda;
};

std::vector<ColoredCircuit> tame_generators(const BiArrangement& b, std::size_t cap = 12);

// graded piece (S, i): monomials e_I (x) f_J^dual stored as the global set I u J
struct TamePiece {
  std::vector<HyperplaneSet> monomials;
  Subspace relations;
  Subspace annihilator;    // of the co-relations, in monomial coordinates
  QuotientMap quotient;    // annihilator coordinates -> subquotient
  std::size_t dim() const { return quotient.projection.rows(); }
};

struct TameAlgebra {
  std::vector<std::vector<TamePiece>> pieces;  // [stratum][i]
  Bicomplex complex;
};

TameAlgebra build_subquotient(const BiArrangement& b, const std::vector<ColoredCircuit>& gens);
TameAlgebra build_tame_presentation(const BiArrangement& b, std::size_t cap = 12);

struct PresentationMismatch {
  std::string stratum;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string what;
};

std::optional<PresentationMismatch> compare_presentations(const TameAlgebra& t,
                                                          const Bicomplex& bc);

}  // namespace osbc
