#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osbc/bicomplex.hpp"
#include "osbc/lattice.hpp"

namespace osbc {

struct AbstractStratifiedBiArrangement {
  Bicomplex complex;
  const StratumLattice& lattice() const { return complex.lattice(); }
};

AbstractStratifiedBiArrangement abstractify(const BiArrangement& b, const Bicomplex& bc);

// irreducible z whose every substratum splits off z as a factor
bool is_good_abstract(const StratumLattice& lattice, std::size_t z);

struct BlowupStep {
  std::string center;
  Color color = Color::Lambda;
  std::vector<std::optional<std::size_t>> strict;       // old -> strict transform
  std::vector<std::optional<std::size_t>> exceptional;  // old -> E meet strict transform
  AbstractStratifiedBiArrangement result;
};

BlowupStep blow_up(const AbstractStratifiedBiArrangement& a, std::size_t z);

std::vector<std::size_t> minimal_irreducibles(const StratumLattice& lattice);

enum class TieBreak { First, Last };
std::vector<BlowupStep> resolve(const AbstractStratifiedBiArrangement& a,
                                TieBreak tie = TieBreak::First);

// (divisor set, dims) per stratum, sorted; equal for isomorphic resolutions
std::vector<std::pair<std::vector<std::string>, std::vector<std::size_t>>> terminal_signature(
    const AbstractStratifiedBiArrangement& a);

}  // namespace osbc
