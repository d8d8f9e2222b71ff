#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "osbc/arrangement.hpp"

namespace osbc {

struct StratumNode {
  std::string label;
  std::size_t codim = 0;
  bool irreducible = false;
  std::optional<Color> color;          // irreducible strict strata only
  std::vector<std::size_t> factors;    // irreducible factors, empty for the whole space
  std::vector<std::string> divisors;   // divisor components containing the stratum
  std::vector<std::size_t> up;         // strata covering this one
  std::vector<std::size_t> down;       // strata covered by this one
};

// abstract stratified space: node 0 is the whole space
class StratumLattice {
 public:
  StratumLattice() = default;
  explicit StratumLattice(std::vector<StratumNode> nodes);

  std::size_t size() const { return nodes_.size(); }
  const StratumNode& node(std::size_t s) const { return nodes_.at(s); }
  const std::vector<StratumNode>& nodes() const { return nodes_; }

  std::vector<bool> above(std::size_t s) const;  // strata containing s, s included
  std::vector<bool> below(std::size_t s) const;  // strata contained in s, s included
  bool inside(std::size_t small, std::size_t big) const;
  bool meets(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find_label(const std::string& label) const;

  std::optional<Color> effective_color(std::size_t s,
                                       MixedPolicy policy = MixedPolicy::Lambda) const;
  std::vector<std::size_t> irreducibles_of_codim_at_least(std::size_t c) const;

  // drop a stratum that has nothing below it
  StratumLattice without(std::size_t s) const;

  // throws on inconsistent codims or covers
  void validate() const;

 private:
  std::vector<StratumNode> nodes_;
};

StratumLattice lattice_of(const BiArrangement& b);

}  // namespace osbc
