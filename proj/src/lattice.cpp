#include "osbc/lattice.hpp"

#include <algorithm>

#include "osbc/error.hpp"

namespace osbc {

StratumLattice::StratumLattice(std::vector<StratumNode> nodes) : nodes_(std::move(nodes)) {}

std::vector<bool> StratumLattice::above(std::size_t s) const {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto t : nodes_[x].up)
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  return seen;
}

std::vector<bool> StratumLattice::below(std::size_t s) const {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto t : nodes_[x].down)
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  return seen;
}

bool StratumLattice::inside(std::size_t small, std::size_t big) const {
  return above(small)[big];
}

bool StratumLattice::meets(std::size_t a, std::size_t b) const {
  auto ba = below(a), bb = below(b);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (ba[i] && bb[i]) return true;
  return false;
}

std::optional<std::size_t> StratumLattice::find_label(const std::string& label) const {
  for (std::size_t s = 0; s < nodes_.size(); ++s)
    if (nodes_[s].label == label) return s;
  return std::nullopt;
}

std::optional<Color> StratumLattice::effective_color(std::size_t s, MixedPolicy policy) const {
  const auto& n = nodes_.at(s);
  if (n.codim == 0) return std::nullopt;
  if (n.irreducible) return n.color;
  std::optional<Color> common;
  for (auto f : n.factors) {
    auto c = nodes_[f].color;
    if (!c) return std::nullopt;
    if (common && *common != *c) return policy == MixedPolicy::Lambda ? Color::Lambda : Color::Mu;
    common = c;
  }
  return common;
}

std::vector<std::size_t> StratumLattice::irreducibles_of_codim_at_least(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < nodes_.size(); ++s)
    if (nodes_[s].irreducible && nodes_[s].codim >= c) out.push_back(s);
  return out;
}

StratumLattice StratumLattice::without(std::size_t s) const {
  if (!nodes_.at(s).down.empty()) throw Error("cannot drop a stratum with strata below it");
  auto remap = [s](std::size_t x) { return x > s ? x - 1 : x; };
  std::vector<StratumNode> out;
  for (std::size_t x = 0; x < nodes_.size(); ++x) {
    if (x == s) continue;
    StratumNode n = nodes_[x];
    std::vector<std::size_t> up, down, factors;
    for (auto t : n.up) up.push_back(remap(t));
    for (auto t : n.down)
      if (t != s) down.push_back(remap(t));
    for (auto f : n.factors) factors.push_back(remap(f));
    n.up = std::move(up);
    n.down = std::move(down);
    n.factors = std::move(factors);
    out.push_back(std::move(n));
  }
  return StratumLattice(std::move(out));
}

void StratumLattice::validate() const {
  if (nodes_.empty() || nodes_[0].codim != 0) throw Error("lattice: node 0 must be the whole space");
  for (std::size_t s = 0; s < nodes_.size(); ++s) {
    const auto& n = nodes_[s];
    if (s != 0 && n.codim == 0) throw Error("lattice: second codim-0 node");
    for (auto t : n.up) {
      if (nodes_.at(t).codim + 1 != n.codim) throw Error("lattice: cover with bad codims");
      const auto& d = nodes_[t].down;
      if (std::find(d.begin(), d.end(), s) == d.end()) throw Error("lattice: asymmetric cover");
    }
    if (n.irreducible && n.codim > 0 && !n.color) throw Error("lattice: irreducible without color");
    if (n.codim == 1 && !n.irreducible) throw Error("lattice: reducible codim-1 node");
  }
}

StratumLattice lattice_of(const BiArrangement& b) {
  const auto& p = b.poset();
  std::vector<StratumNode> nodes(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    auto& n = nodes[s];
    n.label = p.label(s);
    n.codim = p.stratum(s).codim;
    n.irreducible = p.is_irreducible(s);
    n.color = b.color(s);
    n.factors = p.factors(s);
    n.up = p.up(s);
    n.down = p.down(s);
    for (auto h : members(p.stratum(s).hyperplanes)) n.divisors.push_back(p.forms()[h].label);
    std::sort(n.divisors.begin(), n.divisors.end());
  }
  return StratumLattice(std::move(nodes));
}

}  // namespace osbc
