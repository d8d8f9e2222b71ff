#include <algorithm>
#include <unordered_map>

#include "osbc/bicomplex.hpp"
#include "osbc/error.hpp"

namespace osbc {

std::string SequenceWitness::describe() const {
  std::string s = (row ? "row j=" : "column i=") + std::to_string(index) + ": 0";
  for (auto d : dims) s += (row ? " -> " : " <- ") + (d == 0 ? std::string("0") : "Q^" + std::to_string(d));
  s += row ? " -> 0" : " <- 0";
  s += "; homology";
  for (auto h : homology) s += " " + std::to_string(h);
  return s;
}

const StratumExactness* ExactnessReport::first_failure() const {
  for (const auto& s : strata)
    if (!s.exact && !s.derived) return &s;
  for (const auto& s : strata)
    if (!s.exact) return &s;
  return nullptr;
}

const StratumTameness* TamenessReport::first_failure() const {
  for (const auto& s : strata)
    if (!s.tame) return &s;
  return nullptr;
}

std::vector<SequenceWitness> local_sequences(const Bicomplex& bc, std::size_t sigma, Color color) {
  const auto& L = bc.lattice();
  const std::size_t c = bc.codim(sigma);
  auto above = L.above(sigma);
  std::vector<std::vector<std::size_t>> by_codim(c + 1);
  for (std::size_t s = 0; s < bc.size(); ++s)
    if (above[s]) by_codim[bc.codim(s)].push_back(s);

  auto offsets = [&](std::size_t cd, std::size_t i) {
    std::unordered_map<std::size_t, std::size_t> off;
    std::size_t total = 0;
    for (auto s : by_codim[cd]) {
      off[s] = total;
      total += bc.dim(s, static_cast<long>(i));
    }
    return std::pair{off, total};
  };

  std::vector<SequenceWitness> out;
  if (color == Color::Lambda) {
    for (std::size_t j = 0; j <= c; ++j) {
      // positions i = 0 .. c-j, C_i in codim i+j, maps C_{i+1} -> C_i by d'
      std::vector<std::size_t> dims;
      std::vector<Matrix> maps;
      for (std::size_t i = 0; i + j <= c; ++i) dims.push_back(offsets(i + j, i).second);
      for (std::size_t i = 0; i + 1 + j <= c; ++i) {
        auto [src, ns] = offsets(i + 1 + j, i + 1);
        auto [dst, nt] = offsets(i + j, i);
        Matrix d(nt, ns);
        for (auto s : by_codim[i + 1 + j])
          for (auto t : L.node(s).up)
            if (above[t]) d.set_block(dst[t], src[s], bc.dprime(s, t, i + 1));
        maps.push_back(std::move(d));
      }
      auto h = complex_homology(dims, maps);
      std::reverse(dims.begin(), dims.end());
      std::reverse(h.begin(), h.end());
      out.push_back(SequenceWitness{true, j, dims, h});
    }
  } else {
    for (std::size_t i = 0; i <= c; ++i) {
      // C_k sits at j = c-i-k; maps C_{k+1} -> C_k by d''
      const std::size_t top = c - i;
      std::vector<std::size_t> dims;
      std::vector<Matrix> maps;
      for (std::size_t k = 0; k <= top; ++k) dims.push_back(offsets(i + top - k, i).second);
      for (std::size_t k = 0; k < top; ++k) {
        auto [src, ns] = offsets(i + top - k - 1, i);
        auto [dst, nt] = offsets(i + top - k, i);
        Matrix d(nt, ns);
        for (auto s : by_codim[i + top - k])
          for (auto t : L.node(s).up)
            if (above[t]) d.set_block(dst[s], src[t], bc.ddouble(s, t, i));
        maps.push_back(std::move(d));
      }
      auto h = complex_homology(dims, maps);
      out.push_back(SequenceWitness{false, i, dims, h});
    }
  }
  return out;
}

ExactnessReport check_exactness(const Bicomplex& bc) {
  const auto& L = bc.lattice();
  ExactnessReport rep;
  std::vector<int> verdict(bc.size(), -1);
  for (std::size_t s = 1; s < bc.size(); ++s) {
    const auto& n = L.node(s);
    if (!n.irreducible) continue;
    StratumExactness e;
    e.stratum = s;
    e.label = n.label;
    e.color = n.color;
    if (!n.color) throw ColoringInvalid(n.label + " has no color");
    for (auto& w : local_sequences(bc, s, *n.color)) {
      bool ok = std::all_of(w.homology.begin(), w.homology.end(), [](std::size_t x) { return x == 0; });
      if (!ok) {
        e.exact = false;
        e.failure = w;
        break;
      }
    }
    verdict[s] = e.exact;
    rep.strata.push_back(std::move(e));
  }
  for (std::size_t s = 1; s < bc.size(); ++s) {
    const auto& n = L.node(s);
    if (n.irreducible) continue;
    StratumExactness e;
    e.stratum = s;
    e.label = n.label;
    e.derived = true;
    e.color = L.effective_color(s);
    for (auto f : n.factors)
      if (verdict.at(f) == 0) e.exact = false;
    rep.strata.push_back(std::move(e));
  }
  std::sort(rep.strata.begin(), rep.strata.end(),
            [](const StratumExactness& a, const StratumExactness& b) { return a.stratum < b.stratum; });
  rep.exact = std::all_of(rep.strata.begin(), rep.strata.end(),
                          [](const StratumExactness& e) { return e.exact; });
  return rep;
}

TamenessReport check_tameness(const BiArrangement& b, std::size_t cap) {
  const auto& p = b.poset();
  auto cs = matroid_circuits(p, cap);
  TamenessReport rep;
  for (std::size_t s = 1; s < p.size(); ++s) {
    if (!p.is_irreducible(s)) continue;
    auto color = b.color(s);
    if (!color) continue;  // uncolored origin of a projective arrangement
    StratumTameness t;
    t.stratum = s;
    t.label = p.label(s);
    HyperplaneSet hs = p.stratum(s).hyperplanes;
    // hyperplanes in circuits through s whose stratum has the opposite color
    HyperplaneSet blocked = 0;
    for (auto c : cs) {
      if (!is_subset(c, hs)) continue;
      auto cstratum = p.stratum_of(c);
      auto cc = b.color(cstratum);
      if (cc && *cc != *color) blocked |= c;
    }
    t.tame = false;
    for (auto h : members(hs))
      if (p.forms()[h].side == *color && !(blocked & bit(h))) {
        t.tame = true;
        t.witness = h;
        break;
      }
    if (p.stratum(s).codim == 1) t.tame = true;
    rep.strata.push_back(std::move(t));
  }
  rep.tame = std::all_of(rep.strata.begin(), rep.strata.end(),
                         [](const StratumTameness& t) { return t.tame; });
  return rep;
}

}  // namespace osbc
