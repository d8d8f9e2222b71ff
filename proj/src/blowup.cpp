#include "osbc/blowup.hpp"

#include <algorithm>
#include <tuple>

#include "osbc/error.hpp"

namespace osbc {

AbstractStratifiedBiArrangement abstractify(const BiArrangement& b, const Bicomplex& bc) {
  if (bc.size() != b.poset().size()) throw Error("abstractify: bi-complex does not match");
  auto lat = lattice_of(b);
  lat.validate();
  Bicomplex out(lat);
  for (std::size_t s = 0; s < bc.size(); ++s) out.set_dims(s, bc.dims(s));
  for (const auto& e : bc.all_maps()) {
    auto& m = out.add_cover(e.lower, e.upper);
    m.d1 = e.d1;
    m.d2 = e.d2;
  }
  return {std::move(out)};
}

bool is_good_abstract(const StratumLattice& L, std::size_t z) {
  if (!L.node(z).irreducible) return false;
  auto inside_z = L.below(z);
  for (std::size_t w = 0; w < L.size(); ++w) {
    if (!inside_z[w] || w == z) continue;
    const auto& f = L.node(w).factors;
    if (std::find(f.begin(), f.end(), z) == f.end()) return false;
  }
  return true;
}

BlowupStep blow_up(const AbstractStratifiedBiArrangement& a, std::size_t z) {
  const auto& L = a.lattice();
  const auto& bc = a.complex;
  const auto& zn = L.node(z);
  if (zn.codim < 2) throw CodimTooSmall(zn.label);
  if (!zn.irreducible) throw NotIrreducible(zn.label);
  if (!is_good_abstract(L, z)) throw NotGood(zn.label);
  const Color chi = *zn.color;

  auto inside_z = L.below(z);
  // (codim, old index, exceptional)
  std::vector<std::tuple<std::size_t, std::size_t, bool>> entries;
  for (std::size_t s = 0; s < L.size(); ++s) {
    if (inside_z[s]) continue;
    entries.emplace_back(L.node(s).codim, s, false);
    if (L.meets(s, z)) entries.emplace_back(L.node(s).codim + 1, s, true);
  }
  std::sort(entries.begin(), entries.end());

  BlowupStep step;
  step.center = zn.label;
  step.color = chi;
  step.strict.assign(L.size(), std::nullopt);
  step.exceptional.assign(L.size(), std::nullopt);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto [cd, s, ex] = entries[k];
    (ex ? step.exceptional : step.strict)[s] = k;
  }

  const std::string ename = "E" + zn.label;
  std::vector<StratumNode> nodes(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto [cd, s, ex] = entries[k];
    const auto& old = L.node(s);
    auto& n = nodes[k];
    n.codim = cd;
    n.divisors = old.divisors;
    for (auto f : old.factors) n.factors.push_back(*step.strict[f]);
    for (auto t : old.up) {
      n.up.push_back(*(ex ? step.exceptional : step.strict)[t]);
      nodes[*(ex ? step.exceptional : step.strict)[t]].down.push_back(k);
    }
    if (!ex) {
      n.label = old.label;
      n.irreducible = old.irreducible;
      n.color = old.color;
    } else {
      n.label = s == 0 ? ename : ename + "&" + old.label;
      n.irreducible = s == 0;
      if (s == 0) n.color = chi;
      n.divisors.push_back(ename);
      std::sort(n.divisors.begin(), n.divisors.end());
      n.factors.push_back(*step.exceptional[0]);
      std::sort(n.factors.begin(), n.factors.end());
      auto st = *step.strict[s];
      n.up.push_back(st);
      nodes[st].down.push_back(k);
    }
  }
  // factors of the exceptional divisor are itself
  nodes[*step.exceptional[0]].factors = {*step.exceptional[0]};
  for (auto& n : nodes) {
    std::sort(n.up.begin(), n.up.end());
    std::sort(n.down.begin(), n.down.end());
  }

  Bicomplex out{StratumLattice(std::move(nodes))};
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto [cd, s, ex] = entries[k];
    std::vector<std::size_t> d = bc.dims(s);
    if (ex) {
      if (chi == Color::Lambda)
        d.insert(d.begin(), 0);
      else
        d.push_back(0);
    }
    out.set_dims(k, std::move(d));
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    auto [cd, s, ex] = entries[k];
    const std::size_t c = L.node(s).codim;
    for (auto t : L.node(s).up) {
      const auto& old = bc.maps(s, t);
      if (!ex) {
        auto& m = out.add_cover(k, *step.strict[t]);
        m.d1 = old.d1;
        m.d2 = old.d2;
        continue;
      }
      auto& m = out.add_cover(k, *step.exceptional[t]);
      if (chi == Color::Lambda) {
        for (std::size_t i = 1; i <= c + 1; ++i) m.d1[i] = -old.d1[i - 1];
        for (std::size_t i = 1; i <= c; ++i) m.d2[i] = old.d2[i - 1];
      } else {
        for (std::size_t i = 0; i <= c; ++i) m.d1[i] = old.d1[i];
        for (std::size_t i = 0; i < c; ++i) m.d2[i] = -old.d2[i];
      }
    }
    if (ex) {
      auto& m = out.add_cover(k, *step.strict[s]);
      if (chi == Color::Lambda) {
        for (std::size_t i = 1; i <= c + 1; ++i) m.d1[i] = Matrix::identity(bc.dim(s, static_cast<long>(i) - 1));
      } else {
        for (std::size_t i = 0; i <= c; ++i) m.d2[i] = Matrix::identity(bc.dim(s, i));
      }
    }
  }
  step.result = AbstractStratifiedBiArrangement{std::move(out)};
  step.result.lattice().validate();
  return step;
}

std::vector<std::size_t> minimal_irreducibles(const StratumLattice& L) {
  auto cands = L.irreducibles_of_codim_at_least(2);
  std::vector<std::size_t> out;
  for (auto z : cands) {
    auto below = L.below(z);
    bool minimal = true;
    for (auto w : cands)
      if (w != z && below[w]) minimal = false;
    if (minimal) out.push_back(z);
  }
  return out;
}

std::vector<BlowupStep> resolve(const AbstractStratifiedBiArrangement& a, TieBreak tie) {
  std::vector<BlowupStep> steps;
  const AbstractStratifiedBiArrangement* cur = &a;
  while (true) {
    auto mins = minimal_irreducibles(cur->lattice());
    if (mins.empty()) break;
    auto z = tie == TieBreak::First ? mins.front() : mins.back();
    steps.push_back(blow_up(*cur, z));
    cur = &steps.back().result;
  }
  return steps;
}

std::vector<std::pair<std::vector<std::string>, std::vector<std::size_t>>> terminal_signature(
    const AbstractStratifiedBiArrangement& a) {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::size_t>>> out;
  for (std::size_t s = 0; s < a.complex.size(); ++s)
    out.emplace_back(a.lattice().node(s).divisors, a.complex.dims(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace osbc
