#include "osbc/os_algebra.hpp"

#include <algorithm>
#include <unordered_map>

namespace osbc {

int merge_sign(HyperplaneSet a, HyperplaneSet b) {
  std::size_t inversions = 0;
  for (auto x : members(a)) inversions += count(b & (bit(x) - 1));
  return inversions % 2 ? -1 : 1;
}

std::vector<std::pair<HyperplaneSet, int>> boundary(HyperplaneSet I) {
  std::vector<std::pair<HyperplaneSet, int>> out;
  int sign = 1;
  for (auto i : members(I)) {
    out.emplace_back(I & ~bit(i), sign);
    sign = -sign;
  }
  return out;
}

namespace {

template <class F>
void for_each_subset_of_size(HyperplaneSet pool, std::size_t size, F&& f) {
  auto idx = members(pool);
  if (size > idx.size()) return;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    HyperplaneSet s = 0;
    for (auto p : pick) s |= bit(idx[p]);
    f(s);
    std::size_t pos = size;
    while (pos > 0 && pick[pos - 1] == idx.size() - size + pos - 1) --pos;
    if (pos == 0) return;
    ++pick[pos - 1];
    for (std::size_t q = pos; q < size; ++q) pick[q] = pick[q - 1] + 1;
  }
}

}  // namespace

std::vector<std::size_t> OSAlgebra::dims_by_degree() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < pieces_.size(); ++s) {
    if (out.size() <= codim_[s]) out.resize(codim_[s] + 1, 0);
    out[codim_[s]] += pieces_[s].dim();
  }
  return out;
}

OSAlgebra build_os_algebra(const StratumPoset& poset) {
  OSAlgebra alg;
  auto circuits = matroid_circuits(poset, kMaxHyperplanes);
  alg.pieces_.resize(poset.size());
  alg.codim_.resize(poset.size());
  std::vector<std::unordered_map<HyperplaneSet, std::size_t>> index(poset.size());

  for (std::size_t s = 0; s < poset.size(); ++s) {
    const auto& st = poset.stratum(s);
    const std::size_t r = st.codim;
    alg.codim_[s] = r;
    auto& piece = alg.pieces_[s];
    for_each_subset_of_size(st.hyperplanes, r, [&](HyperplaneSet I) {
      if (poset.rank_of(I) == r) piece.monomials.push_back(I);
    });
    for (std::size_t m = 0; m < piece.monomials.size(); ++m) index[s][piece.monomials[m]] = m;

    std::vector<Vector> rels;
    for (auto C : circuits) {
      if (!is_subset(C, st.hyperplanes) || count(C) > r + 1) continue;
      for_each_subset_of_size(st.hyperplanes & ~C, r + 1 - count(C), [&](HyperplaneSet K) {
        if (poset.rank_of(K | C) != r) return;
        Vector v(piece.monomials.size());
        for (auto [J, sg] : boundary(C)) v[index[s].at(K | J)] += sg * merge_sign(K, J);
        rels.push_back(std::move(v));
      });
    }
    auto R = Subspace::span(Matrix::from_rows(rels, piece.monomials.size()));
    piece.quotient = quotient_structure(piece.monomials.size(), R);
  }

  for (std::size_t s = 0; s < poset.size(); ++s) {
    const auto& ps = alg.pieces_[s];
    for (auto t : poset.up(s)) {
      const auto& pt = alg.pieces_[t];
      HyperplaneSet ht = poset.stratum(t).hyperplanes;
      Matrix raw(pt.monomials.size(), ps.monomials.size());
      for (std::size_t m = 0; m < ps.monomials.size(); ++m)
        for (auto [J, sg] : boundary(ps.monomials[m]))
          if (is_subset(J, ht)) raw(index[t].at(J), m) += sg;
      alg.d_[{s, t}] = pt.quotient.projection * raw * ps.quotient.section;
    }
  }
  return alg;
}

std::vector<HyperplaneSet> nbc_sets(const StratumPoset& poset,
                                    const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  std::vector<HyperplaneSet> broken;
  for (auto C : matroid_circuits(poset, kMaxHyperplanes)) {
    auto m = members(C);
    auto first = *std::min_element(m.begin(), m.end(),
                                   [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    broken.push_back(C & ~bit(first));
  }
  HyperplaneSet all = 0;
  for (std::size_t i = 0; i < poset.forms().size(); ++i) all |= bit(i);
  std::vector<HyperplaneSet> out;
  for (std::size_t size = 0; size <= poset.ambient_dim(); ++size)
    for_each_subset_of_size(all, size, [&](HyperplaneSet I) {
      if (poset.rank_of(I) != size) return;
      for (auto b : broken)
        if (is_subset(b, I)) return;
      out.push_back(I);
    });
  return out;
}

std::vector<Matrix> os_total_differentials(const OSAlgebra& alg, const StratumPoset& poset) {
  std::size_t top = poset.max_codim();
  std::vector<std::vector<std::size_t>> by_deg(top + 1);
  for (std::size_t s = 0; s < poset.size(); ++s) by_deg[poset.stratum(s).codim].push_back(s);
  auto offsets = [&](std::size_t r) {
    std::unordered_map<std::size_t, std::size_t> off;
    std::size_t o = 0;
    for (auto s : by_deg[r]) {
      off[s] = o;
      o += alg.dim(s);
    }
    return std::pair{off, o};
  };
  std::vector<Matrix> maps;
  for (std::size_t r = 1; r <= top; ++r) {
    auto [src, ns] = offsets(r);
    auto [dst, nt] = offsets(r - 1);
    Matrix d(nt, ns);
    for (auto s : by_deg[r])
      for (auto t : poset.up(s)) d.set_block(dst[t], src[s], alg.differential(s, t));
    maps.push_back(std::move(d));
  }
  return maps;
}

bool os_exactness_check(const OSAlgebra& alg, const StratumPoset& poset) {
  auto maps = os_total_differentials(alg, poset);
  std::vector<std::size_t> dims = alg.dims_by_degree();
  auto h = complex_homology(dims, maps);
  return std::all_of(h.begin(), h.end(), [](std::size_t x) { return x == 0; });
}

}  // namespace osbc
