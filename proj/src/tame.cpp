#include "osbc/tame.hpp"

#include <algorithm>
#include <unordered_map>

#include "osbc/error.hpp"
#include "osbc/os_algebra.hpp"

namespace osbc {

namespace {

template <class F>
void subsets_of_size(HyperplaneSet pool, std::size_t size, F&& f) {
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

// coefficient of f_J in d(f_{J u m})
int coboundary_sign(HyperplaneSet J, std::size_t m) {
  return count(J & (bit(m) - 1)) % 2 ? -1 : 1;
}

Matrix in_annihilator_coords(const TamePiece& p, const Matrix& cols, const std::string& where) {
  Matrix out(p.annihilator.dim(), cols.cols());
  for (std::size_t c = 0; c < cols.cols(); ++c) {
    Vector x;
    try {
      x = coordinates_in_span(p.annihilator, cols.column(c));
    } catch (const NotInSpan&) {
      throw InternalCommutativityFailure("differential leaves the annihilator at " + where);
    }
    for (std::size_t r = 0; r < x.size(); ++r) out(r, c) = x[r];
  }
  return out;
}

}  // namespace

std::vector<ColoredCircuit> tame_generators(const BiArrangement& b, std::size_t cap) {
  std::vector<ColoredCircuit> out;
  for (auto c : matroid_circuits(b.poset(), cap)) {
    auto color = b.color(b.poset().stratum_of(c));
    if (!color) throw ColoringInvalid("circuit stratum " + b.poset().label(b.poset().stratum_of(c)) +
                                      " has no color");
    out.push_back({c, *color});
  }
  return out;
}

TameAlgebra build_subquotient(const BiArrangement& b, const std::vector<ColoredCircuit>& gens) {
  const auto& p = b.poset();
  HyperplaneSet lam = 0;
  for (auto h : b.side_indices(Color::Lambda)) lam |= bit(h);

  TameAlgebra t;
  t.pieces.resize(p.size());
  std::vector<std::vector<std::unordered_map<HyperplaneSet, std::size_t>>> index(p.size());

  for (std::size_t s = 0; s < p.size(); ++s) {
    const std::size_t c = p.stratum(s).codim;
    const HyperplaneSet hs = p.stratum(s).hyperplanes;
    t.pieces[s].resize(c + 1);
    index[s].resize(c + 1);
    for (std::size_t i = 0; i <= c; ++i) {
      auto& piece = t.pieces[s][i];
      const std::size_t j = c - i;
      subsets_of_size(hs & lam, i, [&](HyperplaneSet I) {
        subsets_of_size(hs & ~lam, j, [&](HyperplaneSet J) {
          if (p.rank_of(I | J) == c) piece.monomials.push_back(I | J);
        });
      });
      std::sort(piece.monomials.begin(), piece.monomials.end(),
                [](HyperplaneSet a, HyperplaneSet b2) { return members(a) < members(b2); });
      for (std::size_t m = 0; m < piece.monomials.size(); ++m) index[s][i][piece.monomials[m]] = m;
      const std::size_t nm = piece.monomials.size();

      std::vector<Vector> rels, corels;
      for (const auto& g : gens) {
        if (!is_subset(g.support, hs)) continue;
        const HyperplaneSet I0 = g.support & lam, J0 = g.support & ~lam;
        if (g.color == Color::Lambda) {
          if (I0 == 0 || count(I0) > i + 1 || count(J0) > j) continue;
          subsets_of_size(hs & ~lam & ~J0, j - count(J0), [&](HyperplaneSet Jx) {
            subsets_of_size(hs & lam & ~I0, i + 1 - count(I0), [&](HyperplaneSet K) {
              if (p.rank_of(K | I0 | J0 | Jx) != c) return;
              Vector v(nm);
              for (auto [Ia, sg] : boundary(I0)) v[index[s][i].at(K | Ia | J0 | Jx)] += sg * merge_sign(K, Ia);
              rels.push_back(std::move(v));
            });
          });
        } else {
          if (J0 == 0 || count(J0) > j + 1 || count(I0) > i) continue;
          subsets_of_size(hs & lam & ~I0, i - count(I0), [&](HyperplaneSet Ix) {
            subsets_of_size(hs & ~lam & ~J0, j + 1 - count(J0), [&](HyperplaneSet K) {
              if (p.rank_of(I0 | Ix | K | J0) != c) return;
              Vector v(nm);
              for (auto [Jb, sg] : boundary(J0)) v[index[s][i].at(I0 | Ix | K | Jb)] += sg * merge_sign(K, Jb);
              corels.push_back(std::move(v));
            });
          });
        }
      }
      piece.relations = Subspace::span(Matrix::from_rows(rels, nm));
      piece.annihilator = kernel_basis(Matrix::from_rows(corels, nm));
      auto meet = intersect(piece.annihilator, piece.relations);
      std::vector<Vector> coords;
      for (std::size_t r = 0; r < meet.dim(); ++r)
        coords.push_back(coordinates_in_span(piece.annihilator, meet.basis().row(r)));
      piece.quotient = quotient_structure(
          piece.annihilator.dim(), Subspace::span(Matrix::from_rows(coords, piece.annihilator.dim())));
    }
  }

  Bicomplex bc(lattice_of(b));
  for (std::size_t s = 0; s < p.size(); ++s) {
    std::vector<std::size_t> d;
    for (const auto& piece : t.pieces[s]) d.push_back(piece.dim());
    bc.set_dims(s, d);
  }
  for (std::size_t s = 0; s < p.size(); ++s) {
    const std::size_t c = p.stratum(s).codim;
    const HyperplaneSet hs = p.stratum(s).hyperplanes;
    for (auto u : p.up(s)) {
      auto& m = bc.add_cover(s, u);
      const HyperplaneSet hu = p.stratum(u).hyperplanes;
      for (std::size_t i = 1; i <= c; ++i) {
        const auto& src = t.pieces[s][i];
        const auto& dst = t.pieces[u][i - 1];
        Matrix raw(dst.monomials.size(), src.monomials.size());
        for (std::size_t col = 0; col < src.monomials.size(); ++col) {
          HyperplaneSet I = src.monomials[col] & lam, J = src.monomials[col] & ~lam;
          for (auto [Ia, sg] : boundary(I))
            if (is_subset(Ia | J, hu)) raw(index[u][i - 1].at(Ia | J), col) += sg;
        }
        Matrix lifted = raw * src.annihilator.basis().transposed() * src.quotient.section;
        m.d1[i] = dst.quotient.projection * in_annihilator_coords(dst, lifted, p.label(u));
      }
      for (std::size_t i = 0; i < c; ++i) {
        const auto& src = t.pieces[u][i];
        const auto& dst = t.pieces[s][i];
        Matrix raw(dst.monomials.size(), src.monomials.size());
        for (std::size_t col = 0; col < src.monomials.size(); ++col) {
          HyperplaneSet N = src.monomials[col];
          HyperplaneSet J = N & ~lam;
          for (auto mm : members(hs & ~lam & ~hu))
            raw(index[s][i].at(N | bit(mm)), col) += coboundary_sign(J, mm);
        }
        Matrix lifted = raw * src.annihilator.basis().transposed() * src.quotient.section;
        m.d2[i] = dst.quotient.projection * in_annihilator_coords(dst, lifted, p.label(s));
      }
    }
  }
  t.complex = std::move(bc);
  return t;
}

TameAlgebra build_tame_presentation(const BiArrangement& b, std::size_t cap) {
  auto rep = check_tameness(b, cap);
  if (!rep.tame) throw NotTame(rep.first_failure()->label + " is not tame");
  return build_subquotient(b, tame_generators(b, cap));
}

std::optional<PresentationMismatch> compare_presentations(const TameAlgebra& t,
                                                          const Bicomplex& bc) {
  const auto& tc = t.complex;
  if (tc.size() != bc.size()) return PresentationMismatch{"", 0, 0, "different stratum counts"};
  for (std::size_t s = 0; s < bc.size(); ++s) {
    const std::size_t c = bc.codim(s);
    const auto& label = bc.lattice().node(s).label;
    for (std::size_t i = 0; i <= c; ++i)
      if (tc.dim(s, i) != bc.dim(s, i))
        return PresentationMismatch{label, i, c - i,
                                    "dimension " + std::to_string(tc.dim(s, i)) + " vs " +
                                        std::to_string(bc.dim(s, i))};
  }
  for (const auto& e : bc.all_maps()) {
    const auto& f = tc.maps(e.lower, e.upper);
    const std::size_t c = bc.codim(e.lower);
    const auto& label = bc.lattice().node(e.lower).label;
    for (std::size_t i = 0; i <= c; ++i)
      if (rank(e.d1[i]) != rank(f.d1[i]))
        return PresentationMismatch{label, i, c - i, "rank of d' towards " + bc.lattice().node(e.upper).label};
    for (std::size_t i = 0; i < c; ++i)
      if (rank(e.d2[i]) != rank(f.d2[i]))
        return PresentationMismatch{label, i, c - i, "rank of d'' from " + bc.lattice().node(e.upper).label};
  }
  return std::nullopt;
}

}  // namespace osbc
