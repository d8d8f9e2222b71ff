#include "osbc/bicomplex.hpp"

#include <algorithm>

#include "osbc/error.hpp"

namespace osbc {

Bicomplex::Bicomplex(StratumLattice lattice)
    : lattice_(std::move(lattice)), dims_(lattice_.size()) {}

std::size_t Bicomplex::dim(std::size_t s, long i) const {
  const auto& d = dims_.at(s);
  if (i < 0 || static_cast<std::size_t>(i) >= d.size()) return 0;
  return d[static_cast<std::size_t>(i)];
}

std::size_t Bicomplex::dim_ij(std::size_t s, long i, long j) const {
  if (i + j != static_cast<long>(codim(s))) return 0;
  return dim(s, i);
}

void Bicomplex::set_dims(std::size_t s, std::vector<std::size_t> d) {
  if (d.size() != codim(s) + 1) throw DimensionError("dims vector must have codim+1 entries");
  dims_.at(s) = std::move(d);
}

const CoverMaps& Bicomplex::maps(std::size_t s, std::size_t t) const {
  auto it = edge_index_.find({s, t});
  if (it == edge_index_.end())
    throw Error("no cover " + lattice_.node(s).label + " -> " + lattice_.node(t).label);
  return edges_[it->second];
}

CoverMaps& Bicomplex::maps(std::size_t s, std::size_t t) {
  auto it = edge_index_.find({s, t});
  if (it == edge_index_.end())
    throw Error("no cover " + lattice_.node(s).label + " -> " + lattice_.node(t).label);
  return edges_[it->second];
}

CoverMaps& Bicomplex::add_cover(std::size_t s, std::size_t t) {
  const std::size_t c = codim(s);
  if (codim(t) + 1 != c) throw DimensionError("cover with bad codims");
  if (dims_[s].size() != c + 1 || dims_[t].size() != c) throw DimensionError("cover ends lack dims");
  CoverMaps m;
  m.lower = s;
  m.upper = t;
  for (std::size_t i = 0; i <= c; ++i) m.d1.emplace_back(dim(t, static_cast<long>(i) - 1), dim(s, i));
  for (std::size_t i = 0; i < c; ++i) m.d2.emplace_back(dim(s, i), dim(t, i));
  edge_index_[{s, t}] = edges_.size();
  edges_.push_back(std::move(m));
  return edges_.back();
}

Bicomplex dual_bicomplex(const Bicomplex& bc) {
  std::vector<StratumNode> nodes = bc.lattice().nodes();
  for (auto& n : nodes)
    if (n.color) n.color = opposite(*n.color);
  Bicomplex out{StratumLattice(std::move(nodes))};
  for (std::size_t s = 0; s < bc.size(); ++s) {
    auto d = bc.dims(s);
    std::reverse(d.begin(), d.end());
    out.set_dims(s, std::move(d));
  }
  for (const auto& e : bc.all_maps()) {
    auto& m = out.add_cover(e.lower, e.upper);
    const std::size_t c = bc.codim(e.lower);
    for (std::size_t i = 1; i <= c; ++i) m.d1[i] = e.d2[c - i].transposed();
    for (std::size_t i = 0; i < c; ++i) m.d2[i] = e.d1[c - i].transposed();
  }
  return out;
}

namespace {

// block offsets of A^{(a,b)}_i = sum over i1 of A^a_{i1} (x) A^b_{i-i1}
struct TensorLayout {
  std::vector<std::size_t> offset;  // indexed by i1
  std::size_t total = 0;
};

TensorLayout layout(const Bicomplex& A, std::size_t a, const Bicomplex& B, std::size_t b,
                    long i) {
  TensorLayout l;
  const long ca = static_cast<long>(A.codim(a));
  l.offset.assign(static_cast<std::size_t>(ca) + 1, 0);
  for (long i1 = 0; i1 <= ca; ++i1) {
    l.offset[static_cast<std::size_t>(i1)] = l.total;
    l.total += A.dim(a, i1) * B.dim(b, i - i1);
  }
  return l;
}

Matrix identity_or_empty(std::size_t n) { return Matrix::identity(n); }

}  // namespace

Bicomplex kunneth_product(const Bicomplex& A, const Bicomplex& B) {
  const std::size_t na = A.size(), nb = B.size();
  auto id = [nb](std::size_t a, std::size_t b) { return a * nb + b; };
  std::vector<StratumNode> nodes(na * nb);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& x = A.lattice().node(a);
      const auto& y = B.lattice().node(b);
      auto& n = nodes[id(a, b)];
      n.label = x.label + "|" + y.label;
      n.codim = x.codim + y.codim;
      if (x.codim == 0 && y.irreducible) {
        n.irreducible = true;
        n.color = y.color;
      } else if (y.codim == 0 && x.irreducible) {
        n.irreducible = true;
        n.color = x.color;
      }
      for (auto f : x.factors) n.factors.push_back(id(f, 0));
      for (auto f : y.factors) n.factors.push_back(id(0, f));
      std::sort(n.factors.begin(), n.factors.end());
      for (const auto& d : x.divisors) n.divisors.push_back("1:" + d);
      for (const auto& d : y.divisors) n.divisors.push_back("2:" + d);
      for (auto t : x.up) n.up.push_back(id(t, b));
      for (auto t : y.up) n.up.push_back(id(a, t));
      for (auto t : x.down) n.down.push_back(id(t, b));
      for (auto t : y.down) n.down.push_back(id(a, t));
    }
  Bicomplex out{StratumLattice(std::move(nodes))};
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      std::size_t c = A.codim(a) + B.codim(b);
      std::vector<std::size_t> d(c + 1);
      for (std::size_t i = 0; i <= c; ++i) d[i] = layout(A, a, B, b, static_cast<long>(i)).total;
      out.set_dims(id(a, b), std::move(d));
    }

  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const long ca = static_cast<long>(A.codim(a));
      const long cb = static_cast<long>(B.codim(b));
      const long c = ca + cb;
      // covers in the first factor
      for (auto ta : A.lattice().node(a).up) {
        auto& m = out.add_cover(id(a, b), id(ta, b));
        for (long i = 1; i <= c; ++i) {
          auto src = layout(A, a, B, b, i);
          auto dst = layout(A, ta, B, b, i - 1);
          for (long i1 = 1; i1 <= ca; ++i1) {
            std::size_t rb = B.dim(b, i - i1);
            if (rb == 0 || A.dim(a, i1) == 0) continue;
            auto blk = Matrix::kron(A.dprime(a, ta, static_cast<std::size_t>(i1)), identity_or_empty(rb));
            m.d1[static_cast<std::size_t>(i)].set_block(dst.offset[static_cast<std::size_t>(i1 - 1)],
                                                        src.offset[static_cast<std::size_t>(i1)], blk);
          }
        }
        for (long i = 0; i < c; ++i) {
          auto src = layout(A, ta, B, b, i);
          auto dst = layout(A, a, B, b, i);
          for (long i1 = 0; i1 < ca; ++i1) {
            std::size_t rb = B.dim(b, i - i1);
            if (rb == 0) continue;
            auto blk = Matrix::kron(A.ddouble(a, ta, static_cast<std::size_t>(i1)), identity_or_empty(rb));
            m.d2[static_cast<std::size_t>(i)].set_block(dst.offset[static_cast<std::size_t>(i1)],
                                                        src.offset[static_cast<std::size_t>(i1)], blk);
          }
        }
      }
      // covers in the second factor: Koszul signs (-1)^{i1} on d', (-1)^{j1} on d''
      for (auto tb : B.lattice().node(b).up) {
        auto& m = out.add_cover(id(a, b), id(a, tb));
        for (long i = 1; i <= c; ++i) {
          auto src = layout(A, a, B, b, i);
          auto dst = layout(A, a, B, tb, i - 1);
          for (long i1 = 0; i1 <= ca; ++i1) {
            long i2 = i - i1;
            if (i2 < 1 || i2 > cb) continue;
            std::size_t ra = A.dim(a, i1);
            if (ra == 0) continue;
            auto blk = Matrix::kron(identity_or_empty(ra), B.dprime(b, tb, static_cast<std::size_t>(i2)));
            if (i1 % 2) blk = -blk;
            m.d1[static_cast<std::size_t>(i)].set_block(dst.offset[static_cast<std::size_t>(i1)],
                                                        src.offset[static_cast<std::size_t>(i1)], blk);
          }
        }
        for (long i = 0; i < c; ++i) {
          auto src = layout(A, a, B, tb, i);
          auto dst = layout(A, a, B, b, i);
          for (long i1 = 0; i1 <= ca; ++i1) {
            long i2 = i - i1;
            if (i2 < 0 || i2 >= cb) continue;
            std::size_t ra = A.dim(a, i1);
            if (ra == 0) continue;
            auto blk = Matrix::kron(identity_or_empty(ra), B.ddouble(b, tb, static_cast<std::size_t>(i2)));
            if ((ca - i1) % 2) blk = -blk;
            m.d2[static_cast<std::size_t>(i)].set_block(dst.offset[static_cast<std::size_t>(i1)],
                                                        src.offset[static_cast<std::size_t>(i1)], blk);
          }
        }
      }
    }
  return out;
}

std::string IdentityViolation::describe() const {
  std::string s = "identity (" + identity + ") fails at i=" + std::to_string(i) + " on";
  for (const auto& x : strata) s += " " + x;
  return s;
}

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::optional<IdentityViolation> verify_bicomplex_identities(const Bicomplex& bc) {
  const auto& L = bc.lattice();
  auto lab = [&](std::size_t s) { return L.node(s).label; };

  // (1): paths S -> T -> U
  for (std::size_t s = 0; s < bc.size(); ++s) {
    const std::size_t c = bc.codim(s);
    std::vector<std::size_t> twos;
    for (auto t : L.node(s).up)
      for (auto u : L.node(t).up)
        if (!contains(twos, u)) twos.push_back(u);
    for (auto u : twos) {
      for (std::size_t i = 2; i <= c; ++i) {
        Matrix acc(bc.dim(u, static_cast<long>(i) - 2), bc.dim(s, i));
        for (auto t : L.node(s).up)
          if (contains(L.node(t).up, u)) acc = acc + bc.dprime(t, u, i - 1) * bc.dprime(s, t, i);
        if (!acc.is_zero()) return IdentityViolation{"1'", {lab(s), lab(u)}, i};
      }
      for (std::size_t i = 0; i + 2 <= c; ++i) {
        Matrix acc(bc.dim(s, i), bc.dim(u, i));
        for (auto t : L.node(s).up)
          if (contains(L.node(t).up, u)) acc = acc + bc.ddouble(s, t, i) * bc.ddouble(t, u, i);
        if (!acc.is_zero()) return IdentityViolation{"1''", {lab(s), lab(u)}, i};
      }
    }
  }
  // (2a)/(2b): R covered by S and U
  for (std::size_t r = 0; r < bc.size(); ++r) {
    const std::size_t c = bc.codim(r);
    const auto& ups = L.node(r).up;
    for (auto s : ups)
      for (auto u : ups) {
        if (s == u) continue;
        std::vector<std::size_t> common;
        for (auto t : L.node(s).up)
          if (contains(L.node(u).up, t)) common.push_back(t);
        for (std::size_t i = 1; i + 1 <= c; ++i) {
          Matrix lhs = bc.dprime(r, u, i) * bc.ddouble(r, s, i);
          Matrix rhs(lhs.rows(), lhs.cols());
          for (auto t : common) rhs = rhs + bc.ddouble(u, t, i - 1) * bc.dprime(s, t, i);
          if (!(lhs == rhs))
            return IdentityViolation{common.empty() ? "2a" : "2b", {lab(r), lab(s), lab(u)}, i};
        }
      }
  }
  // (2c)
  for (std::size_t s = 0; s < bc.size(); ++s) {
    const std::size_t c = bc.codim(s);
    for (std::size_t i = 1; i <= c; ++i) {
      Matrix acc(bc.dim(s, static_cast<long>(i) - 1), bc.dim(s, i));
      for (auto t : L.node(s).up) acc = acc + bc.ddouble(s, t, i - 1) * bc.dprime(s, t, i);
      if (!acc.is_zero()) return IdentityViolation{"2c'", {lab(s)}, i};
    }
    for (auto t : L.node(s).up)
      for (std::size_t i = 1; i + 1 <= c; ++i)
        if (!(bc.dprime(s, t, i) * bc.ddouble(s, t, i)).is_zero())
          return IdentityViolation{"2c''", {lab(s), lab(t)}, i};
  }
  return std::nullopt;
}

}  // namespace osbc
