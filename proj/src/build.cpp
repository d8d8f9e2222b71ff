#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "osbc/bicomplex.hpp"
#include "osbc/error.hpp"

namespace osbc {

namespace {

struct Blocks {
  std::unordered_map<std::size_t, std::size_t> offset;
  std::size_t total = 0;
};

template <class F>
Blocks blocks(const std::vector<std::size_t>& strata, F&& size) {
  Blocks b;
  for (auto s : strata) {
    b.offset[s] = b.total;
    b.total += size(s);
  }
  return b;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// x in A^S_{i,c-1-i} (S covering sigma) maps to sum over T, S' of d''_{S',T} d'_{S,T} x,
// landing in the direct sum of A^{S'}_{i-1,c-i} over the covers S' of sigma
Matrix composite(const Bicomplex& bc, const StratumLattice& L, std::size_t sigma, std::size_t i,
                 const Blocks& src, const Blocks& dst) {
  const auto& ups = L.node(sigma).up;
  Matrix g(dst.total, src.total);
  for (auto s : ups) {
    if (bc.dim(s, i) == 0) continue;
    for (auto t : L.node(s).up) {
      const Matrix& a = bc.dprime(s, t, i);
      for (auto s2 : ups) {
        if (!contains(L.node(s2).up, t)) continue;
        g.add_block(dst.offset.at(s2), src.offset.at(s), bc.ddouble(s2, t, i - 1) * a);
      }
    }
  }
  return g;
}

}  // namespace

Bicomplex build_inductive(const StratumLattice& lattice, MixedPolicy policy) {
  Bicomplex bc(lattice);
  const auto& L = bc.lattice();
  std::vector<std::size_t> order(L.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return L.node(a).codim < L.node(b).codim;
  });

  for (auto sigma : order) {
    const auto& node = L.node(sigma);
    const std::size_t c = node.codim;
    if (c == 0) {
      bc.set_dims(sigma, {1});
      continue;
    }
    auto color = L.effective_color(sigma, policy);
    if (!color) throw ColoringInvalid(node.label + " has no color");
    const auto& ups = node.up;
    std::vector<std::size_t> twos;
    for (auto s : ups)
      for (auto t : L.node(s).up)
        if (!contains(twos, t)) twos.push_back(t);
    std::sort(twos.begin(), twos.end());

    std::vector<std::size_t> dims(c + 1, 0);
    if (*color == Color::Lambda) {
      std::vector<Subspace> kernels(c + 1);
      for (std::size_t i = 1; i <= c; ++i) {
        auto v1 = blocks(ups, [&](std::size_t s) { return bc.dim(s, static_cast<long>(i) - 1); });
        auto v2 = blocks(twos, [&](std::size_t t) { return bc.dim(t, static_cast<long>(i) - 2); });
        Matrix d(v2.total, v1.total);
        for (auto s : ups)
          for (auto t : L.node(s).up) d.set_block(v2.offset.at(t), v1.offset.at(s), bc.dprime(s, t, i - 1));
        kernels[i] = kernel_basis(d);
        dims[i] = kernels[i].dim();
      }
      bc.set_dims(sigma, dims);
      for (auto s : ups) bc.add_cover(sigma, s);
      for (std::size_t i = 1; i <= c; ++i) {
        auto v1 = blocks(ups, [&](std::size_t s) { return bc.dim(s, static_cast<long>(i) - 1); });
        const Matrix kt = kernels[i].basis().transposed();
        for (auto s : ups)
          bc.maps(sigma, s).d1[i] = kt.block(v1.offset.at(s), 0, bc.dim(s, static_cast<long>(i) - 1), dims[i]);
      }
      for (std::size_t i = 1; i < c; ++i) {
        auto src = blocks(ups, [&](std::size_t s) { return bc.dim(s, i); });
        auto dst = blocks(ups, [&](std::size_t s) { return bc.dim(s, static_cast<long>(i) - 1); });
        Matrix g = composite(bc, L, sigma, i, src, dst);
        Matrix coords(dims[i], src.total);
        for (std::size_t col = 0; col < src.total; ++col) {
          Vector v = g.column(col);
          Vector x;
          try {
            x = coordinates_in_span(kernels[i], v);
          } catch (const NotInSpan&) {
            throw InternalCommutativityFailure("image escaped the kernel at " + node.label);
          }
          for (std::size_t r = 0; r < dims[i]; ++r) coords(r, col) = x[r];
        }
        for (auto s : ups)
          bc.maps(sigma, s).d2[i] = coords.block(0, src.offset.at(s), dims[i], bc.dim(s, i));
      }
    } else {
      std::vector<QuotientMap> quotients(c + 1);
      std::vector<Matrix> relations(c + 1);
      for (std::size_t i = 0; i < c; ++i) {
        auto w1 = blocks(ups, [&](std::size_t s) { return bc.dim(s, i); });
        auto w2 = blocks(twos, [&](std::size_t t) { return bc.dim(t, i); });
        Matrix d(w1.total, w2.total);
        for (auto s : ups)
          for (auto t : L.node(s).up)
            if (i + 1 < c) d.set_block(w1.offset.at(s), w2.offset.at(t), bc.ddouble(s, t, i));
        quotients[i] = quotient_structure(w1.total, image_of(d));
        relations[i] = std::move(d);
        dims[i] = quotients[i].projection.rows();
      }
      bc.set_dims(sigma, dims);
      for (auto s : ups) bc.add_cover(sigma, s);
      for (std::size_t i = 0; i < c; ++i) {
        auto w1 = blocks(ups, [&](std::size_t s) { return bc.dim(s, i); });
        for (auto s : ups)
          bc.maps(sigma, s).d2[i] = quotients[i].projection.block(0, w1.offset.at(s), dims[i], bc.dim(s, i));
      }
      for (std::size_t i = 1; i < c; ++i) {
        auto src = blocks(ups, [&](std::size_t s) { return bc.dim(s, i); });
        auto dst = blocks(ups, [&](std::size_t s) { return bc.dim(s, static_cast<long>(i) - 1); });
        Matrix g = composite(bc, L, sigma, i, src, dst);
        if (!(g * relations[i]).is_zero())
          throw InternalCommutativityFailure("induced map ill-defined at " + node.label);
        Matrix induced = g * quotients[i].section;
        for (auto s : ups)
          bc.maps(sigma, s).d1[i] =
              induced.block(dst.offset.at(s), 0, bc.dim(s, static_cast<long>(i) - 1), dims[i]);
      }
    }
  }
  return bc;
}

Bicomplex build_os_bicomplex(const BiArrangement& b, MixedPolicy policy) {
  if (auto v = validate_coloring(b.poset(), b.coloring())) throw ColoringInvalid(v->message);
  return build_inductive(lattice_of(b), policy);
}

}  // namespace osbc
