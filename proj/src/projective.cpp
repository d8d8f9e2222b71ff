#include "osbc/projective.hpp"

#include <algorithm>
#include <map>

#include "osbc/error.hpp"

namespace osbc {

namespace {

// layout of A_{i,j} = sum over strata of codim i+j
struct Slot {
  std::map<std::size_t, std::size_t> offset;
  std::size_t total = 0;
};

Slot slot(const Bicomplex& bc, long i, long j) {
  Slot out;
  if (i < 0 || j < 0) return out;
  for (std::size_t s = 0; s < bc.size(); ++s)
    if (bc.codim(s) == static_cast<std::size_t>(i + j)) {
      out.offset[s] = out.total;
      out.total += bc.dim(s, i);
    }
  return out;
}

// d' : A_{i,j} -> A_{i-1,j}
Matrix global_dprime(const Bicomplex& bc, long i, long j) {
  auto src = slot(bc, i, j), dst = slot(bc, i - 1, j);
  Matrix m(dst.total, src.total);
  if (i < 1) return m;
  for (auto [s, so] : src.offset)
    for (auto t : bc.lattice().node(s).up) m.set_block(dst.offset.at(t), so, bc.dprime(s, t, i));
  return m;
}

// d'' : A_{i,j} -> A_{i,j+1}
Matrix global_ddouble(const Bicomplex& bc, long i, long j) {
  auto src = slot(bc, i, j), dst = slot(bc, i, j + 1);
  Matrix m(dst.total, src.total);
  for (auto [s, so] : dst.offset)
    for (auto t : bc.lattice().node(s).up)
      if (auto it = src.offset.find(t); it != src.offset.end())
        m.set_block(so, it->second, bc.ddouble(s, t, i));
  return m;
}

// cochain complex maps[j] : C_j -> C_{j+1}; returns dim H^j
std::vector<std::size_t> cohomology(const std::vector<std::size_t>& dims,
                                    const std::vector<Matrix>& maps) {
  std::vector<std::size_t> rdims(dims.rbegin(), dims.rend());
  std::vector<Matrix> rmaps(maps.rbegin(), maps.rend());
  auto h = complex_homology(rdims, rmaps);
  std::reverse(h.begin(), h.end());
  return h;
}

Matrix induced_on_kernel(const Subspace& src, const Subspace& dst, const Matrix& map) {
  Matrix out(dst.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    auto image = map.apply(src.basis().row(c));
    auto x = coordinates_in_span(dst, image);
    for (std::size_t r = 0; r < x.size(); ++r) out(r, c) = x[r];
  }
  return out;
}

ProjectiveBiArrangement finish(BiArrangement b, bool origin_lambda, bool origin_mu, bool dedup) {
  const auto& p = b.poset();
  auto origin = p.origin();
  if (!origin || p.ambient_dim() < 2) throw NotProjective("the origin is not a stratum of codim >= 2");
  if (b.color(*origin)) throw NotProjective("the origin must stay uncolored");
  auto partial = build_inductive(lattice_of(b).without(*origin));
  const std::size_t n = p.ambient_dim() - 1, o = *origin;
  ProjectiveBiArrangement pb{std::move(b), n, o, origin_lambda, origin_mu,
                             false, false, dedup, std::move(partial)};
  const auto& q = pb.arrangement.poset();
  auto all_factors = [&](Color c) {
    if (q.is_irreducible(pb.origin)) return false;
    for (auto f : q.factors(pb.origin))
      if (pb.arrangement.color(f) != c) return false;
    return true;
  };
  pb.lambda_defined = origin_lambda && !all_factors(Color::Mu);
  pb.mu_defined = origin_mu && !all_factors(Color::Lambda);
  return pb;
}

}  // namespace

ProjectiveBiArrangement make_projective(std::vector<LinearForm> forms, const ColorAssignment& coloring,
                                        bool origin_lambda, bool origin_mu) {
  auto n = forms.empty() ? 0 : forms.front().coefficients.size();
  BiArrangement b(build_poset(std::move(forms), n), coloring, true);
  return finish(std::move(b), origin_lambda, origin_mu, false);
}

ProjectiveBiArrangement dual_projective(const ProjectiveBiArrangement& pb) {
  return finish(dual(pb.arrangement), pb.mu_requested, pb.lambda_requested, pb.deduplicated);
}

BiArrangement completed(const ProjectiveBiArrangement& pb, Color origin_color) {
  bool ok = origin_color == Color::Lambda ? pb.lambda_defined : pb.mu_defined;
  if (!ok)
    throw KunnethViolation(std::string("origin colored ") + color_name(origin_color) +
                           " is not available");
  Coloring c = pb.arrangement.coloring();
  if (pb.arrangement.poset().is_irreducible(pb.origin)) c[pb.origin] = origin_color;
  return BiArrangement::with_coloring(pb.arrangement.poset(), std::move(c), false);
}

Bicomplex completed_bicomplex(const ProjectiveBiArrangement& pb, Color origin_color) {
  auto policy = origin_color == Color::Lambda ? MixedPolicy::Lambda : MixedPolicy::Mu;
  return build_os_bicomplex(completed(pb, origin_color), policy);
}

TruncatedComplex truncated_complex(const Bicomplex& partial, std::size_t n, std::size_t k) {
  const long K = static_cast<long>(k), J = static_cast<long>(n - k);
  for (std::size_t s = 0; s < partial.size(); ++s)
    if (partial.codim(s) > n) throw Error("truncated complex: stratum of codim > n in the rectangle");
  TruncatedComplex tc;
  tc.k = k;
  tc.lowest = -J;
  // C_t = sum_{i-j=t} A_{i,j}; offsets of each (i,j) inside C_t
  std::vector<std::map<long, std::size_t>> start(K + J + 1);
  for (long t = -J; t <= K; ++t) {
    std::size_t total = 0;
    for (long i = std::max(0L, t); i <= K; ++i) {
      long j = i - t;
      if (j > J) break;
      start[t + J][i] = total;
      total += slot(partial, i, j).total;
    }
    tc.dims.push_back(total);
  }
  for (long t = -J + 1; t <= K; ++t) {
    Matrix d(tc.dims[t - 1 + J], tc.dims[t + J]);
    for (auto [i, off] : start[t + J]) {
      long j = i - t;
      if (i >= 1) d.add_block(start[t - 1 + J].at(i - 1), off, global_dprime(partial, i, j));
      if (j + 1 <= J) {
        auto dd = global_ddouble(partial, i, j);
        if (i % 2) dd = -dd;
        d.add_block(start[t - 1 + J].at(i), off, dd);
      }
    }
    tc.differentials.push_back(std::move(d));
  }
  return tc;
}

WeightTable weight_graded_motive(const ProjectiveBiArrangement& pb) {
  auto rep = check_exactness(pb.partial);
  if (!rep.exact) throw NotExact(rep.first_failure()->label + " is not exact");
  const std::size_t n = pb.n;
  WeightTable table(2 * n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t k = 0; k <= n; ++k) {
    auto tc = truncated_complex(pb.partial, n, k);
    auto h = complex_homology(tc.dims, tc.differentials);
    for (std::size_t q = 0; q < h.size(); ++q) {
      long t = tc.lowest + static_cast<long>(q);
      long r = 2 * static_cast<long>(k) - t;
      if (h[q] && (r < 0 || r > static_cast<long>(2 * n))) throw Error("weight table: degree out of range");
      if (r >= 0 && r <= static_cast<long>(2 * n)) table[r][k] = h[q];
    }
  }
  return table;
}

WeightTable lambda_exact_motive(const ProjectiveBiArrangement& pb) {
  if (!pb.lambda_defined) throw NotLambdaExact("B_lambda is not well defined");
  auto bc = completed_bicomplex(pb, Color::Lambda);
  auto rep = check_exactness(bc);
  if (!rep.exact) throw NotLambdaExact(rep.first_failure()->label + " is not exact");
  const std::size_t n = pb.n;
  WeightTable table(2 * n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t k = 0; k <= n; ++k) {
    const long i = static_cast<long>(k) + 1, top = static_cast<long>(n - k);
    // C_j = coker(d' : A_{k+2,j} -> A_{k+1,j})
    std::vector<QuotientMap> q;
    std::vector<std::size_t> dims;
    for (long j = 0; j <= top; ++j) {
      auto im = image_of(global_dprime(bc, i + 1, j));
      q.push_back(quotient_structure(slot(bc, i, j).total, im));
      dims.push_back(q.back().projection.rows());
    }
    std::vector<Matrix> maps;
    for (long j = 0; j < top; ++j)
      maps.push_back(q[j + 1].projection * global_ddouble(bc, i, j) * q[j].section);
    auto h = cohomology(dims, maps);
    for (long m = 0; m <= top; ++m) table[k + m][k] = h[m];
  }
  return table;
}

WeightTable mu_exact_motive(const ProjectiveBiArrangement& pb) {
  if (!pb.mu_defined) throw NotMuExact("B_mu is not well defined");
  auto bc = completed_bicomplex(pb, Color::Mu);
  auto rep = check_exactness(bc);
  if (!rep.exact) throw NotMuExact(rep.first_failure()->label + " is not exact");
  const std::size_t n = pb.n;
  WeightTable table(2 * n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t k = 0; k <= n; ++k) {
    const long j = static_cast<long>(n - k) + 1, K = static_cast<long>(k);
    // C'_i = ker(d'' : A_{i,n-k+1} -> A_{i,n-k+2})
    std::vector<Subspace> ker;
    std::vector<std::size_t> dims;
    for (long i = 0; i <= K; ++i) {
      ker.push_back(kernel_basis(global_ddouble(bc, i, j)));
      dims.push_back(ker.back().dim());
    }
    std::vector<Matrix> maps;
    for (long i = 0; i < K; ++i)
      maps.push_back(induced_on_kernel(ker[i + 1], ker[i], global_dprime(bc, i + 1, j)));
    auto h = complex_homology(dims, maps);
    for (long i = 0; i <= K; ++i) table[n + k - i][k] = h[i];
  }
  return table;
}

ProjectiveBiArrangement multizeta_biarrangement(const std::vector<std::size_t>& comp) {
  if (comp.empty()) throw InvalidComposition("empty composition");
  for (std::size_t r = 0; r + 1 < comp.size(); ++r)
    if (comp[r] < 1) throw InvalidComposition("entries must be >= 1");
  if (comp.back() < 2) throw InvalidComposition("last entry must be >= 2");
  std::size_t n = 0;
  std::vector<int> a{0};
  for (auto m : comp) {
    n += m;
    a.push_back(1);
    for (std::size_t z = 1; z < m; ++z) a.push_back(0);
  }
  auto unit = [&](std::size_t k) {
    Vector v(n + 1, Rational(0));
    v[k] = 1;
    return v;
  };
  std::vector<LinearForm> forms;
  forms.push_back({unit(0), "L0", Color::Lambda});
  for (std::size_t k = 1; k <= n; ++k) {
    auto v = unit(k);
    v[0] = -a[k];
    forms.push_back({v, "L" + std::to_string(k), Color::Lambda});
  }
  forms.push_back({unit(1), "M0", Color::Mu});
  for (std::size_t k = 1; k <= n; ++k) {
    auto v = unit(k);
    if (k < n)
      v[k + 1] = -1;
    else
      v[0] = -1;
    forms.push_back({v, "M" + std::to_string(k), Color::Mu});
  }
  // drop forms proportional to an earlier one
  bool dedup = false;
  std::vector<LinearForm> kept;
  for (auto& f : forms) {
    bool dup = false;
    for (const auto& g : kept) {
      Matrix m = Matrix::from_rows({f.coefficients, g.coefficients}, n + 1);
      if (rank(m) < 2) dup = true;
    }
    if (dup)
      dedup = true;
    else
      kept.push_back(std::move(f));
  }

  auto poset = build_poset(std::move(kept), n + 1);
  Coloring coloring(poset.size());
  for (std::size_t s = 1; s < poset.size(); ++s) {
    if (!poset.is_irreducible(s) || s == poset.origin()) continue;
    HyperplaneSet mu = 0;
    for (auto h : members(poset.stratum(s).hyperplanes))
      if (poset.forms()[h].side == Color::Mu) mu |= bit(h);
    coloring[s] = poset.rank_of(mu) == poset.stratum(s).codim ? Color::Mu : Color::Lambda;
  }
  auto b = BiArrangement::with_coloring(std::move(poset), std::move(coloring), true);
  return finish(std::move(b), true, true, dedup);
}

}  // namespace osbc
