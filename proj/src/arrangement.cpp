#include "osbc/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "osbc/error.hpp"

namespace osbc {

const char* color_name(Color c) { return c == Color::Lambda ? "lambda" : "mu"; }

std::vector<std::size_t> members(HyperplaneSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

HyperplaneSet to_set(const std::vector<std::size_t>& idx) {
  HyperplaneSet s = 0;
  for (auto i : idx) s |= bit(i);
  return s;
}

namespace {

Matrix forms_matrix(const std::vector<LinearForm>& forms, HyperplaneSet hs, std::size_t n) {
  auto idx = members(hs);
  Matrix m(idx.size(), n);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = forms[idx[r]].coefficients[c];
  return m;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// components of the matroid on the given hyperplanes, via fundamental circuits
std::vector<HyperplaneSet> matroid_components(const std::vector<LinearForm>& forms,
                                              HyperplaneSet hs, std::size_t n) {
  auto idx = members(hs);
  std::vector<std::size_t> basis;
  Matrix acc(0, n);
  for (auto i : idx) {
    Matrix row = forms_matrix(forms, bit(i), n);
    Matrix trial = Matrix::vstack(acc, row);
    if (rank(trial) == trial.rows()) {
      acc = std::move(trial);
      basis.push_back(i);
    }
  }
  UnionFind uf(forms.size());
  for (auto e : idx) {
    if (std::find(basis.begin(), basis.end(), e) != basis.end()) continue;
    // columns: basis forms then e; its one-dimensional kernel is the fundamental circuit
    Matrix cols = Matrix::vstack(acc, forms_matrix(forms, bit(e), n)).transposed();
    auto k = kernel_basis(cols);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (sgn(k.basis()(0, b)) != 0) uf.unite(basis[b], e);
  }
  std::map<std::size_t, HyperplaneSet> comps;
  for (auto i : idx) comps[uf.find(i)] |= bit(i);
  std::vector<HyperplaneSet> out;
  for (auto& [root, set] : comps) out.push_back(set);
  return out;
}

bool lex_less(HyperplaneSet a, HyperplaneSet b) { return members(a) < members(b); }

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> StratumPoset::cover_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < strata_.size(); ++s)
    for (auto t : up_[s]) out.emplace_back(s, t);
  return out;
}

std::optional<std::size_t> StratumPoset::origin() const {
  if (!strata_.empty() && strata_.back().codim == ambient_dim_) return strata_.size() - 1;
  return std::nullopt;
}

std::size_t StratumPoset::max_codim() const { return strata_.back().codim; }

std::size_t StratumPoset::rank_of(HyperplaneSet hs) const {
  return rank(forms_matrix(forms_, hs, ambient_dim_));
}

HyperplaneSet StratumPoset::flat_of(HyperplaneSet hs) const {
  auto sp = Subspace::span(forms_matrix(forms_, hs, ambient_dim_));
  HyperplaneSet flat = 0;
  for (std::size_t j = 0; j < forms_.size(); ++j)
    if (sp.contains(forms_[j].coefficients)) flat |= bit(j);
  return flat;
}

std::size_t StratumPoset::stratum_of(HyperplaneSet hs) const {
  return by_flat_.at(flat_of(hs));
}

std::optional<std::size_t> StratumPoset::find_flat(HyperplaneSet flat) const {
  auto it = by_flat_.find(flat);
  if (it == by_flat_.end()) return std::nullopt;
  return it->second;
}

std::string StratumPoset::label(std::size_t s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : members(strata_.at(s).hyperplanes)) {
    if (!first) out += ",";
    out += forms_[i].label;
    first = false;
  }
  return out + "}";
}

StratumPoset build_poset(std::vector<LinearForm> forms) {
  std::size_t n = forms.empty() ? 0 : forms[0].coefficients.size();
  return build_poset(std::move(forms), n);
}

StratumPoset build_poset(std::vector<LinearForm> forms, std::size_t n) {
  if (forms.size() > kMaxHyperplanes) throw TooManyHyperplanes(std::to_string(forms.size()));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i];
    if (f.coefficients.size() != n)
      throw DimensionError("form " + f.label + " has " + std::to_string(f.coefficients.size()) +
                           " coefficients, expected " + std::to_string(n));
    if (std::all_of(f.coefficients.begin(), f.coefficients.end(),
                    [](const Rational& x) { return sgn(x) == 0; }))
      throw ZeroForm(f.label);
    for (std::size_t j = 0; j < i; ++j) {
      Matrix two = Matrix::vstack(Matrix::from_rows({forms[j].coefficients}, n),
                                  Matrix::from_rows({f.coefficients}, n));
      if (rank(two) == 1) throw DuplicateHyperplane(forms[j].label + " and " + f.label);
    }
  }

  StratumPoset p;
  p.ambient_dim_ = n;
  p.forms_ = std::move(forms);
  const HyperplaneSet all = p.forms_.empty() ? 0 : (p.forms_.size() == 64 ? ~HyperplaneSet{0}
                                                    : bit(p.forms_.size()) - 1);

  std::vector<Stratum> found{Stratum{Subspace(n), 0, 0}};
  std::unordered_map<HyperplaneSet, std::size_t> seen{{0, 0}};
  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (auto s : level) {
      for (auto i : members(all & ~found[s].hyperplanes)) {
        Matrix gens = Matrix::vstack(found[s].orthogonal.basis(),
                                     Matrix::from_rows({p.forms_[i].coefficients}, n));
        auto sp = Subspace::span(gens);
        HyperplaneSet flat = found[s].hyperplanes | bit(i);
        for (auto j : members(all & ~flat))
          if (sp.contains(p.forms_[j].coefficients)) flat |= bit(j);
        if (seen.count(flat)) continue;
        seen.emplace(flat, found.size());
        next.push_back(found.size());
        found.push_back(Stratum{sp, flat, sp.dim()});
      }
    }
    level = std::move(next);
  }

  std::sort(found.begin(), found.end(), [](const Stratum& a, const Stratum& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return lex_less(a.hyperplanes, b.hyperplanes);
  });
  p.strata_ = std::move(found);
  for (std::size_t s = 0; s < p.strata_.size(); ++s) p.by_flat_[p.strata_[s].hyperplanes] = s;

  p.up_.assign(p.strata_.size(), {});
  p.down_.assign(p.strata_.size(), {});
  for (std::size_t s = 0; s < p.strata_.size(); ++s) {
    std::vector<std::size_t> below;
    for (auto i : members(all & ~p.strata_[s].hyperplanes)) {
      HyperplaneSet flat = p.flat_of(p.strata_[s].hyperplanes | bit(i));
      below.push_back(p.by_flat_.at(flat));
    }
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    for (auto t : below) {
      p.down_[s].push_back(t);
      p.up_[t].push_back(s);
    }
  }
  for (auto& u : p.up_) std::sort(u.begin(), u.end());

  p.factors_.assign(p.strata_.size(), {});
  for (std::size_t s = 1; s < p.strata_.size(); ++s) {
    for (auto comp : matroid_components(p.forms_, p.strata_[s].hyperplanes, n))
      p.factors_[s].push_back(p.by_flat_.at(p.flat_of(comp)));
    std::sort(p.factors_[s].begin(), p.factors_[s].end());
  }
  return p;
}

std::vector<HyperplaneSet> matroid_circuits(const StratumPoset& poset, std::size_t cap) {
  const std::size_t k = poset.forms().size();
  if (k > cap)
    throw CircuitCapExceeded(std::to_string(k) + " hyperplanes exceed the cap of " +
                             std::to_string(cap));
  std::vector<HyperplaneSet> found;
  const std::size_t max_size = std::min(k, poset.ambient_dim() + 1);
  for (std::size_t size = 1; size <= max_size; ++size) {
    // enumerate size-subsets in colex order
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      HyperplaneSet c = to_set(pick);
      bool has_smaller = std::any_of(found.begin(), found.end(),
                                     [&](HyperplaneSet f) { return is_subset(f, c); });
      if (!has_smaller && poset.rank_of(c) + 1 == size) found.push_back(c);
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t q = pos; q < size; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  return found;
}

std::vector<std::size_t> decompose_irreducible(const StratumPoset& poset, std::size_t s) {
  return poset.factors(s);
}

bool is_good_stratum(const StratumPoset& poset, std::size_t z) {
  const auto& zs = poset.stratum(z);
  HyperplaneSet all = 0;
  for (std::size_t i = 0; i < poset.forms().size(); ++i) all |= bit(i);
  for (std::size_t u = 0; u < poset.size(); ++u) {
    const auto& us = poset.stratum(u);
    if ((zs.hyperplanes | us.hyperplanes) != all) continue;
    if (poset.rank_of(zs.hyperplanes | us.hyperplanes) == zs.codim + us.codim) return true;
  }
  return false;
}

std::optional<ColoringViolation> validate_coloring(const StratumPoset& poset,
                                                   const Coloring& coloring,
                                                   bool origin_optional) {
  using K = ColoringViolation::Kind;
  if (coloring.size() != poset.size())
    return ColoringViolation{K::MissingColor, 0, "coloring has the wrong number of entries"};
  for (std::size_t s = 0; s < poset.size(); ++s) {
    const auto& c = coloring[s];
    if (!poset.is_irreducible(s)) {
      if (c) return ColoringViolation{K::ReducibleColored, s, poset.label(s) + " is not irreducible"};
      continue;
    }
    if (!c) {
      if (origin_optional && poset.origin() == s) continue;
      return ColoringViolation{K::MissingColor, s, poset.label(s) + " has no color"};
    }
    if (poset.stratum(s).codim == 1) {
      auto h = members(poset.stratum(s).hyperplanes).front();
      if (poset.forms()[h].side != *c)
        return ColoringViolation{K::SideMismatch, s,
                                 poset.forms()[h].label + " colored against its side"};
    }
  }
  return std::nullopt;
}

Coloring extreme_coloring(const StratumPoset& poset, Color side) {
  Coloring c(poset.size());
  for (std::size_t s = 0; s < poset.size(); ++s) {
    if (!poset.is_irreducible(s)) continue;
    bool inside = false;
    for (auto h : members(poset.stratum(s).hyperplanes))
      if (poset.forms()[h].side == side) inside = true;
    c[s] = inside ? side : opposite(side);
  }
  return c;
}

BiArrangement::BiArrangement(StratumPoset poset, Coloring coloring, bool origin_optional, int)
    : poset_(std::move(poset)), coloring_(std::move(coloring)), origin_optional_(origin_optional) {
  if (auto v = validate_coloring(poset_, coloring_, origin_optional_))
    throw ColoringInvalid(v->message);
}

BiArrangement BiArrangement::with_coloring(StratumPoset poset, Coloring coloring,
                                           bool origin_optional) {
  return BiArrangement(std::move(poset), std::move(coloring), origin_optional, 0);
}

namespace {

Coloring from_assignment(const StratumPoset& p, const ColorAssignment& a) {
  Coloring c(p.size());
  for (std::size_t s = 0; s < p.size(); ++s)
    if (p.stratum(s).codim == 1)
      c[s] = p.forms()[members(p.stratum(s).hyperplanes).front()].side;
  for (auto& [s, col] : a) {
    if (s >= p.size()) throw ColoringInvalid("unknown stratum index " + std::to_string(s));
    if (s == 0) throw ColoringInvalid("the whole space carries no color");
    if (!p.is_irreducible(s)) continue;
    if (p.stratum(s).codim == 1 && *c[s] != col)
      throw ColoringInvalid("SideMismatch: " + p.label(s));
    c[s] = col;
  }
  for (auto& [s, col] : a) {
    if (p.is_irreducible(s)) continue;
    std::optional<Color> common;
    bool mixed = false;
    for (auto f : p.factors(s)) {
      if (!c[f]) { mixed = true; break; }
      if (common && *common != *c[f]) mixed = true;
      common = c[f];
    }
    if (!mixed && common && *common != col)
      throw KunnethViolation(p.label(s) + " colored " + color_name(col) +
                             " but all its factors are " + color_name(*common));
  }
  return c;
}

}  // namespace

BiArrangement::BiArrangement(StratumPoset poset, const ColorAssignment& assignment,
                             bool origin_optional)
    : poset_(std::move(poset)), origin_optional_(origin_optional) {
  coloring_ = from_assignment(poset_, assignment);
  if (auto v = validate_coloring(poset_, coloring_, origin_optional_))
    throw ColoringInvalid(v->message);
}

BiArrangement::BiArrangement(std::vector<LinearForm> forms, const ColorAssignment& assignment,
                             bool origin_optional)
    : BiArrangement(build_poset(std::move(forms)), assignment, origin_optional) {}

std::optional<Color> BiArrangement::effective_color(std::size_t s, MixedPolicy policy) const {
  if (s == 0) return std::nullopt;
  if (poset_.is_irreducible(s)) return coloring_[s];
  std::optional<Color> common;
  for (auto f : poset_.factors(s)) {
    if (common && *common != *coloring_[f])
      return policy == MixedPolicy::Lambda ? Color::Lambda : Color::Mu;
    common = coloring_[f];
  }
  return common;
}

bool BiArrangement::is_mixed(std::size_t s) const {
  if (s == 0 || poset_.is_irreducible(s)) return false;
  const auto& fs = poset_.factors(s);
  for (auto f : fs)
    if (coloring_[f] != coloring_[fs.front()]) return true;
  return false;
}

std::vector<std::size_t> BiArrangement::side_indices(Color side) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < forms().size(); ++i)
    if (forms()[i].side == side) out.push_back(i);
  return out;
}

std::size_t BiArrangement::side_position(std::size_t h) const {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < h; ++i)
    if (forms()[i].side == forms()[h].side) ++pos;
  return pos;
}

std::vector<Circuit> circuits(const BiArrangement& b, std::size_t cap) {
  std::vector<Circuit> out;
  for (auto c : matroid_circuits(b.poset(), cap)) {
    Circuit ci;
    ci.support = c;
    for (auto h : members(c)) {
      if (b.forms()[h].side == Color::Lambda)
        ci.lambda_part.push_back(b.side_position(h));
      else
        ci.mu_part.push_back(b.side_position(h));
    }
    out.push_back(std::move(ci));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BiArrangement dual(const BiArrangement& b) {
  auto forms = b.forms();
  for (auto& f : forms) f.side = opposite(f.side);
  auto p = build_poset(std::move(forms), b.poset().ambient_dim());
  Coloring c = b.coloring();
  for (auto& x : c)
    if (x) x = opposite(*x);
  return BiArrangement::with_coloring(std::move(p), std::move(c), b.origin_optional());
}

BiArrangement product(const BiArrangement& a, const BiArrangement& b) {
  const std::size_t na = a.poset().ambient_dim(), nb = b.poset().ambient_dim();
  std::vector<LinearForm> forms;
  for (const auto& f : a.forms()) {
    LinearForm g = f;
    g.coefficients.resize(na + nb);
    forms.push_back(std::move(g));
  }
  for (const auto& f : b.forms()) {
    LinearForm g = f;
    g.coefficients.assign(na, Rational(0));
    g.coefficients.insert(g.coefficients.end(), f.coefficients.begin(), f.coefficients.end());
    forms.push_back(std::move(g));
  }
  const std::size_t ka = a.forms().size();
  auto p = build_poset(std::move(forms), na + nb);
  Coloring c(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (!p.is_irreducible(s)) continue;
    HyperplaneSet hs = p.stratum(s).hyperplanes;
    HyperplaneSet low = hs & (ka == 64 ? ~HyperplaneSet{0} : bit(ka) - 1);
    if (low == hs)
      c[s] = a.color(*a.poset().find_flat(low));
    else
      c[s] = b.color(*b.poset().find_flat(hs >> ka));
  }
  return BiArrangement::with_coloring(std::move(p), std::move(c));
}

}  // namespace osbc
