#include "corpus.hpp"

#include <random>

#include "osbc/bicomplex.hpp"
#include "osbc/error.hpp"

namespace osbc::testing {

namespace {

std::vector<LinearForm> make_forms(const std::vector<std::vector<long>>& rows,
                                   const std::vector<Color>& sides, const std::string& prefix) {
  std::vector<LinearForm> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Vector v;
    for (auto x : rows[k]) v.push_back(Rational(x));
    out.push_back({v, prefix + std::to_string(k + 1), sides[k]});
  }
  return out;
}

std::optional<BiArrangement> random_member(std::mt19937& rng, std::size_t n, std::size_t m,
                                           const std::string& prefix, bool essential) {
  std::uniform_int_distribution<int> coef(-1, 1), coin(0, 1);
  std::vector<std::vector<long>> rows(m, std::vector<long>(n));
  std::vector<Color> sides(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (auto& x : rows[k]) x = coef(rng);
    sides[k] = coin(rng) ? Color::Lambda : Color::Mu;
  }
  try {
    auto poset = build_poset(make_forms(rows, sides, prefix), n);
    if (essential && !poset.origin()) return std::nullopt;
    Coloring c(poset.size());
    for (std::size_t s = 1; s < poset.size(); ++s) {
      if (!poset.is_irreducible(s)) continue;
      if (poset.stratum(s).codim == 1)
        c[s] = poset.forms()[members(poset.stratum(s).hyperplanes).front()].side;
      else
        c[s] = coin(rng) ? Color::Lambda : Color::Mu;
    }
    return BiArrangement::with_coloring(std::move(poset), std::move(c));
  } catch (const ZeroForm&) {
    return std::nullopt;
  } catch (const DuplicateHyperplane&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<BiArrangement> random_corpus(const CorpusOptions& opt) {
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> dim(opt.min_dim, opt.max_dim), nforms(opt.min_forms, opt.max_forms);
  std::vector<BiArrangement> out;
  while (out.size() < opt.count) {
    auto b = random_member(rng, dim(rng), nforms(rng), "H", opt.essential_only);
    if (!b) continue;
    if (opt.tame_only && !check_tameness(*b).tame) continue;
    out.push_back(std::move(*b));
  }
  return out;
}

std::vector<std::pair<BiArrangement, BiArrangement>> product_pairs(std::uint32_t seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 2), nforms(1, 3);
  std::vector<std::pair<BiArrangement, BiArrangement>> out;
  while (out.size() < count) {
    auto a = random_member(rng, dim(rng), nforms(rng), "A", false);
    auto b = random_member(rng, dim(rng), nforms(rng), "B", false);
    if (a && b) out.emplace_back(std::move(*a), std::move(*b));
  }
  return out;
}

BiArrangement from_rows(const std::vector<std::vector<long>>& rows, const std::vector<Color>& sides,
                        const ColorAssignment& colors, bool origin_optional) {
  auto n = rows.front().size();
  return BiArrangement(build_poset(make_forms(rows, sides, "H"), n), colors, origin_optional);
}

StratumPoset poset_of(const std::vector<std::vector<long>>& rows, const std::vector<Color>& sides) {
  return build_poset(make_forms(rows, sides, "H"), rows.front().size());
}

BiArrangement constant_coloring(const std::vector<std::vector<long>>& rows, Color side) {
  std::vector<Color> sides(rows.size(), side);
  auto poset = build_poset(make_forms(rows, sides, "H"), rows.front().size());
  return BiArrangement::with_coloring(poset, extreme_coloring(poset, side));
}

}  // namespace osbc::testing
