#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "osbc/linalg.hpp"

namespace osbc {

enum class Color { Lambda, Mu };

inline Color opposite(Color c) { return c == Color::Lambda ? Color::Mu : Color::Lambda; }
const char* color_name(Color c);

// bit i set <=> hyperplane i
using HyperplaneSet = std::uint64_t;
constexpr std::size_t kMaxHyperplanes = 64;

inline HyperplaneSet bit(std::size_t i) { return HyperplaneSet{1} << i; }
inline std::size_t count(HyperplaneSet s) { return static_cast<std::size_t>(std::popcount(s)); }
inline bool is_subset(HyperplaneSet a, HyperplaneSet b) { return (a & ~b) == 0; }
std::vector<std::size_t> members(HyperplaneSet s);
HyperplaneSet to_set(const std::vector<std::size_t>& idx);

struct LinearForm {
  Vector coefficients;
  std::string label;
  Color side = Color::Lambda;
};

struct Stratum {
  Subspace orthogonal;
  HyperplaneSet hyperplanes = 0;
  std::size_t codim = 0;
};

struct Circuit {
  std::vector<std::size_t> lambda_part;  // positions among the lambda-side forms
  std::vector<std::size_t> mu_part;      // positions among the mu-side forms
  HyperplaneSet support = 0;             // global hyperplane indices
  auto operator<=>(const Circuit& o) const {
    if (auto c = lambda_part <=> o.lambda_part; c != 0) return c;
    return mu_part <=> o.mu_part;
  }
  bool operator==(const Circuit& o) const {
    return lambda_part == o.lambda_part && mu_part == o.mu_part;
  }
};

class StratumPoset {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const std::vector<Stratum>& strata() const { return strata_; }
  const Stratum& stratum(std::size_t s) const { return strata_.at(s); }
  std::size_t size() const { return strata_.size(); }

  // up(s): strata T with s covered by T (s inside T, one codim less); down is the reverse
  const std::vector<std::size_t>& up(std::size_t s) const { return up_.at(s); }
  const std::vector<std::size_t>& down(std::size_t s) const { return down_.at(s); }
  std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

  std::size_t whole_space() const { return 0; }
  std::optional<std::size_t> origin() const;
  std::size_t max_codim() const;

  // small lies inside big
  bool inside(std::size_t small, std::size_t big) const {
    return is_subset(strata_[big].hyperplanes, strata_[small].hyperplanes);
  }
  std::size_t rank_of(HyperplaneSet hs) const;
  HyperplaneSet flat_of(HyperplaneSet hs) const;
  // stratum cut out by the given hyperplanes
  std::size_t stratum_of(HyperplaneSet hs) const;
  std::optional<std::size_t> find_flat(HyperplaneSet flat) const;

  const std::vector<std::size_t>& factors(std::size_t s) const { return factors_.at(s); }
  bool is_irreducible(std::size_t s) const { return s != 0 && factors_.at(s).size() == 1; }

  std::string label(std::size_t s) const;

 private:
  friend StratumPoset build_poset(std::vector<LinearForm> forms, std::size_t ambient_dim);

  std::size_t ambient_dim_ = 0;
  std::vector<LinearForm> forms_;
  std::vector<Stratum> strata_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> factors_;
  std::unordered_map<HyperplaneSet, std::size_t> by_flat_;
};

StratumPoset build_poset(std::vector<LinearForm> forms, std::size_t ambient_dim);
// ambient dimension taken from the first form
StratumPoset build_poset(std::vector<LinearForm> forms);

std::vector<HyperplaneSet> matroid_circuits(const StratumPoset& poset, std::size_t cap = 12);
std::vector<std::size_t> decompose_irreducible(const StratumPoset& poset, std::size_t s);
bool is_good_stratum(const StratumPoset& poset, std::size_t z);

// colors indexed by stratum; only irreducible strict strata carry one
using Coloring = std::vector<std::optional<Color>>;
// user-facing assignment, may mention reducible strata (checked then dropped)
using ColorAssignment = std::map<std::size_t, Color>;

struct ColoringViolation {
  enum class Kind { MissingColor, SideMismatch, ReducibleColored };
  Kind kind;
  std::size_t stratum;
  std::string message;
};

std::optional<ColoringViolation> validate_coloring(const StratumPoset& poset,
                                                   const Coloring& coloring,
                                                   bool origin_optional = false);

Coloring extreme_coloring(const StratumPoset& poset, Color side);

enum class MixedPolicy { Lambda, Mu };

class BiArrangement {
 public:
  BiArrangement(StratumPoset poset, const ColorAssignment& assignment,
                bool origin_optional = false);
  BiArrangement(std::vector<LinearForm> forms, const ColorAssignment& assignment,
                bool origin_optional = false);
  static BiArrangement with_coloring(StratumPoset poset, Coloring coloring,
                                     bool origin_optional = false);

  const StratumPoset& poset() const { return poset_; }
  const std::vector<LinearForm>& forms() const { return poset_.forms(); }
  const Coloring& coloring() const { return coloring_; }
  bool origin_optional() const { return origin_optional_; }

  std::optional<Color> color(std::size_t s) const { return coloring_.at(s); }
  // colors of reducible strata follow their factors; mixed factors use the policy
  std::optional<Color> effective_color(std::size_t s,
                                       MixedPolicy policy = MixedPolicy::Lambda) const;
  bool is_mixed(std::size_t s) const;

  std::vector<std::size_t> side_indices(Color side) const;
  // position of a hyperplane among the forms of its side
  std::size_t side_position(std::size_t hyperplane) const;

 private:
  BiArrangement(StratumPoset poset, Coloring coloring, bool origin_optional, int);
  StratumPoset poset_;
  Coloring coloring_;
  bool origin_optional_;
};

std::vector<Circuit> circuits(const BiArrangement& b, std::size_t cap = 12);

BiArrangement dual(const BiArrangement& b);
BiArrangement product(const BiArrangement& a, const BiArrangement& b);

}  // namespace osbc
