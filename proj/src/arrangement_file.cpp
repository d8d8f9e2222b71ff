#include "osbc/arrangement_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "osbc/error.hpp"

namespace osbc {

namespace {

struct Token {
  std::string text;
  std::size_t col = 0;  // 1-based
};

// whitespace split; ':', '{', '}' and ',' stand alone
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == ':' || c == '{' || c == '}' || c == ',') {
      out.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           std::string_view(":{},#").find(line[j]) == std::string_view::npos)
      ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(const std::string& kind, std::size_t line, std::size_t col,
                       const std::string& what) {
  throw ParseError(kind, line, col, what);
}

std::optional<Color> color_word(const std::string& w) {
  if (w == "lambda") return Color::Lambda;
  if (w == "mu") return Color::Mu;
  return std::nullopt;
}

bool is_label(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
           c == '\'';
  });
}

}  // namespace

ArrangementFile parse_arrangement_file(std::string_view text) {
  ArrangementFile f;
  bool have_dim = false;
  std::set<std::string> labels;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const auto& head = tok[0];
    auto end_col = line.size() + 1;
    auto at = [&](std::size_t k) { return k < tok.size() ? tok[k].col : end_col; };

    if (!have_dim && head.text != "dim") fail("SyntaxError", lineno, head.col, "expected 'dim N' first");
    if (head.text == "dim") {
      if (have_dim) fail("SyntaxError", lineno, head.col, "second dim line");
      if (tok.size() != 2) fail("SyntaxError", lineno, at(tok.size() > 2 ? 2 : 1), "expected 'dim N'");
      const auto& w = tok[1].text;
      if (!std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          w.size() > 3)
        fail("SyntaxError", lineno, tok[1].col, "bad dimension '" + w + "'");
      f.dim = std::stoul(w);
      have_dim = true;
    } else if (head.text == "L" || head.text == "M") {
      HyperplaneLine h;
      h.side = head.text == "L" ? Color::Lambda : Color::Mu;
      h.line = lineno;
      if (tok.size() < 2 || !is_label(tok[1].text)) fail("SyntaxError", lineno, at(1), "expected a label");
      h.label = tok[1].text;
      if (tok.size() < 3 || tok[2].text != ":") fail("SyntaxError", lineno, at(2), "expected ':'");
      for (std::size_t k = 3; k < tok.size(); ++k) {
        try {
          h.coefficients.push_back(parse_rational(tok[k].text));
        } catch (const std::exception&) {
          fail("SyntaxError", lineno, tok[k].col, "bad rational '" + tok[k].text + "'");
        }
      }
      if (h.coefficients.size() != f.dim)
        fail("DimensionMismatch", lineno, at(3),
             std::to_string(h.coefficients.size()) + " coefficients under dim " + std::to_string(f.dim));
      if (!labels.insert(h.label).second) fail("DuplicateLabel", lineno, tok[1].col, "label " + h.label);
      f.hyperplanes.push_back(std::move(h));
    } else if (head.text == "color") {
      ColorLine c;
      c.line = lineno;
      c.column = head.col;
      std::size_t k = 1;
      if (k >= tok.size() || tok[k].text != "{") fail("SyntaxError", lineno, at(k), "expected '{'");
      ++k;
      while (true) {
        if (k >= tok.size() || !is_label(tok[k].text)) fail("SyntaxError", lineno, at(k), "expected a label");
        c.labels.push_back(tok[k].text);
        ++k;
        if (k < tok.size() && tok[k].text == ",") {
          ++k;
          continue;
        }
        if (k < tok.size() && tok[k].text == "}") break;
        fail("SyntaxError", lineno, at(k), "expected ',' or '}'");
      }
      ++k;
      if (k >= tok.size()) fail("SyntaxError", lineno, at(k), "expected lambda or mu");
      auto col = color_word(tok[k].text);
      if (!col) fail("SyntaxError", lineno, tok[k].col, "expected lambda or mu");
      c.color = *col;
      if (k + 1 < tok.size()) fail("SyntaxError", lineno, tok[k + 1].col, "trailing input");
      f.colors.push_back(std::move(c));
    } else if (head.text == "projective") {
      if (tok.size() != 1) fail("SyntaxError", lineno, tok[1].col, "trailing input");
      f.projective = true;
    } else if (head.text == "origin") {
      if (!f.projective) fail("SyntaxError", lineno, head.col, "'origin' needs 'projective' first");
      if (tok.size() != 2) fail("SyntaxError", lineno, at(tok.size() > 2 ? 2 : 1), "expected lambda or mu");
      auto col = color_word(tok[1].text);
      if (!col) fail("SyntaxError", lineno, tok[1].col, "expected lambda or mu");
      if (std::find(f.origin_colors.begin(), f.origin_colors.end(), *col) == f.origin_colors.end())
        f.origin_colors.push_back(*col);
    } else {
      fail("SyntaxError", lineno, head.col, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_dim) fail("SyntaxError", lineno, 1, "missing 'dim N'");
  return f;
}

std::string serialize_arrangement_file(const ArrangementFile& f) {
  std::string out = "dim " + std::to_string(f.dim) + "\n";
  for (const auto& h : f.hyperplanes) {
    out += (h.side == Color::Lambda ? "L " : "M ") + h.label + " :";
    for (const auto& q : h.coefficients) out += " " + to_string(q);
    out += "\n";
  }
  for (const auto& c : f.colors) {
    out += "color {";
    for (std::size_t k = 0; k < c.labels.size(); ++k) out += (k ? "," : "") + c.labels[k];
    out += std::string("} ") + color_name(c.color) + "\n";
  }
  if (f.projective) {
    out += "projective\n";
    for (auto c : f.origin_colors) out += std::string("origin ") + color_name(c) + "\n";
  }
  return out;
}

std::vector<LinearForm> forms_of(const ArrangementFile& f) {
  std::vector<LinearForm> out;
  for (const auto& h : f.hyperplanes) out.push_back({h.coefficients, h.label, h.side});
  return out;
}

ColorAssignment assignment_of(const ArrangementFile& f, const StratumPoset& poset) {
  std::map<std::string, std::size_t> index;
  for (std::size_t h = 0; h < poset.forms().size(); ++h) index[poset.forms()[h].label] = h;
  ColorAssignment out;
  for (const auto& c : f.colors) {
    HyperplaneSet hs = 0;
    for (const auto& l : c.labels) {
      auto it = index.find(l);
      if (it == index.end()) fail("UnknownStratum", c.line, c.column, "unknown label " + l);
      hs |= bit(it->second);
    }
    if (poset.rank_of(hs) != count(hs))
      fail("UnknownStratum", c.line, c.column, "label set is dependent");
    auto s = poset.stratum_of(hs);
    if (!poset.is_irreducible(s))
      fail("UnknownStratum", c.line, c.column, poset.label(s) + " is not irreducible");
    if (auto it = out.find(s); it != out.end() && it->second != c.color)
      fail("UnknownStratum", c.line, c.column, poset.label(s) + " colored twice");
    out[s] = c.color;
  }
  return out;
}

BiArrangement to_biarrangement(const ArrangementFile& f) {
  auto poset = build_poset(forms_of(f), f.dim);
  auto a = assignment_of(f, poset);
  return BiArrangement(std::move(poset), a, false);
}

ProjectiveBiArrangement to_projective(const ArrangementFile& f) {
  if (!f.projective) throw NotProjective("file has no 'projective' directive");
  auto forms = forms_of(f);
  auto poset = build_poset(forms, f.dim);
  auto a = assignment_of(f, poset);
  bool lam = f.origin_colors.empty(), mu = f.origin_colors.empty();
  for (auto c : f.origin_colors) (c == Color::Lambda ? lam : mu) = true;
  return make_projective(std::move(forms), a, lam, mu);
}

namespace {

ArrangementFile base_file(const BiArrangement& b) {
  const auto& p = b.poset();
  ArrangementFile f;
  f.dim = p.ambient_dim();
  for (const auto& form : p.forms()) f.hyperplanes.push_back({form.side, form.label, form.coefficients, 0});
  for (std::size_t s = 1; s < p.size(); ++s) {
    auto c = b.color(s);
    if (!c || p.stratum(s).codim < 2) continue;
    // greedy independent subset in hyperplane order
    HyperplaneSet pick = 0;
    for (auto h : members(p.stratum(s).hyperplanes))
      if (p.rank_of(pick | bit(h)) == count(pick) + 1) pick |= bit(h);
    ColorLine line;
    for (auto h : members(pick)) line.labels.push_back(p.forms()[h].label);
    line.color = *c;
    f.colors.push_back(std::move(line));
  }
  return f;
}

}  // namespace

ArrangementFile file_of(const BiArrangement& b) { return base_file(b); }

ArrangementFile file_of(const ProjectiveBiArrangement& pb) {
  auto f = base_file(pb.arrangement);
  f.projective = true;
  if (pb.lambda_requested != pb.mu_requested)
    f.origin_colors.push_back(pb.lambda_requested ? Color::Lambda : Color::Mu);
  return f;
}

}  // namespace osbc
