#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "osbc/arrangement.hpp"
#include "osbc/projective.hpp"

namespace osbc {

struct HyperplaneLine {
  Color side = Color::Lambda;
  std::string label;
  Vector coefficients;
  std::size_t line = 0;
};

struct ColorLine {
  std::vector<std::string> labels;
  Color color = Color::Lambda;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct ArrangementFile {
  std::size_t dim = 0;
  std::vector<HyperplaneLine> hyperplanes;
  std::vector<ColorLine> colors;
  bool projective = false;
  std::vector<Color> origin_colors;  // empty: both
};

// ParseError kinds: SyntaxError, DimensionMismatch, DuplicateLabel
ArrangementFile parse_arrangement_file(std::string_view text);
std::string serialize_arrangement_file(const ArrangementFile& f);

std::vector<LinearForm> forms_of(const ArrangementFile& f);
// ParseError UnknownStratum for dependent or reducible label sets
ColorAssignment assignment_of(const ArrangementFile& f, const StratumPoset& poset);

BiArrangement to_biarrangement(const ArrangementFile& f);
ProjectiveBiArrangement to_projective(const ArrangementFile& f);

ArrangementFile file_of(const BiArrangement& b);
ArrangementFile file_of(const ProjectiveBiArrangement& pb);

}  // namespace osbc
