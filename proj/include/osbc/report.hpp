#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "osbc/arrangement.hpp"
#include "osbc/bicomplex.hpp"
#include "osbc/blowup.hpp"
#include "osbc/projective.hpp"

namespace osbc {

using Json = nlohmann::ordered_json;

Json analyze_report(const BiArrangement& b, std::size_t cap);
Json oscomplex_report(const Bicomplex& bc);
Json check_report(const BiArrangement& b, const Bicomplex& bc, std::size_t cap);
Json projective_report(const ProjectiveBiArrangement& pb);
Json weight_table_report(const WeightTable& table, const std::string& method);
Json blowup_report(const AbstractStratifiedBiArrangement& start, const std::vector<BlowupStep>& steps,
                   bool trace);
Json error_report(const std::string& kind, const std::string& message);

// one "path<TAB>value" line per leaf
std::string to_tsv(const Json& doc);

}  // namespace osbc
