#pragma once

#include "graphent/classify.hpp"
#include "graphent/cycles.hpp"
#include "graphent/leavitt.hpp"

#include <json.hpp>

#include <string>

namespace graphent {

/// %.<digits>g rendering used by every human-facing number.
std::string format_number(double value, int digits);

nlohmann::json to_json(const GrowthTriple &t);
GrowthTriple growth_triple_from_json(const nlohmann::json &j);

/// {"graph", "vertices", "edges", "path", "leavitt"}.
nlohmann::json classification_json(const std::string &graph_name, const Graph &g,
                                   const Classification &c);
Classification classification_from_json(const nlohmann::json &j);

/// {graph, k_max, h_last, h_ratio, entropy_path, entropy_extended, sandwich_ok}.
nlohmann::json leavitt_report_json(const std::string &graph_name, const EntropyEstimate &est,
                                   double eps);

nlohmann::json cycles_json(const Graph &g, const std::vector<Cycle> &cycles);

} // namespace graphent
