#pragma once

#include "json.hpp"
#include "msv/cells.hpp"
#include "msv/complexity.hpp"
#include "msv/graph_cone.hpp"
#include "msv/ideal.hpp"
#include "msv/survey.hpp"

namespace msv {

// Diagrams serialize to a sorted array of [row, col] pairs.
nlohmann::json to_json(const CellSet& cells);
CellSet cellset_from_json(const nlohmann::json& j, int n);

// {"rows":[...], "cols":[...], "edges":[[a,b],...]} with sorted entries.
nlohmann::json to_json(const BipartiteGraph& g);

nlohmann::json to_json(const ComplexityReport& r);
ComplexityReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankCondition& rc);
nlohmann::json to_json(const MinorDescriptor& m);

nlohmann::json to_json(const SpectrumResult& s);
SpectrumResult spectrum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationOutcome& v);

}  // namespace msv
