#include "msv/serialize.hpp"

#include <string>

namespace msv {

using nlohmann::json;

json to_json(const CellSet& cells) {
  json out = json::array();
  for (Cell c : cells.cells()) out.push_back(json::array({c.row, c.col}));
  return out;
}

CellSet cellset_from_json(const json& j, int n) {
  CellSet out(n);
  if (!j.is_array()) {
    throw std::invalid_argument("diagram JSON must be an array of pairs");
  }
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("diagram entries must be [row, col] pairs");
    }
    out.insert(pair[0].get<int>(), pair[1].get<int>());
  }
  return out;
}

json to_json(const BipartiteGraph& g) {
  json edges = json::array();
  for (const Cell& e : g.edges) edges.push_back(json::array({e.row, e.col}));
  return json{{"rows", g.rows}, {"cols", g.cols}, {"edges", edges}};
}

json to_json(const ComplexityReport& r) {
  return json{{"permutation", r.w.to_string()},
              {"n", r.n},
              {"card_opposite_rothe", r.card_opposite_rothe},
              {"card_dominant", r.card_dominant},
              {"card_southwest", r.card_southwest},
              {"card_l", r.card_l},
              {"card_l_prime", r.card_l_prime},
              {"vertex_count", r.vertex_count},
              {"component_count", r.component_count},
              {"cone_dim", r.cone_dim},
              {"dim_msv", r.dim_msv},
              {"dim_y", r.dim_y},
              {"length", r.length},
              {"complexity", r.complexity}};
}

ComplexityReport report_from_json(const json& j) {
  ComplexityReport r{
      Permutation::parse(j.at("permutation").get<std::string>()),
      j.at("n").get<int>(),
      j.at("card_opposite_rothe").get<int>(),
      j.at("card_dominant").get<int>(),
      j.at("card_southwest").get<int>(),
      j.at("card_l").get<int>(),
      j.at("card_l_prime").get<int>(),
      j.at("vertex_count").get<int>(),
      j.at("component_count").get<int>(),
      j.at("cone_dim").get<int>(),
      j.at("dim_msv").get<int>(),
      j.at("dim_y").get<int>(),
      j.at("length").get<int>(),
      j.at("complexity").get<int>()};
  return r;
}

json to_json(const RankCondition& rc) {
  return json{{"cell", json::array({rc.cell.row, rc.cell.col})},
              {"bound", rc.bound}};
}

json to_json(const MinorDescriptor& m) {
  json zeros = json::array();
  for (const Cell& c : m.zero_cells) zeros.push_back(json::array({c.row, c.col}));
  return json{{"rows", m.rows},
              {"cols", m.cols},
              {"size", m.size()},
              {"zero_cells", zeros}};
}

json to_json(const SpectrumResult& s) {
  json witnesses = json::object();
  for (const auto& [d, w] : s.witnesses) {
    witnesses[std::to_string(d)] = w.to_string();
  }
  json maximizers = json::array();
  for (const Permutation& m : s.maximizers) maximizers.push_back(m.to_string());
  return json{{"schema", 1},
              {"n", s.n},
              {"achieved", s.achieved},
              {"witnesses", witnesses},
              {"max_complexity", s.max_complexity},
              {"maximizers", maximizers},
              {"total_enumerated", s.total_enumerated}};
}

SpectrumResult spectrum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("schema")) {
    throw std::runtime_error("spectrum JSON lacks a schema tag");
  }
  if (j.at("schema").get<int>() != 1) {
    throw std::runtime_error("unsupported spectrum schema version " +
                             j.at("schema").dump());
  }
  SpectrumResult s;
  s.n = j.at("n").get<int>();
  s.achieved = j.at("achieved").get<std::vector<int>>();
  for (const auto& [key, value] : j.at("witnesses").items()) {
    s.witnesses.emplace(std::stoi(key),
                        Permutation::parse(value.get<std::string>()));
  }
  s.max_complexity = j.at("max_complexity").get<int>();
  for (const auto& m : j.at("maximizers")) {
    s.maximizers.push_back(Permutation::parse(m.get<std::string>()));
  }
  s.total_enumerated = j.at("total_enumerated").get<uint64_t>();
  return s;
}

json to_json(const VerificationOutcome& v) {
  json out{{"theorem", theorem_name(v.theorem)},
           {"n", v.n},
           {"passed", v.passed},
           {"note", v.note}};
  if (v.counterexample) {
    out["counterexample"] = v.counterexample->to_string();
  }
  return out;
}

}  // namespace msv
