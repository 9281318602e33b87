#pragma once

#include <json.hpp>

#include "toughseq/checkers.hpp"
#include "toughseq/conditions.hpp"
#include "toughseq/graphs.hpp"
#include "toughseq/rational.hpp"
#include "toughseq/sequences.hpp"
#include "toughseq/subposet.hpp"

namespace toughseq {

using Json = nlohmann::json;

inline constexpr int kJsonSchemaVersion = 1;

// Sequences are plain integer arrays; conditions are {n, clauses: [[i, k], ...]};
// graphs are {n, edges: [[u, v], ...]}; rationals are {num, den}.

Json to_json(const Rational& r);
Json to_json(const DegreeSequence& seq);
Json to_json(const ChvatalCondition& c);
Json to_json(const Graph& g);
Json to_json(const ToughnessResult& result);
Json to_json(const Verdict& v);
Json to_json(const SinkReport& report);

Rational rational_from_json(const Json& j);
DegreeSequence sequence_from_json(const Json& j);
ChvatalCondition condition_from_json(const Json& j);
Graph graph_from_json(const Json& j);
Verdict verdict_from_json(const Json& j);
SinkReport sink_report_from_json(const Json& j);

}  // namespace toughseq
