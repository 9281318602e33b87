#include "toughseq/json_io.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace toughseq {

namespace {

ClauseFamily family_from_string(const std::string& s) {
    if (s == "main") return ClauseFamily::Main;
    if (s == "i") return ClauseFamily::Separator;
    if (s == "ii") return ClauseFamily::Connectivity;
    throw std::invalid_argument("json: unknown clause family '" + s + "'");
}

Json big_to_json(const BigInt& value) {
    if (value <= std::numeric_limits<std::int64_t>::max()) return value.convert_to<std::int64_t>();
    return value.str();
}

BigInt big_from_json(const Json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

}  // namespace

Json to_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

Json to_json(const DegreeSequence& seq) { return Json(std::vector<int>(seq.entries().begin(), seq.entries().end())); }

Json to_json(const ChvatalCondition& c) {
    Json clauses = Json::array();
    for (const auto& cl : c.clauses()) clauses.push_back({cl.index, cl.threshold});
    return {{"n", c.n()}, {"clauses", clauses}};
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

Json to_json(const ToughnessResult& result) {
    Json out{{"schema", kJsonSchemaVersion}, {"toughness", result.value.str()}, {"value", to_json(result.value)}};
    if (result.witness_cutset) {
        std::vector<int> cut;
        for (VertexSet s = *result.witness_cutset; s != 0; s &= s - 1) cut.push_back(std::countr_zero(s));
        out["witness_cutset"] = cut;
        out["witness_components"] = result.witness_components;
    } else {
        out["witness_cutset"] = nullptr;
        out["witness_components"] = nullptr;
    }
    return out;
}

Json to_json(const Verdict& v) {
    Json out{{"schema", kJsonSchemaVersion}, {"declared", v.declared}};
    out["failing_index"] = v.failing_index ? Json(*v.failing_index) : Json(nullptr);
    out["failing_family"] = v.failing_family ? Json(to_string(*v.failing_family)) : Json(nullptr);
    out["blocking_sequence"] = v.blocking_sequence ? to_json(*v.blocking_sequence) : Json(nullptr);
    if (v.blocking_graph) {
        Json spec = to_json(*v.blocking_graph);
        spec["description"] = v.blocking_graph_spec;
        out["blocking_graph_spec"] = spec;
    } else {
        out["blocking_graph_spec"] = nullptr;
    }
    Json conds = Json::array();
    for (const auto& tc : v.conditions) {
        Json c = to_json(tc.condition);
        c["index"] = tc.index;
        c["family"] = to_string(tc.family);
        c["text"] = format_condition(tc.condition);
        conds.push_back(c);
    }
    out["conditions"] = conds;
    return out;
}

Json to_json(const SinkReport& report) {
    Json groups = Json::array();
    for (const auto& g : report.groups) {
        groups.push_back({{"j", g.j}, {"count", g.count}, {"expected_count", big_to_json(g.expected_count)},
                          {"sinks", g.sinks}});
    }
    Json sinks = Json::array();
    for (const auto& s : report.sinks) sinks.push_back(to_json(s));
    return {{"schema", kJsonSchemaVersion},
            {"k", report.k},
            {"n", report.n},
            {"m", report.m ? Json(*report.m) : Json(nullptr)},
            {"groups", groups},
            {"sinks", sinks},
            {"sink_count", report.sink_count},
            {"bound", report.bound ? to_json(*report.bound) : Json(nullptr)},
            {"bound_applies", report.bound_applies},
            {"bound_met", report.bound_met},
            {"group_counts_match", report.group_counts_match},
            {"claims", {{"claim2", report.claim2}, {"claim3", report.claim3}, {"claim3_checked", report.claim3_checked}}}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

DegreeSequence sequence_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: sequence must be an array of integers");
    return DegreeSequence(j.get<std::vector<int>>());
}

ChvatalCondition condition_from_json(const Json& j) {
    std::vector<Clause> clauses;
    for (const auto& c : j.at("clauses")) clauses.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return ChvatalCondition(j.at("n").get<int>(), std::move(clauses));
}

Graph graph_from_json(const Json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        const int u = e.at(0).get<int>();
        const int v = e.at(1).get<int>();
        if (g.has_edge(u, v)) throw std::invalid_argument("json: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    v.declared = j.at("declared").get<bool>();
    if (!j.at("failing_index").is_null()) v.failing_index = j.at("failing_index").get<int>();
    if (!j.at("failing_family").is_null()) v.failing_family = family_from_string(j.at("failing_family").get<std::string>());
    if (!j.at("blocking_sequence").is_null()) v.blocking_sequence = sequence_from_json(j.at("blocking_sequence"));
    if (!j.at("blocking_graph_spec").is_null()) {
        v.blocking_graph = graph_from_json(j.at("blocking_graph_spec"));
        v.blocking_graph_spec = j.at("blocking_graph_spec").at("description").get<std::string>();
    }
    for (const auto& c : j.at("conditions")) {
        v.conditions.push_back({c.at("index").get<int>(), family_from_string(c.at("family").get<std::string>()),
                                condition_from_json(c)});
    }
    return v;
}

SinkReport sink_report_from_json(const Json& j) {
    SinkReport r;
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    if (!j.at("m").is_null()) r.m = j.at("m").get<int>();
    for (const auto& g : j.at("groups")) {
        r.groups.push_back({g.at("j").get<int>(), g.at("count").get<int>(), big_from_json(g.at("expected_count")),
                            g.at("sinks").get<int>()});
    }
    for (const auto& s : j.at("sinks")) r.sinks.push_back(sequence_from_json(s));
    r.sink_count = j.at("sink_count").get<int>();
    if (!j.at("bound").is_null()) r.bound = rational_from_json(j.at("bound"));
    r.bound_applies = j.at("bound_applies").get<bool>();
    r.bound_met = j.at("bound_met").get<bool>();
    r.group_counts_match = j.at("group_counts_match").get<bool>();
    r.claim2 = j.at("claims").at("claim2").get<bool>();
    r.claim3 = j.at("claims").at("claim3").get<bool>();
    r.claim3_checked = j.at("claims").at("claim3_checked").get<int>();
    return r;
}

}  // namespace toughseq
