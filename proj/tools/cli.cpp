#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "toughseq/checkers.hpp"
#include "toughseq/conditions.hpp"
#include "toughseq/graphs.hpp"
#include "toughseq/json_io.hpp"
#include "toughseq/partitions.hpp"
#include "toughseq/rational.hpp"
#include "toughseq/sequences.hpp"
#include "toughseq/subposet.hpp"

namespace toughseq::cli {

namespace {

/// Input problems that should surface as exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckArgs {
    std::string seq;
    bool hamiltonian = false;
    std::optional<int> connected;
    std::optional<std::string> tough;
    bool allow_nongraphical = false;
    bool json = false;
};

struct ToughnessArgs {
    std::string file;
    bool json = false;
};

struct SinksArgs {
    int k = 0;
    std::optional<int> m;
    std::optional<int> n;
    bool emit_conditions = false;
    bool verify_claims = false;
    bool list_sinks = false;
    bool sweep = false;
    bool json = false;
};

struct TheoremArgs {
    std::string t;
    int n = 0;
    bool best_monotone = false;
    bool json = false;
};

struct PartitionsArgs {
    int r = 0;
    std::optional<int> max_parts;
    std::optional<int> max_part;
    bool list = false;
    bool json = false;
};

struct OptimalityArgs {
    std::string cond;
    int n = 0;
    std::optional<std::string> sinks;
    std::optional<std::string> t;
    bool json = false;
};

Json conditions_json(const std::vector<ChvatalCondition>& conds) {
    Json arr = Json::array();
    for (const auto& c : conds) {
        Json j = to_json(c);
        j["text"] = format_condition(c);
        arr.push_back(j);
    }
    return arr;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read graph file '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    const std::string text = read_input(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(Json::parse(text));
    return parse_graph(text);
}

std::vector<DegreeSequence> sinks_for_property(int n, const Rational& t) {
    if (n > max_sweep_n()) {
        throw UsageError("sweep needs n <= " + std::to_string(max_sweep_n()) + " (raise TOUGHSEQ_MAX_N)");
    }
    return sweep_subposet(n, [&](const Graph& g) { return is_t_tough(g, t); }).sinks;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
    const int selected = (a.hamiltonian ? 1 : 0) + (a.connected ? 1 : 0) + (a.tough ? 1 : 0);
    if (selected != 1) throw UsageError("check: choose exactly one of --hamiltonian, --connected K, --tough P/Q");
    const auto seq = parse_sequence(a.seq);
    const CheckOptions opts{a.allow_nongraphical};

    Verdict v;
    std::string property;
    if (a.hamiltonian) {
        v = check_hamiltonian_chvatal(seq, opts);
        property = "hamiltonian";
    } else if (a.connected) {
        v = check_kconnected(seq, *a.connected, opts);
        property = std::to_string(*a.connected) + "-connected";
    } else {
        const auto t = Rational::parse(*a.tough);
        v = t >= Rational(1) ? check_tough_ge1(seq, t, opts) : check_tough_le1(seq, t, opts);
        property = t.str() + "-tough";
    }

    if (a.json) {
        Json j = to_json(v);
        j["sequence"] = to_json(seq);
        j["property"] = property;
        out << j.dump(2) << '\n';
    } else {
        out << "sequence: " << format_sequence(seq) << '\n';
        out << "property: " << property << '\n';
        out << "declared: " << (v.declared ? "yes" : "no") << '\n';
        if (v.failing_index) {
            out << "failing index: " << *v.failing_index;
            if (v.failing_family && *v.failing_family != ClauseFamily::Main) {
                out << " (" << to_string(*v.failing_family) << ")";
            }
            out << '\n';
        }
        if (v.blocking_sequence) out << "blocking sequence: " << format_sequence(*v.blocking_sequence) << '\n';
        if (v.blocking_graph) out << "blocking graph: " << v.blocking_graph_spec << '\n';
        out << "conditions:\n";
        for (const auto& tc : v.conditions) {
            out << "  ";
            if (tc.family != ClauseFamily::Main) out << '(' << to_string(tc.family) << ") ";
            out << "i=" << tc.index << ": " << format_condition(tc.condition) << '\n';
        }
    }
    return v.declared ? kExitOk : kExitNegative;
}

int cmd_toughness(const ToughnessArgs& a, std::ostream& out) {
    Graph g = [&] {
        try {
            return load_graph(a.file);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("graph json: ") + e.what());
        }
    }();
    const auto result = toughness(g);
    if (a.json) {
        out << to_json(result).dump(2) << '\n';
        return kExitOk;
    }
    out << "toughness: " << result.value << '\n';
    if (result.witness_cutset) {
        out << "cutset: " << format_vertex_set(*result.witness_cutset) << '\n';
        out << "components: " << result.witness_components << '\n';
    } else {
        out << "cutset: none (complete graph)\n";
    }
    return kExitOk;
}

int cmd_sinks(const SinksArgs& a, std::ostream& out) {
    if (a.k < 1) throw UsageError("sinks: --k must be >= 1");
    if (a.m.has_value() == a.n.has_value()) throw UsageError("sinks: give exactly one of --m or --n");
    if (a.m && *a.m < 2) throw UsageError("sinks: --m must be >= 2");
    if (a.n && *a.n < a.k + 2) throw UsageError("sinks: --n must be >= k + 2");
    const auto report = a.m ? subposet_report(a.k, *a.m) : subposet_report_for_n(a.k, *a.n);
    const auto theorem = a.emit_conditions ? generate_best_monotone(report.sinks) : std::vector<ChvatalCondition>{};

    std::optional<SweepSubposet> sweep;
    if (a.sweep) {
        if (report.n > max_sweep_n()) {
            throw UsageError("sinks --sweep needs n <= " + std::to_string(max_sweep_n()) + " (raise TOUGHSEQ_MAX_N)");
        }
        const Rational t(1, a.k);
        sweep = sweep_subposet(report.n, [&](const Graph& g) { return is_t_tough(g, t); });
    }

    int family_size = 0;
    for (const auto& g : report.groups) family_size += g.count;

    if (a.json) {
        Json j = to_json(report);
        j["family_size"] = family_size;
        if (a.emit_conditions) j["conditions"] = conditions_json(theorem);
        if (sweep) {
            Json s = Json::array();
            for (const auto& seq : sweep->sinks) s.push_back(to_json(seq));
            j["sweep"] = {{"elements", sweep->elements.size()}, {"sinks", s}, {"sink_count", sweep->sinks.size()}};
        }
        out << j.dump(2) << '\n';
    } else {
        out << "k=" << report.k << " n=" << report.n;
        if (report.m) out << " m=" << *report.m;
        out << '\n';
        out << "family size: " << family_size << '\n';
        for (const auto& g : report.groups) {
            out << "group j=" << g.j << ": count " << g.count << " expected " << g.expected_count << " sinks "
                << g.sinks << '\n';
        }
        out << "sink count: " << report.sink_count << '\n';
        if (report.bound) {
            out << "bound: " << *report.bound;
            if (report.bound_applies) {
                out << (report.bound_met ? " (met)" : " (NOT met)");
            } else {
                out << " (not asserted: needs m >= 9)";
            }
            out << '\n';
        }
        out << "group counts match: " << (report.group_counts_match ? "true" : "false") << '\n';
        out << "no majorization within a group: " << (report.claim2 ? "true" : "false") << '\n';
        out << "large-degree members are sinks: " << (report.claim3 ? "true" : "false") << " (" << report.claim3_checked
            << " checked)\n";
        if (a.list_sinks) {
            for (const auto& s : report.sinks) out << "sink: " << format_sequence(s) << '\n';
        }
        for (const auto& c : theorem) out << format_condition(c) << '\n';
        if (sweep) {
            out << "sweep sink count: " << sweep->sinks.size() << " (all edge-maximal graphs)\n";
            for (const auto& s : sweep->sinks) out << "sweep sink: " << format_sequence(s) << '\n';
        }
    }
    if (a.verify_claims) {
        const bool ok = report.claim2 && report.claim3 && report.group_counts_match &&
                        (!report.bound_applies || report.bound_met);
        return ok ? kExitOk : kExitNegative;
    }
    return kExitOk;
}

int cmd_theorem(const TheoremArgs& a, std::ostream& out) {
    const auto t = Rational::parse(a.t);
    if (t.num() == 0) throw UsageError("theorem: t must be positive");
    std::vector<ChvatalCondition> conds;
    std::string source;
    if (a.best_monotone) {
        conds = generate_best_monotone(sinks_for_property(a.n, t));
        source = "best-monotone (sink sweep)";
    } else {
        const auto tested = t >= Rational(1) ? tough_ge1_conditions(a.n, t) : tough_le1_conditions(a.n, t);
        for (const auto& tc : tested) conds.push_back(canonicalize(tc.condition));
        source = t >= Rational(1) ? "tough-ge1" : "tough-le1";
    }
    if (a.json) {
        Json j{{"schema", kJsonSchemaVersion}, {"n", a.n}, {"t", to_json(t)}, {"source", source},
               {"conditions", conditions_json(conds)}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& c : conds) out << format_condition(c) << '\n';
    }
    return kExitOk;
}

std::string format_partition(const std::vector<int>& parts) {
    if (parts.empty()) return "(empty)";
    std::ostringstream os;
    for (std::size_t s = 0; s < parts.size(); ++s) os << (s ? "+" : "") << parts[s];
    return os.str();
}

int cmd_partitions(const PartitionsArgs& a, std::ostream& out) {
    const PartitionQuery q{a.r, a.max_parts, a.max_part};
    const auto count = count_partitions(q);
    const auto listing = a.list ? enumerate_partitions(q) : std::vector<std::vector<int>>{};
    if (a.json) {
        Json j{{"schema", kJsonSchemaVersion},
               {"r", a.r},
               {"max_parts", a.max_parts ? Json(*a.max_parts) : Json(nullptr)},
               {"max_part", a.max_part ? Json(*a.max_part) : Json(nullptr)},
               {"count", count <= std::numeric_limits<std::int64_t>::max() ? Json(count.convert_to<std::int64_t>())
                                                                           : Json(count.str())}};
        if (a.list) j["partitions"] = listing;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    out << "r\tmax_parts\tmax_part\tcount\n";
    out << a.r << '\t' << opt(a.max_parts) << '\t' << opt(a.max_part) << '\t' << count << '\n';
    for (const auto& p : listing) out << format_partition(p) << '\n';
    return kExitOk;
}

int cmd_verify_optimality(const OptimalityArgs& a, std::ostream& out) {
    if (a.sinks.has_value() == a.t.has_value()) throw UsageError("verify-optimality: give exactly one of --sinks or --t");
    const auto cond = parse_condition(a.cond, a.n);
    std::vector<DegreeSequence> sinks;
    if (a.sinks) {
        std::stringstream ss(*a.sinks);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            sinks.push_back(parse_sequence(item));
            if (sinks.back().n() != a.n) throw UsageError("verify-optimality: sink length differs from --n");
        }
    } else {
        sinks = sinks_for_property(a.n, Rational::parse(*a.t));
    }
    const bool optimal = is_weakly_optimal(cond, sinks);
    const auto frontier = frontier_sequence(cond);
    if (a.json) {
        Json s = Json::array();
        for (const auto& seq : sinks) s.push_back(to_json(seq));
        Json j{{"schema", kJsonSchemaVersion},
               {"condition", to_json(cond)},
               {"canonical", format_condition(canonicalize(cond))},
               {"frontier", to_json(frontier)},
               {"sinks", s},
               {"weakly_optimal", optimal}};
        out << j.dump(2) << '\n';
    } else {
        out << "condition: " << format_condition(canonicalize(cond)) << '\n';
        out << "frontier: " << format_sequence(frontier) << '\n';
        out << "weakly optimal: " << (optimal ? "yes" : "no") << '\n';
    }
    return optimal ? kExitOk : kExitNegative;
}

}  // namespace

int max_sweep_n() {
    const char* env = std::getenv("TOUGHSEQ_MAX_N");
    if (env == nullptr || *env == '\0') return 7;
    try {
        const int v = std::stoi(env);
        return std::clamp(v, 1, kMaxSweepVertices);
    } catch (const std::exception&) {
        return 7;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree-sequence conditions for graph toughness"};
    app.name("toughseq");
    app.require_subcommand(1);

    CheckArgs check;
    auto* sub_check = app.add_subcommand("check", "Judge a degree sequence with a forcibly-P theorem");
    sub_check->add_option("--seq", check.seq, "Sequence, e.g. \"2^2 3^3 5\" or \"2,2,3\"")->required();
    sub_check->add_flag("--hamiltonian", check.hamiltonian, "Chvátal's hamiltonian theorem");
    sub_check->add_option("--connected", check.connected, "Bondy–Boesch k-connectivity theorem");
    sub_check->add_option("--tough", check.tough, "t-tough theorem, t as P/Q");
    sub_check->add_flag("--allow-nongraphical", check.allow_nongraphical, "Judge sequences with no realization");
    sub_check->add_flag("--json", check.json);

    ToughnessArgs tough;
    auto* sub_tough = app.add_subcommand("toughness", "Exact toughness of a graph file");
    sub_tough->add_option("file", tough.file, "Edge-list or JSON graph file, '-' for stdin")->required();
    sub_tough->add_flag("--json", tough.json);

    SinksArgs sinks;
    auto* sub_sinks = app.add_subcommand("sinks", "Sinks of the connected edge-maximal non-(1/k)-tough family");
    sub_sinks->add_option("--k", sinks.k)->required();
    sub_sinks->add_option("--m", sinks.m, "n = m(k+1)");
    sub_sinks->add_option("--n", sinks.n);
    sub_sinks->add_flag("--emit-conditions", sinks.emit_conditions, "Print the generated best monotone conditions");
    sub_sinks->add_flag("--verify-claims", sinks.verify_claims, "Exit 1 unless every structural check holds");
    sub_sinks->add_flag("--list-sinks", sinks.list_sinks);
    sub_sinks->add_flag("--sweep", sinks.sweep, "Also sweep all graphs (small n) for the full subposet");
    sub_sinks->add_flag("--json", sinks.json);

    TheoremArgs theorem;
    auto* sub_theorem = app.add_subcommand("theorem", "List the conditions of a t-tough theorem");
    sub_theorem->add_option("--t", theorem.t)->required();
    sub_theorem->add_option("--n", theorem.n)->required();
    sub_theorem->add_flag("--best-monotone", theorem.best_monotone, "Generate from swept sinks (small n)");
    sub_theorem->add_flag("--json", theorem.json);

    PartitionsArgs parts;
    auto* sub_parts = app.add_subcommand("partitions", "Count or list integer partitions");
    sub_parts->add_option("--r", parts.r)->required();
    sub_parts->add_option("--max-parts", parts.max_parts);
    sub_parts->add_option("--max-part", parts.max_part);
    sub_parts->add_flag("--list", parts.list);
    sub_parts->add_flag("--json", parts.json);

    OptimalityArgs opt;
    auto* sub_opt = app.add_subcommand("verify-optimality", "Test a condition for weak optimality against sinks");
    sub_opt->add_option("--cond", opt.cond, "e.g. \"d2>=3 | d5>=4\"")->required();
    sub_opt->add_option("--n", opt.n)->required();
    sub_opt->add_option("--sinks", opt.sinks, "Semicolon-separated sink sequences");
    sub_opt->add_option("--t", opt.t, "Sweep the t-tough subposet instead");
    sub_opt->add_flag("--json", opt.json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "toughseq: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (sub_check->parsed()) return cmd_check(check, out);
        if (sub_tough->parsed()) return cmd_toughness(tough, out);
        if (sub_sinks->parsed()) return cmd_sinks(sinks, out);
        if (sub_theorem->parsed()) return cmd_theorem(theorem, out);
        if (sub_parts->parsed()) return cmd_partitions(parts, out);
        if (sub_opt->parsed()) return cmd_verify_optimality(opt, out);
    } catch (const std::exception& e) {
        err << "toughseq: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace toughseq::cli
