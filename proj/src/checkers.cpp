#include "toughseq/checkers.hpp"

#include <stdexcept>

namespace toughseq {

namespace {

const char* const kCoClique = "K̄_";  // K̄_

std::string k(int size) { return "K_" + std::to_string(size); }
std::string co_k(int size) { return kCoClique + std::to_string(size); }

void require_graphical(const DegreeSequence& seq, const CheckOptions& opts) {
    if (!opts.allow_nongraphical && !is_graphical(seq)) {
        throw std::invalid_argument("sequence " + format_sequence(seq) + " is not graphical");
    }
}

TestedCondition pair_clause(int n, int index, ClauseFamily family, Clause first, Clause second) {
    return {index, family, ChvatalCondition(n, {first, second})};
}

/// Evaluates the clause list in order; returns the first failing entry.
const TestedCondition* first_failure(const std::vector<TestedCondition>& conds, const DegreeSequence& seq) {
    for (const auto& tc : conds) {
        if (!evaluate(tc.condition, seq)) return &tc;
    }
    return nullptr;
}

void attach_blocking(Verdict& v, Graph graph, std::string spec) {
    v.blocking_sequence = graph.degree_sequence();
    v.blocking_graph = std::move(graph);
    v.blocking_graph_spec = std::move(spec);
}

/// K_a ∪ K_b with a, b >= 1.
void attach_two_cliques(Verdict& v, int a, int b) {
    attach_blocking(v, core_join_cliques(0, 0, {a, b}), k(a) + "∪" + k(b));
}

}  // namespace

std::string to_string(ClauseFamily family) {
    switch (family) {
        case ClauseFamily::Main: return "main";
        case ClauseFamily::Separator: return "i";
        case ClauseFamily::Connectivity: return "ii";
    }
    return "main";
}

std::vector<TestedCondition> hamiltonian_conditions(int n) {
    if (n < 3) throw std::invalid_argument("hamiltonian theorem requires n >= 3");
    std::vector<TestedCondition> out;
    for (int i = 1; 2 * i < n; ++i) {
        out.push_back(pair_clause(n, i, ClauseFamily::Main, {i, i + 1}, {n - i, n - i}));
    }
    return out;
}

std::vector<TestedCondition> kconnected_conditions(int n, int k) {
    if (n < 2) throw std::invalid_argument("connectivity theorem requires n >= 2");
    if (k < 1 || k > n - 1) throw std::invalid_argument("connectivity theorem requires 1 <= k <= n-1");
    std::vector<TestedCondition> out;
    for (int i = 1; 2 * i <= n - k + 1; ++i) {
        out.push_back(pair_clause(n, i, ClauseFamily::Main, {i, i + k - 1}, {n - k + 1, n - i}));
    }
    return out;
}

std::vector<TestedCondition> tough_ge1_conditions(int n, const Rational& t) {
    if (t < Rational(1)) throw std::invalid_argument("t-tough theorem for t >= 1 called with t = " + t.str());
    if (n < t.ceil() + 2) throw std::invalid_argument("t-tough theorem requires n >= ceil(t) + 2");
    std::vector<TestedCondition> out;
    const __int128 p = t.num();
    const __int128 q = t.den();
    // i < tn/(t+1)  <=>  i (p+q) < p n
    for (int i = static_cast<int>(t.ceil()); static_cast<__int128>(i) * (p + q) < p * n; ++i) {
        const int a = static_cast<int>(t.floor_divide(i));
        out.push_back(pair_clause(n, i, ClauseFamily::Main, {a, i + 1}, {n - i, n - a}));
    }
    return out;
}

std::vector<TestedCondition> tough_le1_conditions(int n, const Rational& t) {
    if (t.num() == 0 || t > Rational(1)) {
        throw std::invalid_argument("simple t-tough theorem requires 0 < t <= 1, got " + t.str());
    }
    const int k = static_cast<int>(t.reciprocal().floor());
    if (n < k + 2) throw std::invalid_argument("simple t-tough theorem requires n >= floor(1/t) + 2");
    std::vector<TestedCondition> out;
    for (int i = 1; 2 * i <= n; ++i) {
        out.push_back(pair_clause(n, i, ClauseFamily::Connectivity, {i, i}, {n, n - i}));
    }
    for (int i = k; 2 * i < n + k - 1; ++i) {
        out.push_back(pair_clause(n, i, ClauseFamily::Separator, {i, i - k + 2}, {n - i + k - 1, n - i}));
    }
    return out;
}

Verdict check_hamiltonian_chvatal(const DegreeSequence& seq, CheckOptions opts) {
    const int n = seq.n();
    Verdict v;
    v.conditions = hamiltonian_conditions(n);
    require_graphical(seq, opts);
    if (const auto* fail = first_failure(v.conditions, seq)) {
        const int i = fail->index;
        v.declared = false;
        v.failing_index = i;
        v.failing_family = fail->family;
        attach_blocking(v, core_join_cliques(i, i, {n - 2 * i}),
                        k(i) + "+(" + co_k(i) + "∪" + k(n - 2 * i) + ")");
    }
    return v;
}

Verdict check_kconnected(const DegreeSequence& seq, int conn, CheckOptions opts) {
    const int n = seq.n();
    Verdict v;
    v.conditions = kconnected_conditions(n, conn);
    require_graphical(seq, opts);
    if (const auto* fail = first_failure(v.conditions, seq)) {
        const int i = fail->index;
        v.declared = false;
        v.failing_index = i;
        v.failing_family = fail->family;
        const int rest = n - conn + 1 - i;
        if (conn == 1) {
            attach_two_cliques(v, i, rest);
        } else {
            attach_blocking(v, core_join_cliques(conn - 1, 0, {i, rest}),
                            k(conn - 1) + "+(" + k(i) + "∪" + k(rest) + ")");
        }
    }
    return v;
}

Verdict check_tough_ge1(const DegreeSequence& seq, const Rational& t, CheckOptions opts) {
    const int n = seq.n();
    Verdict v;
    v.conditions = tough_ge1_conditions(n, t);
    require_graphical(seq, opts);
    if (const auto* fail = first_failure(v.conditions, seq)) {
        const int i = fail->index;
        const int a = static_cast<int>(t.floor_divide(i));
        const int b = n - i - a;
        v.declared = false;
        v.failing_index = i;
        v.failing_family = fail->family;
        attach_blocking(v, core_join_cliques(i, a, {b}), k(i) + "+(" + co_k(a) + "∪" + k(b) + ")");
    }
    return v;
}

Verdict check_tough_le1(const DegreeSequence& seq, const Rational& t, CheckOptions opts) {
    const int n = seq.n();
    Verdict v;
    v.conditions = tough_le1_conditions(n, t);
    require_graphical(seq, opts);
    if (const auto* fail = first_failure(v.conditions, seq)) {
        v.declared = false;
        v.failing_index = fail->index;
        v.failing_family = fail->family;
        // A connectivity failure at i is majorized by the disconnected K_i ∪ K_{n-i}.
        // Separator failures carry no certificate: that clause list is not weakly optimal.
        if (fail->family == ClauseFamily::Connectivity) attach_two_cliques(v, fail->index, n - fail->index);
    }
    return v;
}

}  // namespace toughseq
