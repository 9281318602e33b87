#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "toughseq/checkers.hpp"
#include "toughseq/conditions.hpp"
#include "toughseq/graphs.hpp"
#include "toughseq/partitions.hpp"
#include "toughseq/subposet.hpp"

using namespace toughseq;

namespace {

constexpr CheckOptions kAny{true};

using Groups = std::map<DegreeSequence, std::vector<std::uint64_t>>;

Groups group_by_sequence(int n) {
    Groups groups;
    for_each_graph(n, [&](const Graph& g, std::uint64_t code) { groups[g.degree_sequence()].push_back(code); });
    return groups;
}

// True iff every realization of every declared sequence has the property.
bool sound(const Groups& groups, int n, const std::function<bool(const DegreeSequence&)>& declared,
           const std::function<bool(const Graph&)>& property) {
    for (const auto& [seq, codes] : groups) {
        if (!declared(seq)) continue;
        for (const auto code : codes)
            if (!property(graph_from_code(n, code))) return false;
    }
    return true;
}

std::vector<int> random_sequence(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> entry(0, n - 1);
    std::vector<int> d(static_cast<std::size_t>(n));
    for (auto& x : d) x = entry(rng);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> random_majorant(std::mt19937& rng, std::vector<int> d) {
    const int n = static_cast<int>(d.size());
    std::uniform_int_distribution<int> bump(0, 2);
    for (auto& x : d) x = std::min(n - 1, x + bump(rng));
    for (std::size_t j = 1; j < d.size(); ++j) d[j] = std::max(d[j], d[j - 1]);
    return d;
}

std::vector<std::vector<int>> all_sequences(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(d);
        int pos = n - 1;
        while (pos >= 0 && d[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const int v = d[static_cast<std::size_t>(pos)] + 1;
        for (int q = pos; q < n; ++q) d[static_cast<std::size_t>(q)] = v;
    }
    return out;
}

// Canonical by construction: indices and thresholds both strictly increase, thresholds < n.
ChvatalCondition random_canonical(std::mt19937& rng, int n) {
    std::vector<Clause> clauses;
    int threshold = 1 + static_cast<int>(rng() % 3);
    for (int i = 1; i < n && threshold < n; ++i) {
        if (rng() % 3 == 0) {
            clauses.push_back({i, threshold});
            threshold += 1 + static_cast<int>(rng() % 2);
        }
    }
    return ChvatalCondition(n, std::move(clauses));
}

bool criterion1() {
    const auto groups = group_by_sequence(6);
    return sound(
        groups, 6, [](const DegreeSequence& s) { return check_hamiltonian_chvatal(s).declared; },
        [](const Graph& g) { return is_hamiltonian(g); });
}

bool criterion2() {
    const auto groups = group_by_sequence(6);
    for (int k = 1; k <= 3; ++k) {
        if (!sound(
                groups, 6, [&](const DegreeSequence& s) { return check_kconnected(s, k).declared; },
                [&](const Graph& g) { return is_k_connected(g, k); }))
            return false;
    }
    return true;
}

bool criterion3() {
    for (const auto& t : {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)}) {
        for (int n = static_cast<int>(t.ceil()) + 2; n <= 12; ++n) {
            // i ranges over ceil(t) <= i < tn/(t+1), i.e. i(p+q) < pn.
            for (std::int64_t i = t.ceil(); i * (t.num() + t.den()) < t.num() * n; ++i) {
                const int ii = static_cast<int>(i);
                const int a = static_cast<int>(t.floor_divide(i));
                const int b = n - ii - a;
                const auto g = core_join_cliques(ii, a, {b});
                std::vector<int> expected;
                expected.insert(expected.end(), static_cast<std::size_t>(a), ii);
                expected.insert(expected.end(), static_cast<std::size_t>(b), n - a - 1);
                expected.insert(expected.end(), static_cast<std::size_t>(ii), n - 1);
                if (!(toughness(g).value < t)) return false;
                if (g.degree_sequence() != DegreeSequence(expected)) return false;
                if (check_tough_ge1(g.degree_sequence(), t).declared) return false;
            }
        }
    }
    return true;
}

bool criterion4() {
    const std::vector<std::pair<Rational, int>> cases{{Rational(1), 6}, {Rational(2), 6}, {Rational(1), 7}};
    for (const auto& [t, n] : cases) {
        const auto groups = group_by_sequence(n);
        if (!sound(
                groups, n, [&](const DegreeSequence& s) { return check_tough_ge1(s, t).declared; },
                [&](const Graph& g) { return is_t_tough(g, t); }))
            return false;
    }
    return true;
}

bool criterion5() {
    for (const auto& t : {Rational(1, 2), Rational(1, 3)}) {
        for (int n = static_cast<int>(t.reciprocal().floor()) + 2; n <= 6; ++n) {
            const auto groups = group_by_sequence(n);
            if (!sound(
                    groups, n, [&](const DegreeSequence& s) { return check_tough_le1(s, t).declared; },
                    [&](const Graph& g) { return is_t_tough(g, t); }))
                return false;
        }
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10000; ++trial) {
        const int q = 1 + static_cast<int>(rng() % 12);
        const int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(q));
        const Rational t(p, q);
        const int k = static_cast<int>(t.reciprocal().floor());
        const int n = k + 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, 20 - k - 1)));
        if (n > 20) continue;
        const DegreeSequence s(random_sequence(rng, n));
        const auto a = check_tough_le1(s, t, kAny);
        const auto b = check_tough_le1(s, Rational(1, k), kAny);
        if (a.declared != b.declared || a.failing_index != b.failing_index || a.failing_family != b.failing_family)
            return false;
    }
    return true;
}

bool report_ok(const SinkReport& r, const Rational& bound, int min_sinks) {
    if (!r.bound || *r.bound != bound || !r.bound_applies || !r.bound_met) return false;
    if (r.sink_count < min_sinks || !r.group_counts_match || !r.claim2 || !r.claim3) return false;
    for (const auto& g : r.groups) {
        if (g.count != g.expected_count) return false;
        if (g.expected_count != partition_count_at_most((r.k + 1) * (*r.m - g.j) - 1, r.k * g.j + 1)) return false;
    }
    return true;
}

bool criterion6() {
    return report_ok(subposet_report(2, 9), Rational(9, 5), 2) && report_ok(subposet_report(3, 9), Rational(18, 5), 4);
}

bool criterion7() {
    for (int big_n = 0; big_n <= 30; ++big_n) {
        const PartitionQuery all{big_n, std::nullopt, std::nullopt};
        if (partition_count(big_n) != enumerate_partitions(all).size()) return false;
        for (int l = 0; l <= big_n; ++l) {
            if (partition_count_at_most(big_n, l) != enumerate_partitions({big_n, l, std::nullopt}).size()) return false;
        }
    }
    for (int k = 1; k <= 6; ++k)
        for (int big_n = 2 * k + 1; big_n <= 60; ++big_n)
            if (!claim4_identity(k, big_n)) return false;
    return true;
}

bool criterion8() {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& d : all_sequences(n)) {
            const DegreeSequence s(d);
            if (frontier_sequence(blocking_condition(s)) != s) return false;
        }
    }
    std::mt19937 rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const DegreeSequence s(random_sequence(rng, 1 + static_cast<int>(rng() % 30)));
        if (frontier_sequence(blocking_condition(s)) != s) return false;
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = random_canonical(rng, 2 + static_cast<int>(rng() % 29));
        if (!is_canonical(c)) return false;
        if (!equivalent(blocking_condition(frontier_sequence(c)), c)) return false;
    }
    return true;
}

bool criterion9() {
    std::mt19937 rng(9);
    using Checker = std::function<Verdict(const DegreeSequence&, int)>;
    const std::vector<Checker> checkers{
        [](const DegreeSequence& s, int) { return check_hamiltonian_chvatal(s, kAny); },
        [](const DegreeSequence& s, int k) { return check_kconnected(s, k, kAny); },
        [](const DegreeSequence& s, int) { return check_tough_ge1(s, Rational(3, 2), kAny); },
        [](const DegreeSequence& s, int) { return check_tough_le1(s, Rational(1, 2), kAny); },
    };
    for (const auto& check : checkers) {
        for (int trial = 0; trial < 10000; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 11);
            const auto lo = random_sequence(rng, n);
            const DegreeSequence a(lo);
            const DegreeSequence b(random_majorant(rng, lo));
            const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            if (check(a, k).declared && !check(b, k).declared) return false;
        }
    }
    return true;
}

bool criterion10() {
    for (int n = 1; n <= 8; ++n)
        if (toughness(clique(n)).value != Rational(n - 1)) return false;
    for (int n = 4; n <= 10; ++n) {
        Graph c(n);
        for (int v = 0; v < n; ++v) c.add_edge(v, (v + 1) % n);
        if (toughness(c).value != Rational(1)) return false;
    }
    for (int n = 3; n <= 10; ++n) {
        Graph p(n);
        for (int v = 0; v + 1 < n; ++v) p.add_edge(v, v + 1);
        if (toughness(p).value != Rational(1, 2)) return false;
    }
    return toughness(core_join_cliques(2, 2, {2})).value == Rational(2, 3);
}

bool trend() {
    int previous = 0;
    for (int k = 2; k <= 4; ++k) {
        const int count = subposet_report(k, 9).sink_count;
        std::printf("  k=%d m=9 sink_count=%d\n", k, count);
        if (count <= previous) return false;
        previous = count;
    }
    return true;
}

}  // namespace

int main() {
    struct Item {
        const char* name;
        bool (*run)();
    };
    const Item items[] = {
        {"1 hamiltonian soundness, n=6 sweep", criterion1},
        {"2 k-connected soundness, n=6 sweep, k=1..3", criterion2},
        {"3 t>=1 blocking graphs, n<=12", criterion3},
        {"4 t>=1 soundness, t=1,2 at n=6 and t=1 at n=7", criterion4},
        {"5 t<=1 soundness and floor(1/t) reduction", criterion5},
        {"6 sink bounds, k=2,3 at m=9", criterion6},
        {"7 largest-part tail identity", criterion7},
        {"8 condition/frontier duality", criterion8},
        {"9 checker monotonicity", criterion9},
        {"10 toughness spot values", criterion10},
        {"trend sink counts increase over k=2,3,4 at m=9", trend},
    };
    int failures = 0;
    for (const auto& item : items) {
        const auto start = std::chrono::steady_clock::now();
        const bool ok = item.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s (%.2fs)\n", ok ? "PASS" : "FAIL", item.name, secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
