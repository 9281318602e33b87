#include "toughseq/subposet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toughseq {

namespace {

DegreeSequence family_sequence(int n, int j, const std::vector<int>& parts) {
    std::vector<int> degs;
    degs.reserve(static_cast<std::size_t>(n));
    for (const int c : parts) degs.insert(degs.end(), static_cast<std::size_t>(c), c + j - 1);
    degs.insert(degs.end(), static_cast<std::size_t>(j), n - 1);
    return DegreeSequence(std::move(degs));
}

bool strictly_majorizes(const DegreeSequence& a, const DegreeSequence& b) { return a != b && majorizes(a, b); }

}  // namespace

Graph FamilyMember::realization() const { return core_join_cliques(j, 0, parts); }

std::vector<FamilyMember> enumerate_family(int k, int n) {
    if (k < 1) throw std::invalid_argument("family: k must be >= 1");
    if (n < k + 2) throw std::invalid_argument("family: n must be >= k + 2");
    std::vector<FamilyMember> out;
    for (int j = 1; j * (k + 1) < n; ++j) {
        const int slots = k * j + 1;
        // Subtracting 1 from each component size gives a partition of
        // n - j - slots into at most `slots` parts.
        auto shifted = enumerate_partitions({n - j - slots, slots, std::nullopt});
        std::vector<std::vector<int>> part_lists;
        part_lists.reserve(shifted.size());
        for (const auto& p : shifted) {
            std::vector<int> parts(static_cast<std::size_t>(slots), 1);
            // p is nonincreasing; place it at the top end so parts stay nondecreasing.
            for (std::size_t s = 0; s < p.size(); ++s) parts[static_cast<std::size_t>(slots) - 1 - s] += p[s];
            part_lists.push_back(std::move(parts));
        }
        std::sort(part_lists.begin(), part_lists.end());
        for (auto& parts : part_lists) {
            auto seq = family_sequence(n, j, parts);
            out.push_back(FamilyMember{k, n, j, std::move(parts), std::move(seq)});
        }
    }
    return out;
}

std::vector<std::vector<int>> compute_sinks(const std::vector<std::vector<int>>& seqs) {
    if (seqs.empty()) return {};
    const auto n = seqs.front().size();
    for (const auto& s : seqs) {
        if (s.size() != n) throw std::invalid_argument("compute_sinks: mixed sequence lengths");
    }
    std::vector<std::vector<int>> distinct = seqs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    // A strict majorant has a strictly larger sum, and every dominated
    // element is dominated by a maximal one; scanning by decreasing sum lets
    // each candidate be tested against the sinks found so far only.
    const auto total = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0LL); };
    std::stable_sort(distinct.begin(), distinct.end(),
                     [&](const std::vector<int>& a, const std::vector<int>& b) { return total(a) > total(b); });
    std::vector<std::vector<int>> sinks;
    for (const auto& candidate : distinct) {
        const bool dominated = std::any_of(sinks.begin(), sinks.end(),
                                           [&](const std::vector<int>& s) { return majorizes(s, candidate); });
        if (!dominated) sinks.push_back(candidate);
    }
    std::sort(sinks.begin(), sinks.end());
    return sinks;
}

std::vector<DegreeSequence> compute_sinks(const std::vector<DegreeSequence>& seqs) {
    std::vector<std::vector<int>> plain;
    plain.reserve(seqs.size());
    for (const auto& s : seqs) plain.emplace_back(s.entries().begin(), s.entries().end());
    std::vector<DegreeSequence> out;
    for (auto& s : compute_sinks(plain)) out.emplace_back(std::move(s));
    return out;
}

SinkReport subposet_report(int k, int m) {
    if (m < 2) throw std::invalid_argument("subposet_report: m must be >= 2");
    return subposet_report_for_n(k, m * (k + 1));
}

SinkReport subposet_report_for_n(int k, int n) {
    SinkReport report;
    report.k = k;
    report.n = n;
    if (n % (k + 1) == 0) report.m = n / (k + 1);

    const auto family = enumerate_family(k, n);
    std::vector<DegreeSequence> all;
    all.reserve(family.size());
    std::map<int, std::vector<const FamilyMember*>> groups;
    for (const auto& member : family) {
        all.push_back(member.degree_sequence);
        groups[member.j].push_back(&member);
    }
    report.sinks = compute_sinks(all);
    report.sink_count = static_cast<int>(report.sinks.size());

    for (const auto& [j, members] : groups) {
        GroupStats stats;
        stats.j = j;
        stats.count = static_cast<int>(members.size());
        stats.expected_count = partition_count_at_most(n - (k + 1) * j - 1, k * j + 1);
        stats.sinks = static_cast<int>(std::count_if(report.sinks.begin(), report.sinks.end(), [&](const auto& s) {
            return s.complete_degree_count() == j;
        }));
        if (BigInt(stats.count) != stats.expected_count) report.group_counts_match = false;

        for (std::size_t a = 0; a < members.size() && report.claim2; ++a) {
            for (std::size_t b = 0; b < members.size(); ++b) {
                if (a != b && strictly_majorizes(members[a]->degree_sequence, members[b]->degree_sequence)) {
                    report.claim2 = false;
                    break;
                }
            }
        }

        for (const auto* member : members) {
            const int largest_noncomplete = member->parts.back() + j - 1;
            if (largest_noncomplete >= n - k * (j + 1)) {
                ++report.claim3_checked;
                if (!std::binary_search(report.sinks.begin(), report.sinks.end(), member->degree_sequence)) {
                    report.claim3 = false;
                }
            }
        }
        report.groups.push_back(std::move(stats));
    }

    if (k >= 2 && report.m) {
        report.bound = Rational(partition_count(k - 1).convert_to<std::int64_t>() * n, 5 * (k + 1));
        report.bound_applies = *report.m >= 9;
        if (report.bound_applies) report.bound_met = Rational(report.sink_count) >= *report.bound;
    }
    return report;
}

std::vector<ChvatalCondition> generate_best_monotone(const std::vector<DegreeSequence>& sinks) {
    std::vector<ChvatalCondition> out;
    out.reserve(sinks.size());
    for (const auto& s : sinks) out.push_back(blocking_condition(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_weakly_optimal(const ChvatalCondition& c, const std::vector<DegreeSequence>& sinks) {
    const auto frontier = frontier_sequence(c);
    return std::any_of(sinks.begin(), sinks.end(), [&](const DegreeSequence& s) {
        if (s.n() != c.n()) throw std::invalid_argument("is_weakly_optimal: sink length differs from condition n");
        return majorizes(s, frontier);
    });
}

SweepSubposet sweep_subposet(int n, const std::function<bool(const Graph&)>& property) {
    if (n < 1 || n > kMaxSweepVertices) {
        throw std::length_error("sweep_subposet: n must be in [1, " + std::to_string(kMaxSweepVertices) + "]");
    }
    const int pairs = pair_count(n);
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    std::vector<bool> has(limit);
    for (std::uint64_t code = 0; code < limit; ++code) has[code] = property(graph_from_code(n, code));

    SweepSubposet out;
    out.n = n;
    for (std::uint64_t code = 0; code < limit; ++code) {
        if (has[code]) continue;
        bool maximal = true;
        for (int e = 0; e < pairs && maximal; ++e) {
            const std::uint64_t bit = std::uint64_t{1} << e;
            if (!(code & bit) && !has[code | bit]) maximal = false;
        }
        if (maximal) out.elements.push_back(graph_from_code(n, code).degree_sequence());
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
    out.sinks = compute_sinks(out.elements);
    return out;
}

}  // namespace toughseq
