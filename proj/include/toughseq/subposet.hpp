#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "toughseq/conditions.hpp"
#include "toughseq/graphs.hpp"
#include "toughseq/partitions.hpp"
#include "toughseq/rational.hpp"
#include "toughseq/sequences.hpp"

namespace toughseq {

/// One graph K_j + (K_{c_1} ∪ ... ∪ K_{c_{kj+1}}) of the connected
/// edge-maximal non-(1/k)-tough family on n vertices, with c nondecreasing.
struct FamilyMember {
    int k = 1;
    int n = 0;
    int j = 0;
    std::vector<int> parts;
    DegreeSequence degree_sequence{std::vector<int>{0}};

    Graph realization() const;
};

/// For every j >= 1 with j(k+1) < n, all partitions of n-j into exactly kj+1
/// parts. Ordered by j, then lexicographically by the nondecreasing part list.
std::vector<FamilyMember> enumerate_family(int k, int n);

/// Majorization-maximal elements, deduplicated and sorted lexicographically.
std::vector<DegreeSequence> compute_sinks(const std::vector<DegreeSequence>& seqs);
/// Same on plain nondecreasing integer sequences (entries need not be below n).
std::vector<std::vector<int>> compute_sinks(const std::vector<std::vector<int>>& seqs);

struct GroupStats {
    int j = 0;
    int count = 0;
    BigInt expected_count;  // p_{kj+1}(N(j)), N(j) = n - (k+1)j - 1
    int sinks = 0;          // family sinks with exactly j complete degrees
};

struct SinkReport {
    int k = 1;
    int n = 0;
    std::optional<int> m;  // n / (k+1) when it divides
    std::vector<GroupStats> groups;
    std::vector<DegreeSequence> sinks;
    int sink_count = 0;
    std::optional<Rational> bound;  // p(k-1) n / (5(k+1)); present when k >= 2 and (k+1) | n
    bool bound_applies = false;     // k >= 2, n = m(k+1), m >= 9
    bool bound_met = true;          // sink_count >= bound (checked only when bound_applies)
    bool group_counts_match = true;
    bool claim2 = true;  // no majorization inside a group
    bool claim3 = true;  // large-noncomplete-degree members are sinks
    int claim3_checked = 0;
};

/// Full report for the family at n = m(k+1).
SinkReport subposet_report(int k, int m);
/// Same machinery for arbitrary n; m is recorded only when (k+1) divides n.
SinkReport subposet_report_for_n(int k, int n);

/// One canonical blocking condition C(pi) per sink, deduplicated. A sequence
/// satisfies all of them iff no sink majorizes it.
std::vector<ChvatalCondition> generate_best_monotone(const std::vector<DegreeSequence>& sinks);

/// True iff Pi(c) is majorized by some sink.
bool is_weakly_optimal(const ChvatalCondition& c, const std::vector<DegreeSequence>& sinks);

/// Degree sequences of all edge-maximal n-vertex graphs lacking `property`
/// (increasing properties only), found by sweeping every labeled graph.
struct SweepSubposet {
    int n = 0;
    std::vector<DegreeSequence> elements;  // distinct, sorted
    std::vector<DegreeSequence> sinks;
};

SweepSubposet sweep_subposet(int n, const std::function<bool(const Graph&)>& property);

}  // namespace toughseq
