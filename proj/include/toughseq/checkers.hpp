#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toughseq/conditions.hpp"
#include "toughseq/graphs.hpp"
#include "toughseq/rational.hpp"
#include "toughseq/sequences.hpp"

namespace toughseq {

/// Which clause family of a checker failed.
///
/// The simple t <= 1 checker has two families: Separator is the
/// "d_i >= i-k+2 or d_{n-i+k-1} >= n-i" list and Connectivity the
/// "d_i >= i or d_n >= n-i" list. The other checkers use Main only.
enum class ClauseFamily { Main, Separator, Connectivity };

std::string to_string(ClauseFamily family);

/// A tested clause pair together with the index that generated it.
struct TestedCondition {
    int index = 0;
    ClauseFamily family = ClauseFamily::Main;
    ChvatalCondition condition;
};

/// Outcome of a forcibly-P checker.
///
/// declared is true iff failing_index is empty. When the checker fails it
/// reports the first failing index; if it can also name an extremal
/// non-P graph, blocking_sequence majorizes the input and blocking_graph
/// realizes blocking_sequence.
struct Verdict {
    bool declared = true;
    std::optional<int> failing_index;
    std::optional<ClauseFamily> failing_family;
    std::optional<DegreeSequence> blocking_sequence;
    std::optional<Graph> blocking_graph;
    std::string blocking_graph_spec;  // e.g. "K_2+(K̄_2∪K_2)"
    std::vector<TestedCondition> conditions;
};

struct CheckOptions {
    /// Judge sequences that no graph realizes. Weak-optimality arguments
    /// quantify over arbitrary n-sequences, so the algebra must accept them.
    bool allow_nongraphical = false;
};

/// Chvátal: for i < n/2, d_i <= i implies d_{n-i} >= n-i. Requires n >= 3.
Verdict check_hamiltonian_chvatal(const DegreeSequence& seq, CheckOptions opts = {});

/// Bondy–Boesch: for 1 <= i <= (n-k+1)/2, d_i <= i+k-2 implies d_{n-k+1} >= n-i.
Verdict check_kconnected(const DegreeSequence& seq, int k, CheckOptions opts = {});

/// Best monotone t-tough theorem for t >= 1:
/// d_{floor(i/t)} >= i+1 or d_{n-i} >= n-floor(i/t), for ceil(t) <= i < tn/(t+1).
Verdict check_tough_ge1(const DegreeSequence& seq, const Rational& t, CheckOptions opts = {});

/// Simple t-tough theorem for 0 < t <= 1 with k = floor(1/t).
Verdict check_tough_le1(const DegreeSequence& seq, const Rational& t, CheckOptions opts = {});

/// Clause lists without a sequence to judge. These are what the checkers test.
std::vector<TestedCondition> hamiltonian_conditions(int n);
std::vector<TestedCondition> kconnected_conditions(int n, int k);
std::vector<TestedCondition> tough_ge1_conditions(int n, const Rational& t);
std::vector<TestedCondition> tough_le1_conditions(int n, const Rational& t);

}  // namespace toughseq
