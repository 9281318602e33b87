#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "toughseq/sequences.hpp"

namespace toughseq {

/// One clause "d_index >= threshold" (one-based index).
struct Clause {
    int index = 0;
    int threshold = 0;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// A Chvátal-type condition on n-sequences: the disjunction of its clauses.
///
/// Indices strictly increase, thresholds are nondecreasing and lie in [1, n].
/// The empty condition never holds. Because sequences are nondecreasing, a
/// clause (i, k) is implied by any clause (i', k') with i' >= i and k' <= k,
/// and clauses with k = n can never hold; canonicalize() removes both kinds.
class ChvatalCondition {
public:
    ChvatalCondition(int n, std::vector<Clause> clauses);

    int n() const noexcept { return n_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    bool empty() const noexcept { return clauses_.empty(); }

    friend bool operator==(const ChvatalCondition&, const ChvatalCondition&) = default;
    friend auto operator<=>(const ChvatalCondition&, const ChvatalCondition&) = default;

private:
    int n_;
    std::vector<Clause> clauses_;
};

bool evaluate(const ChvatalCondition& c, const DegreeSequence& seq);

/// Unique minimal equivalent form: thresholds < n, strictly increasing with index.
ChvatalCondition canonicalize(const ChvatalCondition& c);

bool is_canonical(const ChvatalCondition& c);

/// Syntactic equality of canonical forms. Throws on length mismatch.
bool equivalent(const ChvatalCondition& a, const ChvatalCondition& b);

/// C(pi): the weakest condition violated by pi, canonicalized. A sequence
/// violates it iff pi majorizes that sequence.
ChvatalCondition blocking_condition(const DegreeSequence& seq);

/// Pi(c): the minimal sequence majorizing every violator of c. May be non-graphical.
DegreeSequence frontier_sequence(const ChvatalCondition& c);

/// "d2>=3 | d5>=4"; the empty condition prints as "false".
std::string format_condition(const ChvatalCondition& c);

/// Accepts the format_condition syntax. `≥` and `∨` are accepted as
/// alternatives to `>=` and `|`; "false" or blank text is the empty condition.
ChvatalCondition parse_condition(std::string_view text, int n);

std::ostream& operator<<(std::ostream& os, const ChvatalCondition& c);

}  // namespace toughseq
