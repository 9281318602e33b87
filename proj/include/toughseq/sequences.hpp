#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toughseq {

/// An n-sequence (d_1 <= ... <= d_n) with 0 <= d_j <= n-1.
///
/// Construction sorts the input, so a DegreeSequence is always nondecreasing.
/// The sequence need not be graphical: frontier sequences and blocking
/// sequences are judged whether or not a graph realizes them.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    int n() const noexcept { return static_cast<int>(entries_.size()); }

    /// One-based access, d(1) is the smallest entry.
    int d(int index) const { return entries_.at(static_cast<std::size_t>(index - 1)); }

    std::span<const int> entries() const noexcept { return entries_; }
    long long sum() const noexcept;

    /// Number of entries equal to n-1.
    int complete_degree_count() const noexcept;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> entries_;
};

/// Parses "4^5 5^2 6" (whitespace separated runs) or "2,2,2" (plain list).
/// Throws std::invalid_argument on malformed or out-of-range input.
DegreeSequence parse_sequence(std::string_view text);

/// Run-length form with `^m` omitted when m == 1, e.g. "4^5 5^2 6".
std::string format_sequence(const DegreeSequence& seq);

/// Even degree sum plus the Erdős–Gallai inequalities.
bool is_graphical(const DegreeSequence& seq);

/// Entry-wise dominance: true iff a_j >= b_j for all j. Throws on length mismatch.
bool majorizes(const DegreeSequence& a, const DegreeSequence& b);

/// Same entrywise test on plain nondecreasing integer sequences of equal length.
bool majorizes(std::span<const int> a, std::span<const int> b);

std::ostream& operator<<(std::ostream& os, const DegreeSequence& seq);

}  // namespace toughseq
