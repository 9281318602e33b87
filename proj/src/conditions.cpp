#include "toughseq/conditions.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace toughseq {

ChvatalCondition::ChvatalCondition(int n, std::vector<Clause> clauses) : n_(n), clauses_(std::move(clauses)) {
    if (n_ < 1) throw std::invalid_argument("condition: n must be >= 1");
    for (std::size_t s = 0; s < clauses_.size(); ++s) {
        const auto& cl = clauses_[s];
        if (cl.index < 1 || cl.index > n_) {
            throw std::invalid_argument("condition: clause index " + std::to_string(cl.index) + " outside [1, n]");
        }
        if (cl.threshold < 1 || cl.threshold > n_) {
            throw std::invalid_argument("condition: clause threshold " + std::to_string(cl.threshold) +
                                        " outside [1, n]");
        }
        if (s > 0) {
            const auto& prev = clauses_[s - 1];
            if (cl.index <= prev.index) throw std::invalid_argument("condition: indices must strictly increase");
            if (cl.threshold < prev.threshold) throw std::invalid_argument("condition: thresholds must not decrease");
        }
    }
}

bool evaluate(const ChvatalCondition& c, const DegreeSequence& seq) {
    if (c.n() != seq.n()) throw std::invalid_argument("evaluate: length mismatch");
    return std::any_of(c.clauses().begin(), c.clauses().end(),
                       [&](const Clause& cl) { return seq.d(cl.index) >= cl.threshold; });
}

ChvatalCondition canonicalize(const ChvatalCondition& c) {
    // Scan from the largest index down; a clause survives only if its
    // threshold beats every clause to its right.
    std::vector<Clause> kept;
    int best = c.n();
    for (auto it = c.clauses().rbegin(); it != c.clauses().rend(); ++it) {
        if (it->threshold < best) {
            kept.push_back(*it);
            best = it->threshold;
        }
    }
    std::reverse(kept.begin(), kept.end());
    return ChvatalCondition(c.n(), std::move(kept));
}

bool is_canonical(const ChvatalCondition& c) { return canonicalize(c) == c; }

bool equivalent(const ChvatalCondition& a, const ChvatalCondition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("equivalent: length mismatch");
    return canonicalize(a) == canonicalize(b);
}

ChvatalCondition blocking_condition(const DegreeSequence& seq) {
    std::vector<Clause> clauses;
    clauses.reserve(seq.size());
    for (int i = 1; i <= seq.n(); ++i) clauses.push_back({i, seq.d(i) + 1});
    return canonicalize(ChvatalCondition(seq.n(), std::move(clauses)));
}

DegreeSequence frontier_sequence(const ChvatalCondition& c) {
    const auto canon = canonicalize(c);
    std::vector<int> entries(static_cast<std::size_t>(canon.n()), canon.n() - 1);
    int pos = 1;
    for (const auto& cl : canon.clauses()) {
        for (; pos <= cl.index; ++pos) entries[static_cast<std::size_t>(pos - 1)] = cl.threshold - 1;
    }
    return DegreeSequence(std::move(entries));
}

std::string format_condition(const ChvatalCondition& c) {
    if (c.empty()) return "false";
    std::ostringstream os;
    for (std::size_t s = 0; s < c.clauses().size(); ++s) {
        if (s > 0) os << " | ";
        os << 'd' << c.clauses()[s].index << ">=" << c.clauses()[s].threshold;
    }
    return os.str();
}

namespace {

std::string normalize_operators(std::string_view text) {
    std::string out(text);
    auto replace_all = [&](std::string_view from, std::string_view to) {
        for (auto pos = out.find(from); pos != std::string::npos; pos = out.find(from, pos + to.size())) {
            out.replace(pos, from.size(), to);
        }
    };
    replace_all("≥", ">=");
    replace_all("∨", "|");
    return out;
}

int parse_number(std::string_view token, std::string_view clause) {
    int value = 0;
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("condition: malformed clause '" + std::string(clause) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

ChvatalCondition parse_condition(std::string_view text, int n) {
    const std::string normalized = normalize_operators(text);
    const std::string_view body = trim(normalized);
    if (body.empty() || body == "false") return ChvatalCondition(n, {});
    std::vector<Clause> clauses;
    std::size_t start = 0;
    while (start <= body.size()) {
        const auto bar = body.find('|', start);
        const auto piece = trim(body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
        if (piece.size() < 4 || piece.front() != 'd') {
            throw std::invalid_argument("condition: malformed clause '" + std::string(piece) + "'");
        }
        const auto ge = piece.find(">=");
        if (ge == std::string_view::npos) {
            throw std::invalid_argument("condition: missing '>=' in '" + std::string(piece) + "'");
        }
        clauses.push_back({parse_number(trim(piece.substr(1, ge - 1)), piece),
                           parse_number(trim(piece.substr(ge + 2)), piece)});
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return ChvatalCondition(n, std::move(clauses));
}

std::ostream& operator<<(std::ostream& os, const ChvatalCondition& c) { return os << format_condition(c); }

}  // namespace toughseq
