#include "toughseq/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toughseq {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
    int value = 0;
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("sequence: malformed token '" + std::string(whole) + "'");
    }
    return value;
}

void append_run(std::string_view token, std::vector<int>& out) {
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
        out.push_back(parse_int(token, token));
        return;
    }
    const int value = parse_int(token.substr(0, caret), token);
    const int count = parse_int(token.substr(caret + 1), token);
    if (count < 1) throw std::invalid_argument("sequence: run length must be >= 1 in '" + std::string(token) + "'");
    if (count > 100000) throw std::invalid_argument("sequence: run length too large in '" + std::string(token) + "'");
    out.insert(out.end(), static_cast<std::size_t>(count), value);
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("sequence: empty sequence");
    std::sort(entries_.begin(), entries_.end());
    const int n = static_cast<int>(entries_.size());
    if (entries_.front() < 0) throw std::invalid_argument("sequence: negative entry");
    if (entries_.back() > n - 1) {
        throw std::invalid_argument("sequence: entry " + std::to_string(entries_.back()) +
                                    " exceeds n-1 = " + std::to_string(n - 1));
    }
}

long long DegreeSequence::sum() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

int DegreeSequence::complete_degree_count() const noexcept {
    const int top = n() - 1;
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), top));
}

DegreeSequence parse_sequence(std::string_view text) {
    std::vector<int> values;
    const bool comma_form = text.find(',') != std::string_view::npos;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            if (comma_form && token.find('^') != std::string::npos) {
                throw std::invalid_argument("sequence: exponents are not allowed in comma lists");
            }
            append_run(token, values);
            token.clear();
        }
    };
    for (const char ch : text) {
        const bool separator = ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || (comma_form && ch == ',');
        if (separator) {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    if (comma_form) {
        // Every comma must separate two values.
        const auto commas = std::count(text.begin(), text.end(), ',');
        if (static_cast<std::size_t>(commas) + 1 != values.size()) {
            throw std::invalid_argument("sequence: malformed comma list '" + std::string(text) + "'");
        }
    }
    if (values.empty()) throw std::invalid_argument("sequence: empty input");
    return DegreeSequence(std::move(values));
}

std::string format_sequence(const DegreeSequence& seq) {
    std::ostringstream os;
    const auto entries = seq.entries();
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && entries[j] == entries[i]) ++j;
        if (i != 0) os << ' ';
        os << entries[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

bool is_graphical(const DegreeSequence& seq) {
    if (seq.sum() % 2 != 0) return false;
    // Erdős–Gallai over the nonincreasing order.
    std::vector<long long> desc(seq.entries().rbegin(), seq.entries().rend());
    const std::size_t n = desc.size();
    long long prefix = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        prefix += desc[r - 1];
        long long rhs = static_cast<long long>(r) * static_cast<long long>(r - 1);
        for (std::size_t j = r; j < n; ++j) rhs += std::min<long long>(desc[j], static_cast<long long>(r));
        if (prefix > rhs) return false;
    }
    return true;
}

bool majorizes(const DegreeSequence& a, const DegreeSequence& b) { return majorizes(a.entries(), b.entries()); }

bool majorizes(std::span<const int> x, std::span<const int> y) {
    if (x.size() != y.size()) throw std::invalid_argument("majorizes: length mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < y[j]) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const DegreeSequence& seq) { return os << format_sequence(seq); }

}  // namespace toughseq
