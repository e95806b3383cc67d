#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace degseq {

/// A degree sequence: positive integer terms kept in non-increasing order.
/// Terms larger than n-1 are representable; whether the sequence is graphic
/// is a separate question (see graphicality.hpp). The empty sequence is a
/// valid value and serves as the base case of the lay-off recursion; the
/// text parser rejects empty input.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Sorts non-increasingly. Throws std::invalid_argument on terms < 1.
    explicit DegreeSequence(std::vector<int> terms);

    int size() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }

    /// term(0) is the largest term.
    int term(int i) const { return terms_.at(static_cast<std::size_t>(i)); }

    const std::vector<int>& terms() const { return terms_; }

    /// Sum of all terms.
    long long sum() const;

    /// Largest term; throws std::invalid_argument when empty.
    int max_term() const;
    /// Smallest term; throws std::invalid_argument when empty.
    int min_term() const;

    /// Number of terms equal to value.
    int multiplicity(int value) const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

    /// Lexicographic order on the non-increasing term vectors.
    friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
        return a.terms_ <=> b.terms_;
    }

private:
    std::vector<int> terms_;
};

/// Parses the r^t notation: items separated by commas and/or whitespace, each
/// item a degree r >= 1 or r^t meaning t >= 1 copies of r. "4^2,3^2,2" is
/// (4,4,3,3,2). Item order does not matter; the result is canonical.
/// Throws std::invalid_argument naming the offending token on malformed
/// items, zero/negative degrees, zero repeat counts, and on empty input.
DegreeSequence parse_sequence(std::string_view text);

/// Compressed r^t rendering, inverse of parse_sequence: (4,4,3,3,2) is
/// "4^2,3^2,2"; a run of length one omits the exponent. Empty formats as "".
std::string format_sequence(const DegreeSequence& seq);

}  // namespace degseq
