#pragma once

#include <optional>

#include "degseq/sequence.hpp"

namespace degseq {

/// The two exceptional sequence families excluded by the k5-p4 decision
/// predicate; the names line up with the verdict condition ids P4-3 / P4-4.
enum class FamilyKind {
    kCond3,  // (n-1, k, 2^t, 1^(n-2-t)), k and t of different parity
    kCond4,  // (n-k, k+i, 2^i, 1^(n-i-2))
};

struct FamilyMatch {
    FamilyKind kind = FamilyKind::kCond3;
    int k = 0;
    /// The t parameter for kCond3, the i parameter for kCond4.
    int second = 0;

    friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

/// Builds the length-n family member for the given parameters. Throws
/// std::invalid_argument when the parameters are outside the family ranges
/// (kCond3 additionally requires k and t of different parity).
DegreeSequence family_template(FamilyKind kind, int n, int k, int second);

/// Matches (n-1, k, 2^t, 1^(n-2-t)) with k, t in {3..n-2} and k, t of
/// different parity; the run of trailing 1s may be empty. At most one (k, t)
/// can fit. Returns nullopt for sequences shorter than 5 terms.
std::optional<FamilyMatch> match_condition3(const DegreeSequence& seq);

/// Matches the multiset (n-k, k+i, 2^i, 1^(n-i-2)) with
/// 1 <= k <= floor((n-1)/2) - 1 and 3 <= i <= n-2k; the two leading terms may
/// coincide (n-k == k+i). Were several parameter pairs to fit, the smallest k
/// and then smallest i would win; the parameters are in fact forced.
std::optional<FamilyMatch> match_condition4(const DegreeSequence& seq);

}  // namespace degseq
