#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "degseq/families.hpp"
#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Conditions a sequence can violate, named by pattern and position in the
/// reporting order. P4-3 and P4-4 carry family parameters.
enum class Condition {
    kP4_1,  // d_2 >= 3
    kP4_2,  // d_5 >= 2
    kP4_3,  // not a (n-1, k, 2^t, 1^(n-2-t)) family member
    kP4_4,  // not a (n-k, k+i, 2^i, 1^(n-i-2)) family member
    kP4_5,  // for n in {6,7}: not (3^2, 2^(n-2))
    kY4_1,  // d_3 >= 3
    kY4_2,  // d_4 >= 2
    kY4_3,  // not (3^6)
};

/// Stable identifier, e.g. "P4-4".
std::string_view condition_id(Condition c);

/// Decision outcome: YES when some realization contains the pattern.
struct Verdict {
    bool potential = false;
    std::optional<Condition> violated;
    std::optional<FamilyMatch> family;
};

/// Decides whether the graphic sequence (n >= 5) is potentially
/// k5-p4-graphic. On NO reports the first violated condition in the order
/// P4-1, P4-2, P4-5, P4-3, P4-4, attaching the family parameters for the
/// last two. Throws std::invalid_argument when n < 5 or seq is not graphic.
Verdict check_k5_p4(const DegreeSequence& seq);

/// Same for k5-y4; conditions Y4-1, Y4-2, Y4-3 in that order.
Verdict check_k5_y4(const DegreeSequence& seq);

/// Dispatches on pattern name. Throws std::invalid_argument for patterns
/// without a decision predicate.
Verdict check_pattern(const DegreeSequence& seq, const TargetPattern& pattern);

/// Builds a realization of seq containing the pattern: places the pattern on
/// the five highest-degree slots (trying the distinct labelings before
/// widening the slot subset) and completes the remaining demands by
/// backtracking edge insertion. Requires a YES verdict: a NO throws
/// std::invalid_argument; a completion failure despite YES is a defect and
/// throws std::logic_error.
SimpleGraph realize_with_pattern(const DegreeSequence& seq, const TargetPattern& pattern);

/// Subtracts the pattern's degree profile from the five largest terms
/// (largest against largest), re-sorts non-increasingly and keeps zeros:
/// the demand left over once the pattern occupies the top-degree vertices.
/// Throws std::invalid_argument when n < 5 or a subtraction goes negative.
std::vector<int> residual_after_pattern(const DegreeSequence& seq, const TargetPattern& pattern);

/// [(n-k-3) + (k+i-3)] - [2(i-3) + (n-i-2)]: degree the two pattern-hosting
/// vertices still demand across the cut, minus what the rest can absorb.
/// Equals 2 for every admissible (n, k, i); that constant surplus is the
/// contradiction behind condition P4-4. Throws std::invalid_argument outside
/// the condition-4 parameter ranges.
int condition4_cut_defect(int n, int k, int i);

}  // namespace degseq
