#pragma once

#include <string>

#include "degseq/characterize.hpp"
#include "degseq/oracle.hpp"
#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

enum class Decider { kPredicate, kOracle };

/// The smallest even sigma such that every graphic length-n sequence with sum
/// at least sigma_value is potentially pattern-graphic.
struct SigmaResult {
    int n = 0;
    std::string pattern;
    long long sigma_value = 0;
    /// A NO sequence of maximum sum (ties: lexicographically largest).
    DegreeSequence extremal_witness;
};

/// ((n-1)^2, 2^(n-2)): sum 4n-6, graphic, and NO for both shipped patterns
/// (it lands in the (n-k, k+i, 2^i) family with k=1, i=n-2 for k5-p4, and
/// fails d_3 >= 3 for k5-y4), which pins the threshold from below. The
/// construction does not depend on the pattern. Throws std::invalid_argument
/// when n < 5.
DegreeSequence lower_bound_witness(const TargetPattern& pattern, int n);

/// Scans every graphic sequence of length n with the chosen decider and
/// returns max sum over NO sequences plus 2, with the witness attaining it.
/// The sweep itself is capped by the enumeration ceiling for either decider;
/// Decider::kOracle additionally runs the exhaustive realization search per
/// sequence, and BudgetExhausted propagates. Throws std::invalid_argument
/// when n < 5.
SigmaResult compute_sigma(const TargetPattern& pattern, int n, Decider decider,
                          EnumerationBudget budget = {std::nullopt, true});

}  // namespace degseq
