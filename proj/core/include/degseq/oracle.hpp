#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Hard size ceiling for exhaustive work; everything here is desk scale.
inline constexpr int kEnumerationCeiling = 10;

struct EnumerationBudget {
    /// Cap on backtracking nodes; unlimited when absent.
    std::optional<std::uint64_t> max_nodes;
    /// Stop at the first pattern-containing realization (oracle_potentially).
    bool short_circuit = false;
};

/// Raised when max_nodes runs out; carries the partial progress. Exhaustion
/// is a third state: it must never be read as a NO.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(std::uint64_t nodes, std::uint64_t graphs);

    std::uint64_t nodes_visited = 0;
    std::uint64_t graphs_emitted = 0;
};

/// Visits every labeled simple graph in which vertex i has degree
/// seq.term(i), exactly once, in a fixed order: forward neighbor sets are
/// chosen lexicographically, pruned by residual Erdos-Gallai feasibility.
/// Any other labeling of the same multiset is an isomorphic relabeling of a
/// visited graph, so containment questions lose nothing by the restriction.
/// The visited graph is a workspace; copy to keep. Return false from visit
/// to stop early. Throws std::invalid_argument when seq is not graphic or
/// longer than the ceiling; BudgetExhausted per budget.
void enumerate_realizations(const DegreeSequence& seq, EnumerationBudget budget,
                            const std::function<bool(const SimpleGraph&)>& visit,
                            int ceiling = kEnumerationCeiling);

/// Exhaustive ground truth: true iff some realization of seq contains the
/// pattern. With budget.short_circuit the search stops at the first witness.
/// BudgetExhausted propagates; it is never coerced to false.
bool oracle_potentially(const DegreeSequence& seq, const TargetPattern& pattern,
                        EnumerationBudget budget = {std::nullopt, true},
                        int ceiling = kEnumerationCeiling);

/// Visits every graphic sequence of length n (positive terms, term <= n-1,
/// even sum, Erdos-Gallai) in lexicographically descending order. Return
/// false from visit to stop early. Throws std::invalid_argument unless
/// 1 <= n <= ceiling.
void enumerate_graphic_sequences(int n, const std::function<bool(const DegreeSequence&)>& visit,
                                 int ceiling = kEnumerationCeiling);

/// Collecting conveniences.
std::vector<SimpleGraph> all_realizations(const DegreeSequence& seq, EnumerationBudget budget = {});
std::vector<DegreeSequence> all_graphic_sequences(int n);

}  // namespace degseq
