#pragma once

#include <optional>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Outcome of laying off the smallest term d_n: the last term is removed, the
/// d_n largest remaining terms are each decremented, the result re-sorted and
/// zero terms dropped.
struct LayOffResult {
    DegreeSequence residual;
    /// Zero-based positions (into the sorted input) whose terms were
    /// decremented: always the prefix {0, ..., d_n - 1}.
    std::vector<int> reduced_positions;
};

/// Throws std::invalid_argument when the sequence has fewer than two terms or
/// d_n > n-1 (no lay-off exists; such a sequence is trivially non-graphic).
LayOffResult lay_off(const DegreeSequence& seq);

/// Erdos-Gallai test: even sum plus the prefix inequalities. The reference
/// decider. The empty sequence is graphic.
bool is_graphic_erdos_gallai(const DegreeSequence& seq);

/// Erdos-Gallai feasibility for a raw demand vector; zero entries are
/// allowed and ignored. Used for residual pruning in backtracking searches.
bool erdos_gallai_feasible(std::vector<int> demands);

/// Lay-off recursion: empty is graphic, otherwise graphic iff the lay-off
/// exists and its residual is graphic. Agrees with the Erdos-Gallai test on
/// every input.
bool is_graphic_lay_off(const DegreeSequence& seq);

/// Fast path for near-path shapes: when max term <= 2, min term == 1 and the
/// sum is even, the sequence is graphic. Returns nullopt whenever that
/// hypothesis does not apply; never returns false.
std::optional<bool> is_graphic_small_degree(const DegreeSequence& seq);

/// Builds a realization by repeatedly wiring the vertex of smallest positive
/// remaining demand (ties: lowest index) to the vertices of largest remaining
/// demand (ties: lowest index). Vertex i of the result has degree
/// seq.term(i). Deterministic. Runs no graphicality precheck: wiring
/// starvation is itself the proof of non-graphicality, reported as
/// std::invalid_argument. Success on every graphic input makes this a third
/// decider, independent of the summation tests above.
SimpleGraph havel_hakimi_realize(const DegreeSequence& seq);

}  // namespace degseq
