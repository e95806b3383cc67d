#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

/// Finite simple graph on labeled vertices 0..n-1: no loops, no parallel
/// edges. Backed by an adjacency matrix; sized for small dense work.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    /// Throws std::invalid_argument on out-of-range endpoints, loops and
    /// duplicate edges.
    void add_edge(int u, int v);
    /// Throws std::invalid_argument when the edge is absent.
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint8_t> adj_;  // n_ * n_ matrix
    std::vector<int> degree_;
};

/// Degree sequence of g, non-increasing. Throws std::invalid_argument naming
/// the isolated vertices when any exist (zero terms are not representable).
DegreeSequence degree_sequence_of(const SimpleGraph& g);

/// Serializes as a line "n <vertex_count>" followed by one "u v" line per
/// edge, 0-indexed, u < v, sorted lexicographically.
std::string to_text(const SimpleGraph& g);

/// Parses the to_text format. Throws std::invalid_argument on malformed
/// input, out-of-range endpoints, loops and duplicate edges.
SimpleGraph graph_from_text(std::string_view text);

}  // namespace degseq
