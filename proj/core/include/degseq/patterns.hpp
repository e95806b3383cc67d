#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// A fixed 5-vertex target pattern with a pinned labeling.
struct TargetPattern {
    std::string name;
    std::vector<std::pair<int, int>> edges;
    /// Non-increasing degree multiset.
    std::vector<int> degree_profile;
    std::array<int, 5> degree_by_vertex{};

    int edge_count() const { return static_cast<int>(edges.size()); }
    SimpleGraph as_graph() const;
};

/// K5 with a 4-edge path on all five vertices removed: 6 edges, degree
/// profile (3,3,2,2,2). Labeling: K5 on {0..4} minus 01, 12, 23, 34; the two
/// degree-3 vertices (0 and 4, the removed path's endpoints) are adjacent.
const TargetPattern& k5_minus_p4();

/// K5 with the 4 edges of the 3-leaf tree on five vertices removed (center 1
/// joined to leaves 0 and 2, arm 1-3-4): 6 edges, degree profile (3,3,3,2,1).
/// Labeling: K5 on {0..4} minus 01, 12, 13, 34.
const TargetPattern& k5_minus_y4();

/// Lookup by the CLI spelling "k5-p4" / "k5-y4"; nullptr when unknown.
const TargetPattern* pattern_by_name(std::string_view name);

/// Injective map of pattern vertices: pattern vertex p lands on map[p].
struct Embedding {
    std::array<int, 5> map{};

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Finds a (not necessarily induced) copy of the pattern in the host by
/// backtracking over injective maps with degree pruning. Host candidates are
/// tried in `prefer` order first, the remaining hosts following in
/// non-increasing-degree order (ties by lowest index); with an empty prefer
/// list that default order is used throughout. Deterministic. Throws
/// std::invalid_argument on out-of-range prefer entries.
std::optional<Embedding> find_embedding(const SimpleGraph& host, const TargetPattern& pattern,
                                        std::span<const int> prefer = {});

/// True when e is injective, in range, and every pattern edge lands on a
/// host edge.
bool embedding_valid(const SimpleGraph& host, const TargetPattern& pattern, const Embedding& e);

/// Removes exactly the mapped pattern edges; vertices are unchanged. Throws
/// std::invalid_argument if a mapped pattern edge is absent from the host.
/// Re-adding the same mapped edges reproduces the host.
SimpleGraph remove_pattern(const SimpleGraph& host, const Embedding& e,
                           const TargetPattern& pattern);

}  // namespace degseq
