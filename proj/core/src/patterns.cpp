#include "degseq/patterns.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace degseq {

namespace {

// Builds and sanity-checks a pattern table entry; a mismatch here is a
// corrupted table, not a user error.
TargetPattern make_pattern(std::string name, std::vector<std::pair<int, int>> edges,
                           std::vector<int> expected_profile) {
    TargetPattern p;
    p.name = std::move(name);
    p.edges = std::move(edges);
    for (auto [u, v] : p.edges) {
        if (u < 0 || u >= 5 || v < 0 || v >= 5 || u >= v) {
            throw std::logic_error("pattern table corrupt: bad edge in " + p.name);
        }
        ++p.degree_by_vertex[static_cast<std::size_t>(u)];
        ++p.degree_by_vertex[static_cast<std::size_t>(v)];
    }
    p.degree_profile.assign(p.degree_by_vertex.begin(), p.degree_by_vertex.end());
    std::sort(p.degree_profile.begin(), p.degree_profile.end(), std::greater<int>());
    if (p.degree_profile != expected_profile || p.edge_count() * 2 != static_cast<int>(expected_profile[0] + expected_profile[1] + expected_profile[2] + expected_profile[3] + expected_profile[4])) {
        throw std::logic_error("pattern table corrupt: profile mismatch in " + p.name);
    }
    return p;
}

std::vector<int> default_host_order(const SimpleGraph& host) {
    std::vector<int> order(static_cast<std::size_t>(host.vertex_count()));
    for (int v = 0; v < host.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return host.degree(a) > host.degree(b); });
    return order;
}

}  // namespace

SimpleGraph TargetPattern::as_graph() const {
    SimpleGraph g(5);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

const TargetPattern& k5_minus_p4() {
    // K5 on {0..4} minus the path 0-1-2-3-4.
    static const TargetPattern p = make_pattern(
        "k5-p4", {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}}, {3, 3, 2, 2, 2});
    return p;
}

const TargetPattern& k5_minus_y4() {
    // K5 on {0..4} minus the tree {01, 12, 13, 34}.
    static const TargetPattern p = make_pattern(
        "k5-y4", {{0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 3}, {2, 4}}, {3, 3, 3, 2, 1});
    return p;
}

const TargetPattern* pattern_by_name(std::string_view name) {
    if (name == "k5-p4") return &k5_minus_p4();
    if (name == "k5-y4") return &k5_minus_y4();
    return nullptr;
}

std::optional<Embedding> find_embedding(const SimpleGraph& host, const TargetPattern& pattern,
                                        std::span<const int> prefer) {
    if (host.vertex_count() < 5 || host.edge_count() < pattern.edge_count()) return std::nullopt;

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(host.vertex_count()));
    std::vector<char> listed(static_cast<std::size_t>(host.vertex_count()), 0);
    for (int v : prefer) {
        if (v < 0 || v >= host.vertex_count()) {
            throw std::invalid_argument("prefer vertex out of range: " + std::to_string(v));
        }
        if (!listed[static_cast<std::size_t>(v)]) {
            listed[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
        }
    }
    for (int v : default_host_order(host)) {
        if (!listed[static_cast<std::size_t>(v)]) order.push_back(v);
    }

    // Assign pattern vertices highest degree first; both shipped patterns
    // give connected assignment orders, so partial maps prune on adjacency.
    std::array<int, 5> porder{0, 1, 2, 3, 4};
    std::stable_sort(porder.begin(), porder.end(), [&](int a, int b) {
        return pattern.degree_by_vertex[static_cast<std::size_t>(a)] >
               pattern.degree_by_vertex[static_cast<std::size_t>(b)];
    });

    std::array<int, 5> map{-1, -1, -1, -1, -1};
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    std::function<bool(int)> place = [&](int depth) -> bool {
        if (depth == 5) return true;
        const int pv = porder[static_cast<std::size_t>(depth)];
        for (int hv : order) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            if (host.degree(hv) < pattern.degree_by_vertex[static_cast<std::size_t>(pv)]) continue;
            bool consistent = true;
            for (auto [a, b] : pattern.edges) {
                const int other = (a == pv) ? b : (b == pv) ? a : -1;
                if (other < 0 || map[static_cast<std::size_t>(other)] < 0) continue;
                if (!host.has_edge(hv, map[static_cast<std::size_t>(other)])) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            map[static_cast<std::size_t>(pv)] = hv;
            used[static_cast<std::size_t>(hv)] = 1;
            if (place(depth + 1)) return true;
            used[static_cast<std::size_t>(hv)] = 0;
            map[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    Embedding e;
    e.map = map;
    return e;
}

bool embedding_valid(const SimpleGraph& host, const TargetPattern& pattern, const Embedding& e) {
    for (int p = 0; p < 5; ++p) {
        const int h = e.map[static_cast<std::size_t>(p)];
        if (h < 0 || h >= host.vertex_count()) return false;
        for (int q = p + 1; q < 5; ++q) {
            if (h == e.map[static_cast<std::size_t>(q)]) return false;
        }
    }
    for (auto [a, b] : pattern.edges) {
        if (!host.has_edge(e.map[static_cast<std::size_t>(a)], e.map[static_cast<std::size_t>(b)])) {
            return false;
        }
    }
    return true;
}

SimpleGraph remove_pattern(const SimpleGraph& host, const Embedding& e,
                           const TargetPattern& pattern) {
    SimpleGraph out = host;
    for (auto [a, b] : pattern.edges) {
        const int u = e.map[static_cast<std::size_t>(a)];
        const int v = e.map[static_cast<std::size_t>(b)];
        if (u < 0 || v < 0 || u >= host.vertex_count() || v >= host.vertex_count() ||
            !out.has_edge(u, v)) {
            throw std::invalid_argument("mapped pattern edge (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ") is absent from the host");
        }
        out.remove_edge(u, v);
    }
    return out;
}

}  // namespace degseq
