#include "degseq/characterize.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "degseq/graphicality.hpp"

namespace degseq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_checkable(const DegreeSequence& seq, const std::string& who) {
    if (seq.size() < 5) {
        fail(who + " needs at least 5 terms, got " + std::to_string(seq.size()));
    }
    if (!is_graphic_erdos_gallai(seq)) {
        fail(who + " needs a graphic sequence, got " + format_sequence(seq));
    }
}

Verdict yes() { return Verdict{true, std::nullopt, std::nullopt}; }

Verdict no(Condition c) { return Verdict{false, c, std::nullopt}; }

Verdict no(Condition c, FamilyMatch m) { return Verdict{false, c, m}; }

// One distinct labeling = one way to place the pattern's edges onto five
// slots; permutations that induce the same edge set are automorphic copies.
struct Placement {
    std::vector<std::pair<int, int>> slot_edges;
    std::array<int, 5> slot_degree{};
    std::array<int, 5> host_of_pattern{};  // pattern vertex -> slot position
};

std::vector<Placement> distinct_placements(const TargetPattern& pattern) {
    std::vector<Placement> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    do {
        Placement pl;
        pl.slot_edges.reserve(pattern.edges.size());
        for (auto [a, b] : pattern.edges) {
            int u = perm[static_cast<std::size_t>(a)];
            int v = perm[static_cast<std::size_t>(b)];
            pl.slot_edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(pl.slot_edges.begin(), pl.slot_edges.end());
        if (!seen.insert(pl.slot_edges).second) continue;
        for (int p = 0; p < 5; ++p) {
            const int slot = perm[static_cast<std::size_t>(p)];
            pl.slot_degree[static_cast<std::size_t>(slot)] =
                pattern.degree_by_vertex[static_cast<std::size_t>(p)];
            pl.host_of_pattern[static_cast<std::size_t>(p)] = slot;
        }
        out.push_back(std::move(pl));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Exact-demand completion: decide each vertex's forward neighbor set in
// lexicographic order, pruning with Erdos-Gallai feasibility of the residual
// demands (a necessary condition even with the placed edges forbidden).
bool complete_demands(SimpleGraph& g, std::vector<int>& demand) {
    const int n = g.vertex_count();
    std::function<bool(int, int, int)> pick = [&](int v, int from, int need) -> bool {
        if (need == 0) {
            std::vector<int> residual(demand.begin() + v + 1, demand.end());
            if (!erdos_gallai_feasible(std::move(residual))) return false;
            if (v + 1 == n) return true;
            return pick(v + 1, v + 2, demand[static_cast<std::size_t>(v) + 1]);
        }
        for (int j = from; n - j >= need; ++j) {
            if (demand[static_cast<std::size_t>(j)] == 0 || g.has_edge(v, j)) continue;
            g.add_edge(v, j);
            --demand[static_cast<std::size_t>(j)];
            if (pick(v, j + 1, need - 1)) return true;
            ++demand[static_cast<std::size_t>(j)];
            g.remove_edge(v, j);
        }
        return false;
    };
    if (n == 0) return true;
    return pick(0, 1, demand[0]);
}

}  // namespace

std::string_view condition_id(Condition c) {
    switch (c) {
        case Condition::kP4_1: return "P4-1";
        case Condition::kP4_2: return "P4-2";
        case Condition::kP4_3: return "P4-3";
        case Condition::kP4_4: return "P4-4";
        case Condition::kP4_5: return "P4-5";
        case Condition::kY4_1: return "Y4-1";
        case Condition::kY4_2: return "Y4-2";
        case Condition::kY4_3: return "Y4-3";
    }
    return "?";
}

Verdict check_k5_p4(const DegreeSequence& seq) {
    require_checkable(seq, "k5-p4 check");
    const int n = seq.size();
    if (seq.term(1) < 3) return no(Condition::kP4_1);
    if (seq.term(4) < 2) return no(Condition::kP4_2);
    if ((n == 6 || n == 7) && seq.multiplicity(3) == 2 && seq.multiplicity(2) == n - 2) {
        return no(Condition::kP4_5);
    }
    if (auto m = match_condition3(seq)) return no(Condition::kP4_3, *m);
    if (auto m = match_condition4(seq)) return no(Condition::kP4_4, *m);
    return yes();
}

Verdict check_k5_y4(const DegreeSequence& seq) {
    require_checkable(seq, "k5-y4 check");
    if (seq.term(2) < 3) return no(Condition::kY4_1);
    if (seq.term(3) < 2) return no(Condition::kY4_2);
    if (seq.size() == 6 && seq.multiplicity(3) == 6) return no(Condition::kY4_3);
    return yes();
}

Verdict check_pattern(const DegreeSequence& seq, const TargetPattern& pattern) {
    if (pattern.name == "k5-p4") return check_k5_p4(seq);
    if (pattern.name == "k5-y4") return check_k5_y4(seq);
    fail("no decision predicate for pattern '" + pattern.name + "'");
}

SimpleGraph realize_with_pattern(const DegreeSequence& seq, const TargetPattern& pattern) {
    const Verdict v = check_pattern(seq, pattern);
    if (!v.potential) {
        fail(format_sequence(seq) + " is not potentially " + pattern.name + "-graphic (" +
             std::string(condition_id(*v.violated)) + ")");
    }
    const int n = seq.size();
    const std::vector<Placement> placements = distinct_placements(pattern);

    // The five highest-degree slots {0..4} host the pattern; the subset loop
    // below only widens past them if every labeling fails there, which a YES
    // verdict rules out.
    std::vector<int> subset{0, 1, 2, 3, 4};
    auto try_subset = [&](const std::vector<int>& slots) -> std::optional<SimpleGraph> {
        for (const Placement& pl : placements) {
            bool fits = true;
            for (int s = 0; s < 5; ++s) {
                if (seq.term(slots[static_cast<std::size_t>(s)]) <
                    pl.slot_degree[static_cast<std::size_t>(s)]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            SimpleGraph g(n);
            std::vector<int> demand = seq.terms();
            for (auto [a, b] : pl.slot_edges) {
                const int u = slots[static_cast<std::size_t>(a)];
                const int w = slots[static_cast<std::size_t>(b)];
                g.add_edge(u, w);
                --demand[static_cast<std::size_t>(u)];
                --demand[static_cast<std::size_t>(w)];
            }
            if (complete_demands(g, demand)) return g;
        }
        return std::nullopt;
    };

    if (auto g = try_subset(subset)) return *g;
    // Safety net; unreachable for a correct predicate.
    std::vector<char> pickmask(static_cast<std::size_t>(n), 0);
    std::fill(pickmask.begin(), pickmask.begin() + 5, 1);
    std::vector<int> slots;
    do {
        slots.clear();
        for (int i = 0; i < n; ++i) {
            if (pickmask[static_cast<std::size_t>(i)]) slots.push_back(i);
        }
        if (slots == subset) continue;
        if (auto g = try_subset(slots)) return *g;
    } while (std::prev_permutation(pickmask.begin(), pickmask.end()));
    throw std::logic_error("realization search failed for YES sequence " + format_sequence(seq) +
                           " with pattern " + pattern.name);
}

std::vector<int> residual_after_pattern(const DegreeSequence& seq, const TargetPattern& pattern) {
    if (seq.size() < 5) {
        fail("pattern residual needs at least 5 terms, got " + std::to_string(seq.size()));
    }
    std::vector<int> out = seq.terms();
    for (int i = 0; i < 5; ++i) {
        out[static_cast<std::size_t>(i)] -= pattern.degree_profile[static_cast<std::size_t>(i)];
        if (out[static_cast<std::size_t>(i)] < 0) {
            fail("pattern degree exceeds term at position " + std::to_string(i) + ": " +
                 std::to_string(seq.term(i)) + " < " +
                 std::to_string(pattern.degree_profile[static_cast<std::size_t>(i)]));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

int condition4_cut_defect(int n, int k, int i) {
    if (n < 5 || k < 1 || k > (n - 1) / 2 - 1 || i < 3 || i > n - 2 * k) {
        fail("parameters outside condition-4 ranges: n=" + std::to_string(n) + ", k=" +
             std::to_string(k) + ", i=" + std::to_string(i));
    }
    return ((n - k - 3) + (k + i - 3)) - (2 * (i - 3) + (n - i - 2));
}

}  // namespace degseq
