#include "degseq/oracle.hpp"

#include <algorithm>
#include <string>

#include "degseq/graphicality.hpp"

namespace degseq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

struct Enumerator {
    const int n;
    EnumerationBudget budget;
    const std::function<bool(const SimpleGraph&)>& visit;
    SimpleGraph g;
    std::vector<int> demand;
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
    bool stopped = false;

    Enumerator(const DegreeSequence& seq, EnumerationBudget b,
               const std::function<bool(const SimpleGraph&)>& v)
        : n(seq.size()), budget(b), visit(v), g(seq.size()), demand(seq.terms()) {}

    void tick() {
        ++nodes;
        if (budget.max_nodes && nodes > *budget.max_nodes) {
            throw BudgetExhausted(nodes, emitted);
        }
    }

    void at_vertex(int v) {
        if (stopped) return;
        tick();
        std::vector<int> residual(demand.begin() + v, demand.end());
        if (!erdos_gallai_feasible(std::move(residual))) return;
        if (v == n) {
            ++emitted;
            if (!visit(g)) stopped = true;
            return;
        }
        pick(v, v + 1, demand[static_cast<std::size_t>(v)]);
    }

    // Chooses the remaining forward neighbors of v, lexicographically.
    void pick(int v, int from, int need) {
        if (stopped) return;
        if (need == 0) {
            at_vertex(v + 1);
            return;
        }
        for (int j = from; n - j >= need && !stopped; ++j) {
            if (demand[static_cast<std::size_t>(j)] == 0) continue;
            g.add_edge(v, j);
            --demand[static_cast<std::size_t>(j)];
            pick(v, j + 1, need - 1);
            ++demand[static_cast<std::size_t>(j)];
            g.remove_edge(v, j);
        }
    }
};

}  // namespace

BudgetExhausted::BudgetExhausted(std::uint64_t nodes, std::uint64_t graphs)
    : std::runtime_error("enumeration budget exhausted after " + std::to_string(nodes) +
                         " nodes (" + std::to_string(graphs) + " graphs emitted)"),
      nodes_visited(nodes),
      graphs_emitted(graphs) {}

void enumerate_realizations(const DegreeSequence& seq, EnumerationBudget budget,
                            const std::function<bool(const SimpleGraph&)>& visit, int ceiling) {
    if (budget.max_nodes && *budget.max_nodes == 0) {
        fail("budget max_nodes must be at least 1");
    }
    if (seq.size() > ceiling) {
        fail("sequence length " + std::to_string(seq.size()) +
             " exceeds the enumeration ceiling " + std::to_string(ceiling));
    }
    if (!is_graphic_erdos_gallai(seq)) {
        fail("cannot enumerate realizations of the non-graphic sequence " + format_sequence(seq));
    }
    Enumerator e(seq, budget, visit);
    e.at_vertex(0);
}

bool oracle_potentially(const DegreeSequence& seq, const TargetPattern& pattern,
                        EnumerationBudget budget, int ceiling) {
    bool found = false;
    enumerate_realizations(
        seq, budget,
        [&](const SimpleGraph& g) {
            if (find_embedding(g, pattern)) {
                found = true;
                if (budget.short_circuit) return false;
            }
            return true;
        },
        ceiling);
    return found;
}

void enumerate_graphic_sequences(int n, const std::function<bool(const DegreeSequence&)>& visit,
                                 int ceiling) {
    if (n < 1 || n > ceiling) {
        fail("sequence length " + std::to_string(n) + " is outside [1, " +
             std::to_string(ceiling) + "]");
    }
    std::vector<int> terms(static_cast<std::size_t>(n));
    bool stopped = false;
    // Descending-lex generation: position p ranges over 1..min(n-1, terms[p-1]).
    std::function<void(int, long long)> place = [&](int p, long long sum) {
        if (stopped) return;
        if (p == n) {
            if (sum % 2 != 0) return;
            DegreeSequence seq(terms);
            if (!is_graphic_erdos_gallai(seq)) return;
            if (!visit(seq)) stopped = true;
            return;
        }
        const int hi = p == 0 ? n - 1 : terms[static_cast<std::size_t>(p) - 1];
        for (int d = hi; d >= 1 && !stopped; --d) {
            terms[static_cast<std::size_t>(p)] = d;
            place(p + 1, sum + d);
        }
    };
    place(0, 0);
}

std::vector<SimpleGraph> all_realizations(const DegreeSequence& seq, EnumerationBudget budget) {
    std::vector<SimpleGraph> out;
    enumerate_realizations(seq, budget, [&](const SimpleGraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::vector<DegreeSequence> all_graphic_sequences(int n) {
    std::vector<DegreeSequence> out;
    enumerate_graphic_sequences(n, [&](const DegreeSequence& seq) {
        out.push_back(seq);
        return true;
    });
    return out;
}

}  // namespace degseq
