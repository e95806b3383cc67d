#include "degseq/graphicality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace degseq {

LayOffResult lay_off(const DegreeSequence& seq) {
    const int n = seq.size();
    if (n < 2) throw std::invalid_argument("lay-off needs at least two terms");
    const int d = seq.min_term();
    if (d > n - 1) {
        throw std::invalid_argument("cannot lay off smallest term " + std::to_string(d) +
                                    ": only " + std::to_string(n - 1) + " other terms");
    }
    std::vector<int> rest(seq.terms().begin(), seq.terms().end() - 1);
    std::vector<int> positions(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        --rest[static_cast<std::size_t>(i)];
        positions[static_cast<std::size_t>(i)] = i;
    }
    std::erase(rest, 0);
    return LayOffResult{DegreeSequence(std::move(rest)), std::move(positions)};
}

bool is_graphic_erdos_gallai(const DegreeSequence& seq) {
    std::vector<int> d = seq.terms();  // already non-increasing
    return erdos_gallai_feasible(std::move(d));
}

bool erdos_gallai_feasible(std::vector<int> demands) {
    std::sort(demands.begin(), demands.end(), std::greater<int>());
    while (!demands.empty() && demands.back() == 0) demands.pop_back();
    const int n = static_cast<int>(demands.size());
    if (n == 0) return true;
    if (std::any_of(demands.begin(), demands.end(), [](int v) { return v < 0; })) return false;

    long long total = std::accumulate(demands.begin(), demands.end(), 0LL);
    if (total % 2 != 0) return false;

    std::vector<long long> suffix(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + demands[static_cast<std::size_t>(i)];
    }
    long long prefix = 0;
    int cut = n;  // first index with d[cut] < k; moves left as k grows
    for (int k = 1; k <= n; ++k) {
        prefix += demands[static_cast<std::size_t>(k - 1)];
        while (cut > 0 && demands[static_cast<std::size_t>(cut) - 1] < k) --cut;
        const int start = std::max(cut, k);
        const long long rhs = static_cast<long long>(k) * (k - 1) +
                              static_cast<long long>(k) * (start - k) +
                              suffix[static_cast<std::size_t>(start)];
        if (prefix > rhs) return false;
    }
    return true;
}

bool is_graphic_lay_off(const DegreeSequence& seq) {
    DegreeSequence cur = seq;
    while (!cur.empty()) {
        if (cur.min_term() > cur.size() - 1) return false;
        cur = lay_off(cur).residual;
    }
    return true;
}

std::optional<bool> is_graphic_small_degree(const DegreeSequence& seq) {
    if (seq.empty()) return std::nullopt;
    if (seq.max_term() > 2) return std::nullopt;
    if (seq.min_term() != 1) return std::nullopt;
    if (seq.sum() % 2 != 0) return std::nullopt;
    return true;
}

SimpleGraph havel_hakimi_realize(const DegreeSequence& seq) {
    const int n = seq.size();
    SimpleGraph g(n);
    std::vector<int> demand = seq.terms();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (;;) {
        int v = -1;
        for (int i = 0; i < n; ++i) {
            if (demand[static_cast<std::size_t>(i)] > 0 &&
                (v < 0 || demand[static_cast<std::size_t>(i)] < demand[static_cast<std::size_t>(v)])) {
                v = i;
            }
        }
        if (v < 0) break;
        const int need = demand[static_cast<std::size_t>(v)];
        demand[static_cast<std::size_t>(v)] = 0;

        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return demand[static_cast<std::size_t>(a)] > demand[static_cast<std::size_t>(b)];
        });
        int wired = 0;
        for (int u : order) {
            if (wired == need) break;
            if (u == v || demand[static_cast<std::size_t>(u)] == 0) continue;
            g.add_edge(v, u);
            --demand[static_cast<std::size_t>(u)];
            ++wired;
        }
        if (wired != need) {
            throw std::invalid_argument("havel-hakimi starved: " + format_sequence(seq) +
                                        " is not graphic");
        }
    }
    return g;
}

}  // namespace degseq
