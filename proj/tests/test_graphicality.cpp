#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/sequence.hpp"

using namespace degseq;

namespace {

// Every non-increasing tuple of the given length with terms in [1, max_term].
void each_tuple(int length, int max_term, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        if (static_cast<int>(cur.size()) == length) {
            fn(cur);
            return;
        }
        for (int d = cap; d >= 1; --d) {
            cur.push_back(d);
            rec(d);
            cur.pop_back();
        }
    };
    rec(max_term);
}

bool havel_hakimi_succeeds(const DegreeSequence& s) {
    try {
        havel_hakimi_realize(s);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

TEST_CASE("lay-off removes the smallest term against the largest ones") {
    const LayOffResult r = lay_off(parse_sequence("3,3,2,2,2"));
    CHECK(r.residual == parse_sequence("2^4"));
    CHECK(r.reduced_positions == std::vector<int>{0, 1});

    const LayOffResult r2 = lay_off(parse_sequence("2,1,1"));
    CHECK(r2.residual == parse_sequence("1,1"));
    CHECK(r2.reduced_positions == std::vector<int>{0});

    const LayOffResult r3 = lay_off(parse_sequence("4^5"));
    CHECK(r3.residual == parse_sequence("3^4"));
    CHECK(r3.reduced_positions == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("lay-off drops terms that hit zero") {
    CHECK(lay_off(parse_sequence("1,1")).residual.empty());
    CHECK(lay_off(parse_sequence("2,2,1")).residual == parse_sequence("2,1"));
}

TEST_CASE("lay-off rejects degenerate input") {
    CHECK_THROWS_WITH_AS(lay_off(parse_sequence("2")), "lay-off needs at least two terms",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(lay_off(DegreeSequence()), "lay-off needs at least two terms",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(lay_off(parse_sequence("3,3")),
                         "cannot lay off smallest term 3: only 1 other terms",
                         std::invalid_argument);
}

TEST_CASE("erdos-gallai verdicts on fixed sequences") {
    CHECK(is_graphic_erdos_gallai(DegreeSequence()));
    CHECK(is_graphic_erdos_gallai(parse_sequence("3,3,2,2,2")));
    CHECK(is_graphic_erdos_gallai(parse_sequence("4,4,2,2,2,2")));  // K_{2,4}
    CHECK(is_graphic_erdos_gallai(parse_sequence("4,4,2,2,2")));
    CHECK_FALSE(is_graphic_erdos_gallai(parse_sequence("3,3,3,1")));
    CHECK_FALSE(is_graphic_erdos_gallai(parse_sequence("4,1,1,1")));
    CHECK_FALSE(is_graphic_erdos_gallai(parse_sequence("2,1")));
}

TEST_CASE("erdos-gallai catches failures past the first inequality") {
    // Both pass k=1 and k=2 and fail only at k=3; regressions for the
    // inequality's min() split point, which moves left as k grows.
    CHECK_FALSE(is_graphic_erdos_gallai(parse_sequence("4^4,2")));
    CHECK_FALSE(is_graphic_erdos_gallai(parse_sequence("4^3,2,2")));
}

TEST_CASE("feasibility accepts raw demand vectors") {
    CHECK(erdos_gallai_feasible({}));
    CHECK(erdos_gallai_feasible({0, 0, 0}));
    CHECK(erdos_gallai_feasible({1, 2, 1}));  // unsorted
    CHECK(erdos_gallai_feasible({2, 0, 2, 2}));
    CHECK_FALSE(erdos_gallai_feasible({1, -1}));
    CHECK_FALSE(erdos_gallai_feasible({3, 3, 3, 1}));
    CHECK_FALSE(erdos_gallai_feasible({1}));
}

TEST_CASE("lay-off decider verdicts on fixed sequences") {
    CHECK(is_graphic_lay_off(DegreeSequence()));
    CHECK(is_graphic_lay_off(parse_sequence("2,2,2")));
    CHECK(is_graphic_lay_off(parse_sequence("6,3,2^4,1")));
    CHECK_FALSE(is_graphic_lay_off(parse_sequence("3,1,1")));
    CHECK_FALSE(is_graphic_lay_off(parse_sequence("4^4,2")));
}

TEST_CASE("small-degree shortcut answers only within its scope") {
    CHECK(is_graphic_small_degree(parse_sequence("2,2,1,1")) == std::optional<bool>(true));
    CHECK(is_graphic_small_degree(parse_sequence("1,1")) == std::optional<bool>(true));
    CHECK_FALSE(is_graphic_small_degree(parse_sequence("1,1,1")).has_value());  // odd sum
    CHECK_FALSE(is_graphic_small_degree(parse_sequence("3,2,1")).has_value());  // max > 2
    CHECK_FALSE(is_graphic_small_degree(parse_sequence("2,2,2")).has_value());  // min != 1
    CHECK_FALSE(is_graphic_small_degree(DegreeSequence()).has_value());
}

TEST_CASE("havel-hakimi builds graphs with the requested degrees") {
    const SimpleGraph triangle = havel_hakimi_realize(parse_sequence("2,2,2"));
    CHECK(triangle.edge_count() == 3);
    CHECK(triangle.has_edge(0, 1));
    CHECK(triangle.has_edge(0, 2));
    CHECK(triangle.has_edge(1, 2));

    const SimpleGraph edge = havel_hakimi_realize(parse_sequence("1,1"));
    CHECK(edge.edge_count() == 1);
    CHECK(edge.has_edge(0, 1));

    const DegreeSequence s = parse_sequence("3,3,2,2,2");
    const SimpleGraph g = havel_hakimi_realize(s);
    CHECK(g.edge_count() == 6);
    CHECK(degree_sequence_of(g) == s);
}

TEST_CASE("havel-hakimi is deterministic") {
    const DegreeSequence s = parse_sequence("4,3,3,2,2,2");
    CHECK(to_text(havel_hakimi_realize(s)) == to_text(havel_hakimi_realize(s)));
}

TEST_CASE("havel-hakimi starves on non-graphic input") {
    CHECK_THROWS_WITH_AS(havel_hakimi_realize(parse_sequence("3,1,1")),
                         "havel-hakimi starved: 3,1^2 is not graphic", std::invalid_argument);
    CHECK_THROWS_AS(havel_hakimi_realize(parse_sequence("4^4,2")), std::invalid_argument);
}

TEST_CASE("the three deciders agree on every short sequence") {
    for (int len = 1; len <= 7; ++len) {
        each_tuple(len, 6, [&](const std::vector<int>& t) {
            const DegreeSequence s{std::vector<int>(t)};
            const bool eg = is_graphic_erdos_gallai(s);
            CHECK(eg == is_graphic_lay_off(s));
            CHECK(eg == havel_hakimi_succeeds(s));
            if (const auto fast = is_graphic_small_degree(s)) CHECK(eg == *fast);
            if (eg) {
                CHECK(s.sum() % 2 == 0);
                CHECK(degree_sequence_of(havel_hakimi_realize(s)) == s);
            }
        });
    }
}

TEST_CASE("laying off preserves graphicality both ways") {
    for (int len = 2; len <= 7; ++len) {
        each_tuple(len, 6, [&](const std::vector<int>& t) {
            const DegreeSequence s{std::vector<int>(t)};
            if (s.min_term() > s.size() - 1) return;
            CHECK(is_graphic_erdos_gallai(s) == is_graphic_erdos_gallai(lay_off(s).residual));
        });
    }
}
