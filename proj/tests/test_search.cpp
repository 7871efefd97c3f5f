#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arclab/search.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

using namespace arclab;

namespace {

Vek vek(const Field& f, std::initializer_list<std::uint32_t> codes) {
    Vek v;
    for (std::uint32_t c : codes) v.push_back(f.element(c));
    return v;
}

} // namespace

TEST_CASE("normalized point enumeration") {
    const Field f = Field::make(3, 1);
    const auto pts = normalized_points(f, 2);
    REQUIRE(pts.size() == 4); // (q^k - 1) / (q - 1)
    CHECK(pts[0] == vek(f, {0, 1}));
    CHECK(pts[1] == vek(f, {1, 0}));
    CHECK(pts[2] == vek(f, {1, 1}));
    CHECK(pts[3] == vek(f, {1, 2}));
    CHECK(std::is_sorted(pts.begin(), pts.end()));

    const Field f4 = Field::make(2, 2);
    CHECK(normalized_points(f4, 3).size() == 21);
    for (const Vek& x : normalized_points(f4, 3)) {
        std::size_t lead = 0;
        while (x[lead] == f4.zero()) ++lead;
        CHECK(x[lead] == f4.one());
    }
}

TEST_CASE("extension candidates") {
    const Field f2 = Field::make(2, 1);
    // The frame in F_2^3 is already maximal.
    CHECK(extend_candidates(bush_frame(f2, 3)).empty());

    const Field f4 = Field::make(2, 2);
    const Arc h = hyperoval(f4);
    const Arc conic(f4, 3, std::vector<Vek>(h.points().begin(), h.points().begin() + 5));
    const auto cands = extend_candidates(conic);
    REQUIRE(cands.size() == 1); // only the nucleus remains
    CHECK(cands[0] == vek(f4, {0, 1, 0}));

    // An empty arc can be extended by every normalized point.
    const Arc empty(f4, 3, {});
    CHECK(extend_candidates(empty) == normalized_points(f4, 3));
}

TEST_CASE("largest plane arcs across small fields") {
    const struct {
        std::uint32_t p, h;
        int expect;
    } table[] = {{2, 1, 4}, {3, 1, 4}, {2, 2, 6}, {5, 1, 6},
                 {7, 1, 8}, {2, 3, 10}, {3, 2, 10}};
    for (const auto& row : table) {
        const Field f = Field::make(row.p, row.h);
        const SearchResult res = max_arc_size(f, 3);
        CAPTURE(row.p);
        CAPTURE(row.h);
        CHECK(res.max_size == row.expect);
        CHECK_FALSE(res.budget_exhausted);
        REQUIRE(static_cast<int>(res.witness.size()) == res.max_size);
        CHECK(oracles::mds_full_scan(f, 3, res.witness).pass);
    }
}

TEST_CASE("largest arcs in dimension four") {
    const struct {
        std::uint32_t p;
        int expect;
    } table[] = {{3, 5}, {5, 6}, {7, 8}};
    for (const auto& row : table) {
        const Field f = Field::make(row.p, 1);
        const SearchResult res = max_arc_size(f, 4);
        CHECK(res.max_size == row.expect);
        CHECK(oracles::mds_full_scan(f, 4, res.witness).pass);
    }
}

TEST_CASE("naive mode agrees with the frame-rooted search") {
    for (const auto& [p, h] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const Field f = Field::make(p, h);
        SearchOptions naive;
        naive.naive = true;
        const SearchResult a = max_arc_size(f, 3);
        const SearchResult b = max_arc_size(f, 3, naive);
        CHECK(a.max_size == b.max_size);
        CHECK(oracles::mds_full_scan(f, 3, b.witness).pass);
    }
}

TEST_CASE("witness starts at the frame and is reported deterministically") {
    const Field f = Field::make(5, 1);
    const SearchResult res = max_arc_size(f, 3);
    REQUIRE(res.witness.size() >= 4);
    CHECK(res.witness[0] == vek(f, {1, 0, 0}));
    CHECK(res.witness[1] == vek(f, {0, 1, 0}));
    CHECK(res.witness[2] == vek(f, {0, 0, 1}));
    CHECK(res.witness[3] == vek(f, {1, 1, 1}));
    CHECK(max_arc_size(f, 3).witness == res.witness);
}

TEST_CASE("worker count changes neither nodes nor witness") {
    const Field f = Field::make(7, 1);
    const SearchResult one = max_arc_size(f, 3);
    SearchOptions wide;
    wide.jobs = 4;
    const SearchResult four = max_arc_size(f, 3, wide);
    CHECK(one.max_size == four.max_size);
    CHECK(one.nodes == four.nodes);
    CHECK(one.witness == four.witness);
    CHECK(one.nodes == 76);
}

TEST_CASE("node budget is per branch and reported") {
    const Field f = Field::make(7, 1);
    SearchOptions opts;
    opts.node_budget = 1;
    const SearchResult res = max_arc_size(f, 3);
    const SearchResult starved = max_arc_size(f, 3, opts);
    CHECK(starved.budget_exhausted);
    CHECK_FALSE(res.budget_exhausted);
    CHECK(starved.nodes < res.nodes);
    // The frame itself is still a valid answer.
    CHECK(starved.max_size >= 4);
    CHECK(oracles::mds_full_scan(f, 3, starved.witness).pass);
}

TEST_CASE("expired clock budget reports exhaustion") {
    const Field f = Field::make(7, 1);
    SearchOptions opts;
    opts.time_budget_seconds = 1e-9;
    const SearchResult res = max_arc_size(f, 3, opts);
    CHECK(res.budget_exhausted);
    CHECK(res.max_size >= 4);
}

TEST_CASE("argument validation") {
    const Field f = Field::make(3, 1);
    CHECK_THROWS_AS(max_arc_size(f, 1), std::invalid_argument);
    SearchOptions opts;
    opts.node_budget = 0;
    CHECK_THROWS_AS(max_arc_size(f, 2, opts), std::invalid_argument);
    SearchOptions neg;
    neg.time_budget_seconds = -1.0;
    CHECK_THROWS_AS(max_arc_size(f, 2, neg), std::invalid_argument);
}

TEST_CASE("dimension two fills the projective line") {
    const Field f = Field::make(5, 1);
    const SearchResult res = max_arc_size(f, 2);
    CHECK(res.max_size == 6); // q+1 points, pairwise independent
    CHECK(oracles::mds_full_scan(f, 2, res.witness).pass);
}
