#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arclab/arc.hpp"
#include "arclab/combi.hpp"
#include "arclab/rng.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace arclab;

namespace {

Vek vek(const Field& f, std::initializer_list<std::uint32_t> codes) {
    Vek v;
    for (std::uint32_t c : codes) v.push_back(f.element(c));
    return v;
}

} // namespace

TEST_CASE("normal rational curve points and size") {
    const Field f = Field::make(5, 1);
    const Arc a = nrc(f, 3);
    REQUIRE(a.size() == 6);
    CHECK(a.k() == 3);
    CHECK(a[0] == vek(f, {1, 0, 0}));
    CHECK(a[1] == vek(f, {1, 1, 1}));
    CHECK(a[2] == vek(f, {1, 2, 4}));
    CHECK(a[3] == vek(f, {1, 3, 4}));
    CHECK(a[4] == vek(f, {1, 4, 1}));
    CHECK(a[5] == vek(f, {0, 0, 1}));
    CHECK(a.t() == 1);
    CHECK(mds_check(a).pass);

    CHECK_THROWS_AS(nrc(f, 1), std::invalid_argument);
    CHECK_THROWS_AS(nrc(f, 6), std::invalid_argument);
}

TEST_CASE("curves of every degree are arcs") {
    for (const auto& [p, h] : {std::pair{7u, 1u}, {3u, 2u}, {2u, 3u}}) {
        const Field f = Field::make(p, h);
        for (int k = 2; k <= 5; ++k) {
            const Arc a = nrc(f, k);
            CHECK(a.size() == static_cast<int>(f.q()) + 1);
            CHECK(mds_check(a).pass);
            CHECK(oracles::mds_full_scan(f, k, a.points()).pass);
        }
    }
}

TEST_CASE("hyperoval in even characteristic") {
    const Field f = Field::make(2, 2);
    const Arc h = hyperoval(f);
    REQUIRE(h.size() == 6);
    CHECK(h.t() == 0);
    CHECK(h[0] == vek(f, {1, 0, 0}));
    CHECK(h[1] == vek(f, {1, 1, 1}));
    CHECK(h[2] == vek(f, {1, 2, 3}));
    CHECK(h[3] == vek(f, {1, 3, 2}));
    CHECK(h[4] == vek(f, {0, 0, 1}));
    CHECK(h[5] == vek(f, {0, 1, 0}));
    CHECK(mds_check(h).pass);

    CHECK(mds_check(hyperoval(Field::make(2, 3))).pass);
    CHECK(mds_check(hyperoval(Field::make(2, 1))).pass);
    CHECK_THROWS_AS(hyperoval(Field::make(5, 1)), std::invalid_argument);
}

TEST_CASE("frame") {
    const Field f = Field::make(3, 1);
    const Arc fr = bush_frame(f, 3);
    REQUIRE(fr.size() == 4);
    CHECK(fr[0] == vek(f, {1, 0, 0}));
    CHECK(fr[2] == vek(f, {0, 0, 1}));
    CHECK(fr[3] == vek(f, {1, 1, 1}));
    CHECK(mds_check(fr).pass);
    CHECK(fr.t() == 1);
}

TEST_CASE("construction validates shape and size") {
    const Field f = Field::make(3, 1);
    CHECK_THROWS_AS(Arc(f, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Arc(f, 2, {vek(f, {1, 0, 0})}), std::invalid_argument);
    std::vector<Vek> bad = {{Fe{1}, Fe{5}}};
    CHECK_THROWS_AS(Arc(f, 2, bad), std::invalid_argument);
    // Pigeonhole: no 5 points of F_3^2 can pairwise differ in direction... q+k-1 = 4.
    std::vector<Vek> many(5, vek(f, {1, 0}));
    CHECK_THROWS_AS(Arc(f, 2, many), std::invalid_argument);
    // k = 1 is exempt from the bound (degenerate duals).
    const Arc degenerate(f, 1, {vek(f, {1}), vek(f, {2}), vek(f, {1}), vek(f, {1}), vek(f, {2})});
    CHECK(degenerate.t() == -2);
}

TEST_CASE("dependence witness is the lexicographically first bad subset") {
    const Field f = Field::make(3, 1);
    const std::vector<Vek> pts = {vek(f, {1, 0}), vek(f, {0, 1}), vek(f, {1, 1}),
                                  vek(f, {2, 0})};
    const MdsResult r = mds_check(f, 2, pts);
    CHECK_FALSE(r.pass);
    CHECK(r.witness == std::vector<int>{0, 3});

    const auto o = oracles::mds_full_scan(f, 2, pts);
    CHECK_FALSE(o.pass);
    CHECK(o.witness == r.witness);
}

TEST_CASE("incremental verdict matches the full scan on random sets") {
    Rng rng(23);
    const Field f = Field::make(5, 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Vek> pts(4, Vek(3));
        for (auto& pt : pts)
            for (auto& c : pt) c = Fe{static_cast<std::uint32_t>(rng.below(5))};
        bool shaped = true;
        for (const auto& pt : pts)
            if (std::all_of(pt.begin(), pt.end(), [](Fe c) { return c.code == 0; }))
                shaped = false;
        if (!shaped) continue;
        const MdsResult fast = mds_check(f, 3, pts);
        const auto slow = oracles::mds_full_scan(f, 3, pts);
        CHECK(fast.pass == slow.pass);
        if (!fast.pass) CHECK(fast.witness == slow.witness);
    }
}

TEST_CASE("dual arc annihilates the original generator") {
    for (const auto& [p, h, k] : {std::tuple{5u, 1u, 3}, {7u, 1u, 4}, {2u, 2u, 3}}) {
        const Field f = Field::make(p, h);
        const Arc a = nrc(f, k);
        const Arc d = dual_arc(a);
        const int n = a.size();
        REQUIRE(d.size() == n);
        REQUIRE(d.k() == n - k);
        // G H^T = 0 entry by entry: the i-th dual point is H's i-th column.
        for (int row = 0; row < k; ++row)
            for (int drow = 0; drow < d.k(); ++drow) {
                Fe s = f.zero();
                for (int i = 0; i < n; ++i)
                    s = f.add(s, f.mul(a[i][static_cast<std::size_t>(row)],
                                       d[i][static_cast<std::size_t>(drow)]));
                CHECK(s == f.zero());
            }
        CHECK(mds_check(d).pass);
    }
}

TEST_CASE("dual of the big hyperoval") {
    const Field f = Field::make(2, 3);
    const Arc d = dual_arc(hyperoval(f));
    CHECK(d.size() == 10);
    CHECK(d.k() == 7);
    CHECK(mds_check(d).pass);
}

TEST_CASE("dual requires more points than dimensions") {
    const Field f = Field::make(5, 1);
    const Arc tight(f, 3, {vek(f, {1, 0, 0}), vek(f, {0, 1, 0}), vek(f, {0, 0, 1})});
    CHECK_THROWS_AS(dual_arc(tight), std::invalid_argument);
}

TEST_CASE("census splits the pencil into tangents and unisecants") {
    const Field f = Field::make(5, 1);
    const Arc a = nrc(f, 3);
    for (int y = 0; y < a.size(); ++y) {
        const TangentCensus c = secant_tangent_census(a, {y});
        CHECK(c.tangent_count == a.t());
        CHECK(c.tangents.size() == static_cast<std::size_t>(a.t()));
        CHECK(c.unisecants.size() == f.q() + 1 - c.tangents.size());
        for (const auto& alpha : c.tangents) {
            CHECK(eval(f, alpha, a[y]) == f.zero());
            for (int i = 0; i < a.size(); ++i)
                if (i != y) CHECK(eval(f, alpha, a[i]) != f.zero());
        }
        for (const auto& [form, point] : c.unisecants) {
            CHECK(point != y);
            CHECK(eval(f, form, a[y]) == f.zero());
            CHECK(eval(f, form, a[point]) == f.zero());
        }
    }
}

TEST_CASE("conic tangents match the gradient line") {
    const Field f = Field::make(7, 1);
    const Arc a = nrc(f, 3);
    for (int y = 0; y < a.size(); ++y) {
        const TangentCensus c = secant_tangent_census(a, {y});
        REQUIRE(c.tangents.size() == 1);
        CHECK(c.tangents[0].coeffs == oracles::conic_tangent(f, a[y]).coeffs);
    }
}

TEST_CASE("census in higher dimension") {
    const Field f = Field::make(7, 1);
    const Arc a = nrc(f, 4);
    const TangentCensus c = secant_tangent_census(a, {0, 3});
    CHECK(c.tangent_count == a.t());
    CHECK(c.tangents.size() + c.unisecants.size() == f.q() + 1);
}

TEST_CASE("census rejects bad subsets and non-arcs") {
    const Field f = Field::make(5, 1);
    const Arc a = nrc(f, 3);
    CHECK_THROWS_AS(secant_tangent_census(a, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(secant_tangent_census(a, {9}), std::invalid_argument);

    const Arc bad(f, 3, {vek(f, {1, 0, 0}), vek(f, {0, 1, 0}), vek(f, {0, 0, 1}),
                         vek(f, {1, 1, 0})});
    CHECK_THROWS_AS(secant_tangent_census(bad, {1}), std::domain_error);
}

TEST_CASE("tangent parameter across sizes") {
    const Field f = Field::make(2, 2);
    CHECK(nrc(f, 3).t() == 1);
    CHECK(hyperoval(f).t() == 0);
    CHECK(bush_frame(f, 3).t() == 2);
}
