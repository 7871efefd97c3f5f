#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arclab/tangent.hpp"
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

TEST_CASE("cached forms equal the census tangents") {
    const Field f = Field::make(7, 1);
    const Arc a = nrc(f, 3);
    TangentBundle tb(a);
    for (int y = 0; y < a.size(); ++y) {
        const auto& forms = tb.forms({y});
        const TangentCensus c = secant_tangent_census(a, {y});
        REQUIRE(forms.size() == static_cast<std::size_t>(a.t()));
        std::vector<Vek> got, want;
        for (const auto& alpha : forms) got.push_back(alpha.coeffs);
        for (const auto& alpha : c.tangents) want.push_back(alpha.coeffs);
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("key is the sorted index set") {
    const Field f = Field::make(7, 1);
    const Arc a = nrc(f, 4);
    TangentBundle tb(a);
    CHECK(tb.forms({3, 0}) == tb.forms({0, 3}));
    CHECK_THROWS_AS(tb.forms({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(tb.forms({0}), std::invalid_argument);
    CHECK_THROWS_AS(tb.forms({0, 99}), std::invalid_argument);
}

TEST_CASE("values multiply the forms") {
    const Field f = Field::make(5, 1);
    const Arc a = nrc(f, 3);
    TangentBundle tb(a);
    for (int y = 0; y < a.size(); ++y) {
        const auto& forms = tb.forms({y});
        for (int x = 0; x < a.size(); ++x) {
            Fe prod = f.one();
            for (const auto& alpha : forms) prod = f.mul(prod, eval(f, alpha, a[x]));
            CHECK(tb.value_at({y}, x) == prod);
            CHECK(tb.value({y}, a[x]) == prod);
        }
        CHECK(tb.value_at({y}, y) == f.zero());
        if (a.t() == 1)
            for (int x = 0; x < a.size(); ++x)
                if (x != y) CHECK(tb.value_at({y}, x) != f.zero());
    }
}

TEST_CASE("empty tangent set gives the empty product") {
    const Field f = Field::make(2, 2);
    const Arc h = hyperoval(f);
    TangentBundle tb(h);
    CHECK(tb.forms({0}).empty());
    CHECK(tb.value_at({0}, 1) == f.one());
}

TEST_CASE("fixed ratio product on the five-point conic") {
    const Field f = Field::make(5, 1);
    const Arc a = nrc(f, 3);
    TangentBundle tb(a);
    // Single factor: T_{{0}}(a_1) / T_{{0}}(a_2) with D = {0}, A = (1), B = (2).
    const Fe got = segre_product(tb, SegreQuery{{1}, {2}, {0}});
    const LinearForm t0 = oracles::conic_tangent(f, a[0]);
    const Fe num = eval(f, t0, a[1]);
    const Fe den = eval(f, t0, a[2]);
    CHECK(got == f.div(num, den));
    CHECK(got == Fe{4});
}

TEST_CASE("ratio products compose factor by factor") {
    const Field f = Field::make(7, 1);
    const Arc a = nrc(f, 3);
    TangentBundle tb(a);
    const SegreQuery q{{1, 2}, {3, 4}, {}};
    // i = 1: base {b_1} = {4}, num arg a_1 = 1, den arg b_0 = 3.
    // i = 2: base {a_1} = {1}, num arg a_2 = 2, den arg b_1 = 4.
    const Fe f1 = f.div(tb.value_at({4}, 1), tb.value_at({4}, 3));
    const Fe f2 = f.div(tb.value_at({1}, 2), tb.value_at({1}, 4));
    CHECK(segre_product(tb, q) == f.mul(f1, f2));
}

TEST_CASE("malformed ratio queries name the offending factor") {
    const Field f = Field::make(7, 1);
    const Arc a = nrc(f, 3);
    TangentBundle tb(a);
    try {
        segre_product(tb, SegreQuery{{1, 1}, {3, 4}, {}});
        FAIL("expected SegreQueryError");
    } catch (const SegreQueryError& e) {
        CHECK(e.term == 2); // factor 2's base {a_1} = {1} contains a_2 = 1
    }
    try {
        segre_product(tb, SegreQuery{{2}, {1}, {1}});
        FAIL("expected SegreQueryError");
    } catch (const SegreQueryError& e) {
        CHECK(e.term == 1); // factor 1 evaluates its denominator on its own base
    }
    CHECK_THROWS_AS(segre_product(tb, SegreQuery{{1}, {2, 3}, {}}), SegreQueryError);
    CHECK_THROWS_AS(segre_product(tb, SegreQuery{{1}, {2}, {}}), SegreQueryError);
}

TEST_CASE("transposition count") {
    // L = (10, 20, 30, 40), B = (10, 30): 10 precedes 20 and 40, 30 precedes 40.
    CHECK(sigma({10, 30}, {10, 20, 30, 40}, 2) == 9);
    CHECK(sigma({}, {10, 20}, 5) == 0);
    CHECK(sigma({20}, {10, 20}, 0) == 0);
    CHECK(sigma({10}, {10, 20}, 0) == 1);
    CHECK_THROWS_AS(sigma({99}, {10, 20}, 1), std::invalid_argument);
}

TEST_CASE("rescaling a form leaves ratio products alone when it cancels") {
    const Field f = Field::make(7, 1);
    const Arc a = nrc(f, 3);
    TangentBundle tb(a);
    const SegreQuery q{{1, 2}, {3, 4}, {}};
    const Fe before = segre_product(tb, q);
    // Each factor evaluates one base set in both its numerator and its
    // denominator, so a rescale of that base cancels inside the factor.
    tb.rescale_form({4}, 0, Fe{3});
    CHECK(segre_product(tb, q) == before);
    tb.rescale_form({1}, 0, Fe{5});
    CHECK(segre_product(tb, q) == before);

    CHECK_THROWS_AS(tb.rescale_form({1}, 0, f.zero()), std::invalid_argument);
    CHECK_THROWS_AS(tb.rescale_form({1}, 5, Fe{2}), std::invalid_argument);
}

TEST_CASE("prebuild fills every key") {
    const Field f = Field::make(5, 1);
    const Arc a = nrc(f, 4);
    TangentBundle tb(a);
    tb.prebuild();
    // After prebuild the bundle serves lookups without growth; spot-check keys.
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            CHECK(tb.forms({i, j}).size() == static_cast<std::size_t>(a.t()));
}

TEST_CASE("bundle rejects a non-arc") {
    const Field f = Field::make(5, 1);
    const Arc bad(f, 3, {vek(f, {1, 0, 0}), vek(f, {0, 1, 0}), vek(f, {0, 0, 1}),
                         vek(f, {1, 1, 0})});
    TangentBundle tb(bad);
    CHECK_THROWS_AS(tb.forms({1}), std::domain_error);
}
