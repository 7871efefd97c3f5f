#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arclab/gf.hpp"
#include "oracles.hpp"

#include <cstdlib>
#include <stdexcept>

using namespace arclab;

TEST_CASE("canonical moduli are the smallest irreducibles") {
    CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::make(7, 1).modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(Field::make(2, 4).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(Field::make(3, 2).modulus_string() == "x^2+1");
    CHECK(Field::make(2, 2).modulus_string() == "x^2+x+1");
}

TEST_CASE("prime field arithmetic is arithmetic mod p") {
    const Field f = Field::make(5, 1);
    CHECK(f.add(Fe{3}, Fe{4}) == Fe{2});
    CHECK(f.mul(Fe{3}, Fe{4}) == Fe{2});
    CHECK(f.neg(Fe{2}) == Fe{3});
    CHECK(f.sub(Fe{1}, Fe{3}) == Fe{3});
    CHECK(f.inv(Fe{2}) == Fe{3});
    CHECK(f.div(Fe{1}, Fe{4}) == Fe{4});
}

TEST_CASE("fixed products in small extension fields") {
    const Field f4 = Field::make(2, 2);
    CHECK(f4.mul(Fe{2}, Fe{2}) == Fe{3});
    CHECK(f4.mul(Fe{2}, Fe{3}) == Fe{1});
    CHECK(f4.mul(Fe{3}, Fe{3}) == Fe{2});

    const Field f8 = Field::make(2, 3);
    CHECK(f8.mul(Fe{2}, Fe{2}) == Fe{4});
    CHECK(f8.mul(Fe{4}, Fe{2}) == Fe{3});
    CHECK(f8.mul(Fe{4}, Fe{4}) == Fe{6});
    CHECK(f8.mul(Fe{3}, Fe{3}) == Fe{5});
    CHECK(f8.mul(Fe{6}, Fe{5}) == Fe{3});

    const Field f9 = Field::make(3, 2);
    CHECK(f9.mul(Fe{2}, Fe{2}) == Fe{1});
    CHECK(f9.mul(Fe{3}, Fe{3}) == Fe{2});
    CHECK(f9.mul(Fe{4}, Fe{4}) == Fe{6});
    CHECK(f9.mul(Fe{5}, Fe{5}) == Fe{3});
    CHECK(f9.mul(Fe{5}, Fe{4}) == Fe{1});
}

TEST_CASE("multiplication matches schoolbook polynomial arithmetic") {
    for (const auto& [p, h] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
        const Field f = Field::make(p, h);
        const oracles::PolyField ref(f);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b) {
                CHECK(f.mul(Fe{a}, Fe{b}).code == ref.mul(a, b));
                CHECK(f.add(Fe{a}, Fe{b}).code == ref.add(a, b));
            }
    }
}

TEST_CASE("field axioms at q = 8, 9, 16") {
    for (const auto& [p, h] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}}) {
        const Field f = Field::make(p, h);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            const Fe fa{a};
            CHECK(f.add(fa, f.neg(fa)) == f.zero());
            CHECK(f.mul(fa, f.one()) == fa);
            if (a != 0) {
                CHECK(f.mul(fa, f.inv(fa)) == f.one());
                CHECK(f.pow(fa, static_cast<std::int64_t>(f.q()) - 1) == f.one());
            }
            for (std::uint32_t b = 0; b < f.q(); ++b)
                for (std::uint32_t c = 0; c < f.q(); ++c) {
                    const Fe fb{b}, fc{c};
                    CHECK(f.mul(fa, f.add(fb, fc)) ==
                          f.add(f.mul(fa, fb), f.mul(fa, fc)));
                }
        }
    }
}

TEST_CASE("frobenius is additive") {
    const Field f = Field::make(3, 2);
    for (std::uint32_t a = 0; a < f.q(); ++a)
        for (std::uint32_t b = 0; b < f.q(); ++b)
            CHECK(f.pow(f.add(Fe{a}, Fe{b}), 3) == f.add(f.pow(Fe{a}, 3), f.pow(Fe{b}, 3)));
}

TEST_CASE("coefficient round trip") {
    const Field f = Field::make(3, 2);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
        const auto c = f.coeffs(Fe{a});
        REQUIRE(c.size() == 2);
        CHECK(f.from_coeffs(c) == Fe{a});
    }
    CHECK(f.coeffs(Fe{5}) == std::vector<std::uint32_t>{2, 1});
}

TEST_CASE("powers, negative exponents, signs") {
    const Field f = Field::make(7, 1);
    CHECK(f.pow(Fe{3}, 0) == f.one());
    CHECK(f.pow(Fe{3}, 2) == Fe{2});
    CHECK(f.pow(Fe{3}, -1) == f.inv(Fe{3}));
    CHECK(f.pow(Fe{3}, -2) == f.inv(Fe{2}));
    CHECK(f.minus_one_pow(0) == f.one());
    CHECK(f.minus_one_pow(1) == Fe{6});
    CHECK(f.minus_one_pow(12345678901234ull) == f.one());

    const Field f4 = Field::make(2, 2);
    CHECK(f4.minus_one_pow(1) == f4.one());
}

TEST_CASE("invalid construction and domain errors") {
    CHECK_THROWS_AS(Field::make(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    const Field f = Field::make(3, 2);
    CHECK_THROWS_AS(f.element(9), std::invalid_argument);
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    CHECK_THROWS_AS(f.div(f.one(), f.zero()), std::domain_error);
    CHECK_THROWS_AS(f.pow(f.zero(), -1), std::domain_error);
}

TEST_CASE("max order guard honors the environment override") {
    REQUIRE(setenv("ARCLAB_MAX_Q", "100", 1) == 0);
    CHECK(Field::max_order() == 100);
    CHECK_THROWS_AS(Field::make(2, 7), std::invalid_argument);
    CHECK(Field::make(2, 6).q() == 64);
    REQUIRE(setenv("ARCLAB_MAX_Q", "junk", 1) == 0);
    CHECK_THROWS_AS(Field::max_order(), std::invalid_argument);
    REQUIRE(unsetenv("ARCLAB_MAX_Q") == 0);
    CHECK(Field::max_order() == (1u << 20));
}

TEST_CASE("caller-supplied modulus") {
    const Field canon = Field::make(2, 2);
    const Field same = Field::with_modulus(2, 2, {1, 1, 1});
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b)
            CHECK(same.mul(Fe{a}, Fe{b}) == canon.mul(Fe{a}, Fe{b}));
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(Field::with_modulus(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::with_modulus(2, 2, {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Field::with_modulus(2, 2, {1, 1}), std::invalid_argument);

    // A non-canonical but valid modulus gives a genuine GF(9).
    const Field other = Field::with_modulus(3, 2, {2, 1, 1}); // x^2+x+2
    for (std::uint32_t a = 1; a < 9; ++a)
        CHECK(other.mul(Fe{a}, other.inv(Fe{a})) == other.one());
}

TEST_CASE("primality and irreducibility helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    const std::uint32_t x2x1[] = {1, 1, 1};
    const std::uint32_t x21[] = {1, 0, 1};
    CHECK(poly_is_irreducible(2, x2x1));
    CHECK_FALSE(poly_is_irreducible(2, x21));
    CHECK(poly_is_irreducible(3, x21));
}

TEST_CASE("large field construction stays exact") {
    const Field f = Field::make(2, 17); // above the table limit, polynomial path
    const Fe a = f.element(54321), b = f.element(98765);
    CHECK(f.mul(a, f.inv(a)) == f.one());
    CHECK(f.mul(a, b) == f.mul(b, a));
    const oracles::PolyField ref(f);
    CHECK(f.mul(a, b).code == ref.mul(a.code, b.code));
}
