#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycemb/poly.hpp"
#include "test_util.hpp"

using namespace cycemb;
using namespace cycemb::testutil;

namespace {
Poly P(const Field& f, std::vector<uint32_t> c) { return Poly::make(f, std::move(c)); }
} // namespace

TEST_CASE("normalization") {
    Field f2 = Field::make(2, 1);
    CHECK(P(f2, {1, 0, 1, 0, 0}) == P(f2, {1, 0, 1}));
    CHECK(P(f2, {}).is_zero());
    CHECK(P(f2, {0}).is_zero());
    CHECK(P(f2, {0}).degree() == -1);
    CHECK_THROWS_AS(P(f2, {2}), Error);
}

TEST_CASE("arithmetic basics") {
    Field f2 = Field::make(2, 1);
    // freshman's dream: (1+X)^2 = 1+X^2
    CHECK(poly_mul(f2, P(f2, {1, 1}), P(f2, {1, 1})) == P(f2, {1, 0, 1}));
    // worked divrem: X^5+X^4+X^2+1 = (X+1)(X^4+X+1)
    auto [q, r] = poly_divrem(f2, P(f2, {1, 0, 1, 0, 1, 1}), P(f2, {1, 1}));
    CHECK(q == P(f2, {1, 1, 0, 0, 1}));
    CHECK(r.is_zero());
    // identity divisor
    auto [q2, r2] = poly_divrem(f2, P(f2, {1, 1, 1}), Poly::one());
    CHECK(q2 == P(f2, {1, 1, 1}));
    CHECK(r2.is_zero());
    CHECK_THROWS_AS(poly_divrem(f2, Poly::one(), Poly{}), Error);
}

TEST_CASE("divrem round trip property") {
    std::mt19937_64 rng(7);
    for (const Field& f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(f, 12, rng);
            Poly b = random_poly(f, 8, rng);
            if (b.is_zero()) continue;
            auto [q, r] = poly_divrem(f, a, b);
            CHECK(poly_add(f, poly_mul(f, q, b), r) == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("derivative") {
    Field f2 = Field::make(2, 1);
    CHECK(poly_derivative(f2, P(f2, {1, 0, 1, 0, 1, 1})) == Poly::monomial(4));
    CHECK(poly_derivative(f2, Poly::one()).is_zero());
    Field f3 = Field::make(3, 1);
    CHECK(poly_derivative(f3, Poly::monomial(3)).is_zero());
}

TEST_CASE("gcd") {
    Field f2 = Field::make(2, 1);
    Poly g = P(f2, {1, 0, 1, 0, 1, 1});
    CHECK(poly_gcd(f2, g, Poly::monomial(4)) == Poly::one());
    CHECK(poly_gcd(f2, g, Poly{}) == g);
    CHECK(poly_gcd(f2, P(f2, {1, 0, 1}), P(f2, {1, 1})) == P(f2, {1, 1}));
    CHECK_THROWS_AS(poly_gcd(f2, Poly{}, Poly{}), Error);
}

TEST_CASE("powmod") {
    Field f2 = Field::make(2, 1);
    Poly g = P(f2, {1, 0, 1, 0, 1, 1});
    CHECK(poly_powmod(f2, Poly::monomial(1), 15, g) == Poly::one());
    CHECK(poly_powmod(f2, Poly::monomial(1), 0, g) == Poly::one());
    CHECK(poly_powmod(f2, Poly::monomial(1), 1, P(f2, {1, 1})) == Poly::one());
    CHECK_THROWS_AS(poly_powmod(f2, Poly::monomial(1), 3, Poly::one()), Error);
}

TEST_CASE("factorization of the worked generator polynomial") {
    Field f2 = Field::make(2, 1);
    auto fac = poly_factor(f2, P(f2, {1, 0, 1, 0, 1, 1}));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == P(f2, {1, 1}));
    CHECK(fac.factors[0].second == 1);
    CHECK(fac.factors[1].first == P(f2, {1, 1, 0, 0, 1}));
    CHECK(fac.factors[1].second == 1);
}

TEST_CASE("factorization corner cases") {
    Field f2 = Field::make(2, 1);
    auto irr = poly_factor(f2, P(f2, {1, 1, 1}));
    REQUIRE(irr.factors.size() == 1);
    CHECK(irr.factors[0].second == 1);

    Field f3 = Field::make(3, 1);
    auto sq = poly_factor(f3, Poly::monomial(2));
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].first == Poly::monomial(1));
    CHECK(sq.factors[0].second == 2);

    CHECK_THROWS_AS(poly_factor(f2, Poly{}), Error);
}

TEST_CASE("factor product identity property") {
    std::mt19937_64 rng(11);
    for (const Field& f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
        for (int i = 0; i < 100; ++i) {
            Poly a = random_poly(f, 10, rng);
            if (a.is_zero()) continue;
            auto fac = poly_factor(f, a);
            Poly prod = Poly::make(f, {fac.unit});
            for (auto& [irr, mult] : fac.factors) {
                CHECK(irr.is_monic());
                for (uint32_t t = 0; t < mult; ++t) prod = poly_mul(f, prod, irr);
            }
            CHECK(prod == a);
        }
    }
}

TEST_CASE("order_of_x worked values") {
    Field f2 = Field::make(2, 1);
    CHECK(order_of_x(f2, P(f2, {1, 1})) == 1);
    CHECK(order_of_x(f2, P(f2, {1, 1, 0, 0, 1})) == 15);
    CHECK(order_of_x(f2, P(f2, {1, 0, 1, 0, 1, 1})) == 15);
}

TEST_CASE("order_of_x preconditions") {
    Field f2 = Field::make(2, 1);
    CHECK_THROWS_AS(order_of_x(f2, Poly::monomial(1)), Error);            // g(0) = 0
    CHECK_THROWS_AS(order_of_x(f2, Poly::one()), Error);                  // constant
    CHECK_THROWS_AS(order_of_x(f2, P(f2, {1, 0, 1})), Error);             // (X+1)^2
}

TEST_CASE("order_of_x equals brute force on random squarefree inputs") {
    std::mt19937_64 rng(13);
    for (const Field& f : {Field::make(2, 1), Field::make(3, 1)}) {
        int done = 0;
        while (done < 120) {
            Poly g = random_squarefree(f, 12, rng);
            uint64_t e = order_of_x(f, g);
            if (e > (uint64_t(1) << 16)) continue;
            CHECK(e == brute_force_order(f, g, e));
            // e is minimal: no proper divisor of e works
            for (uint64_t d = 1; d < e; ++d)
                if (e % d == 0)
                    CHECK(poly_powmod(f, Poly::monomial(1), d, g) != Poly::one());
            CHECK(e % f.p() != 0);
            ++done;
        }
    }
}
