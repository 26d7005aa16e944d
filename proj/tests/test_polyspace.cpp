#include <doctest.h>

#include <random>

#include "subsyz/polyspace.hpp"

using namespace subsyz;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(11, 6) == 462);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(7, 0) == 1);
}

TEST_CASE("monomial basis sizes and leading order") {
    MonomialBasis lin(2, 1);
    REQUIRE(lin.size() == 3);
    CHECK(lin.exponents(0) == std::vector<int>{1, 0, 0});  // x0 first
    CHECK(lin.exponents(1) == std::vector<int>{0, 1, 0});
    CHECK(lin.exponents(2) == std::vector<int>{0, 0, 1});

    CHECK(MonomialBasis(2, 2).size() == 6);
    CHECK(MonomialBasis(6, 5).size() == 462);
    CHECK(MonomialBasis(2, 0).size() == 1);
}

TEST_CASE("graded-lex order is descending in the leading variable") {
    MonomialBasis b(2, 2);
    CHECK(b.exponents(0) == std::vector<int>{2, 0, 0});   // x0^2
    CHECK(b.exponents(1) == std::vector<int>{1, 1, 0});   // x0 x1
    CHECK(b.exponents(2) == std::vector<int>{1, 0, 1});   // x0 x2
    CHECK(b.exponents(3) == std::vector<int>{0, 2, 0});   // x1^2
    CHECK(b.exponents(5) == std::vector<int>{0, 0, 2});   // x2^2
}

TEST_CASE("index_of inverts the enumeration") {
    for (auto [n, t] : {std::pair{2, 4}, {3, 3}, {6, 3}}) {
        MonomialBasis b(n, t);
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.exponents(i)) == i);
    }
}

TEST_CASE("multiplication by a linear form on monomials") {
    Field F(5);
    PolyVec x0 = variable_poly(2, 0);
    PolyVec x1 = variable_poly(2, 1);
    PolyVec prod = mult_by_linear(F, x0, x1);
    CHECK(prod == monomial_poly(2, {1, 1, 0}));

    PolyVec zero = zero_poly(2, 3);
    CHECK(mult_by_linear(F, zero, x0).is_zero());

    // (x0 + x1) * x0 = x0^2 + x0 x1
    PolyVec f = add(F, x0, x1);
    PolyVec g = mult_by_linear(F, f, x0);
    PolyVec expected = add(F, monomial_poly(2, {2, 0, 0}), monomial_poly(2, {1, 1, 0}));
    CHECK(g == expected);
}

namespace {

PolyVec random_poly(const Field& F, int n, int t, std::mt19937_64& rng) {
    PolyVec f = zero_poly(n, t);
    for (auto& c : f.coeffs) c = std::uint32_t(rng() % F.prime());
    return f;
}

}  // namespace

TEST_CASE("multiplication by linear forms commutes") {
    Field F(31991);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        PolyVec f = random_poly(F, 2, 3, rng);
        PolyVec L = random_poly(F, 2, 1, rng);
        PolyVec M = random_poly(F, 2, 1, rng);
        CHECK(mult_by_linear(F, mult_by_linear(F, f, L), M) ==
              mult_by_linear(F, mult_by_linear(F, f, M), L));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Field F(31991);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + int(rng() % 3);
        PolyVec f = random_poly(F, n, 1 + int(rng() % 3), rng);
        PolyVec g = random_poly(F, n, 1 + int(rng() % 3), rng);
        std::vector<std::uint32_t> pt(n + 1);
        for (auto& c : pt) c = std::uint32_t(rng() % F.prime());
        CHECK(evaluate(F, multiply(F, f, g), pt) ==
              F.mul(evaluate(F, f, pt), evaluate(F, g, pt)));
    }
}

TEST_CASE("general product agrees with repeated linear multiplication") {
    Field F(101);
    std::mt19937_64 rng(3);
    PolyVec f = random_poly(F, 2, 2, rng);
    PolyVec L = random_poly(F, 2, 1, rng);
    CHECK(multiply(F, f, L) == mult_by_linear(F, f, L));
}
