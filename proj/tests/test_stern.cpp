#include "doctest.h"
#include "oracles.hpp"

#include "sternbsd/error.hpp"
#include "sternbsd/naf.hpp"
#include "sternbsd/stern.hpp"

#include <random>
#include <vector>

using namespace sternbsd;

namespace {

std::vector<std::uint64_t> coeffs(const SternPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

} // namespace

TEST_CASE("base polynomials") {
    CHECK(stern_of(0).is_zero());
    CHECK(coeffs(stern_of(1)) == std::vector<std::uint64_t>{1});
    CHECK(coeffs(stern_of(2)) == std::vector<std::uint64_t>{0, 1});
    CHECK(coeffs(stern_of(3)) == std::vector<std::uint64_t>{1, 1});
    CHECK(coeffs(stern_of(5)) == std::vector<std::uint64_t>{1, 2});
    CHECK(coeffs(stern_of(13)) == std::vector<std::uint64_t>{1, 2, 2});
    CHECK(coeffs(stern_of(11)) == std::vector<std::uint64_t>{1, 3, 1});
    CHECK(coeffs(stern_of(19)) == std::vector<std::uint64_t>{1, 3, 3});
    CHECK(coeffs(stern_of(21)) == std::vector<std::uint64_t>{1, 4, 3});
    CHECK(stern_of(16) == SternPolynomial::monomial(4));
}

TEST_CASE("stern_of matches the naive recursion") {
    for (std::uint64_t n = 0; n <= 4096; ++n)
        REQUIRE(coeffs(stern_of(n)) == oracle::stern_poly(n));
}

TEST_CASE("stern_table matches stern_of") {
    auto table = stern_table(5000);
    REQUIRE(table.size() == 5001);
    for (std::uint64_t n = 0; n <= 5000; ++n)
        REQUIRE(table[n] == stern_of(n));
    CHECK_THROWS_AS(stern_table(100, 50), CapacityError);
}

TEST_CASE("degree and leading coefficient") {
    CHECK(degree(stern_of(13)) == 2);
    CHECK(leading_coefficient(stern_of(13)) == 2);
    CHECK(degree(stern_of(1)) == 0);
    CHECK_THROWS_AS(degree(stern_of(0)), DomainError);
    CHECK_THROWS_AS(leading_coefficient(SternPolynomial{}), DomainError);
}

TEST_CASE("canonical form strips trailing zeros") {
    SternPolynomial p({1, 2, 0, 0});
    CHECK(p.coeffs().size() == 2);
    CHECK(SternPolynomial({0, 0}).is_zero());
    CHECK(p[7] == 0);
    for (std::uint64_t n = 1; n <= 2048; ++n)
        REQUIRE(stern_of(n).coeffs().back() != 0);
}

TEST_CASE("evaluation identities") {
    const std::uint64_t n_max = 100000;
    auto c = oracle::diatomic(n_max);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        auto p = stern_of(n);
        REQUIRE(evaluate(p, 2) == n);
        REQUIRE(evaluate(p, 1) == c[n]);
    }
    CHECK(evaluate(stern_of(0), 5) == 0);
}

TEST_CASE("checked arithmetic reports overflow") {
    SternPolynomial big({~std::uint64_t{0}});
    CHECK_THROWS_AS(big + SternPolynomial::one(), OverflowError);
    CHECK_THROWS_AS(big * SternPolynomial({2}), OverflowError);
    CHECK_THROWS_AS(evaluate(SternPolynomial::monomial(70), 2), OverflowError);
    CHECK(evaluate(SternPolynomial::monomial(63), 2) == std::uint64_t{1} << 63);
}

TEST_CASE("schinzel composition examples") {
    CHECK(schinzel_compose(2, 3, 1, Sign::Plus) == stern_of(13));
    CHECK(coeffs(schinzel_compose(2, 3, 1, Sign::Plus)) == std::vector<std::uint64_t>{1, 2, 2});
    CHECK(schinzel_compose(1, 1, 0, Sign::Plus) == stern_of(2));
    CHECK(schinzel_compose(3, 2, 3, Sign::Minus) == stern_of(13));
}

TEST_CASE("schinzel composition over a grid") {
    for (unsigned a = 0; a <= 8; ++a)
        for (std::uint64_t m = 0; m <= 16; ++m)
            for (std::uint64_t r = 0; r <= (std::uint64_t{1} << a); ++r) {
                const std::uint64_t base = (std::uint64_t{1} << a) * m;
                REQUIRE(schinzel_compose(a, m, r, Sign::Plus) == stern_of(base + r));
                if (m >= 1)
                    REQUIRE(schinzel_compose(a, m, r, Sign::Minus) == stern_of(base - r));
            }
}

TEST_CASE("schinzel composition rejects bad input") {
    CHECK_THROWS_AS(schinzel_compose(2, 3, 5, Sign::Plus), DomainError);
    CHECK_THROWS_AS(schinzel_compose(70, 3, 0, Sign::Plus), OverflowError);
    CHECK_THROWS_AS(schinzel_compose(2, 0, 1, Sign::Minus), DomainError);
}

TEST_CASE("degree symmetry inside an interval") {
    for (unsigned k = 1; k <= 16; ++k) {
        const auto ik = interval(k);
        for (std::uint64_t n = ik.low; n < ik.high; ++n)
            REQUIRE(degree(stern_of((std::uint64_t{1} << k) - n)) == degree(stern_of(n)));
    }
}

TEST_CASE("degree of 2^a - r") {
    for (unsigned a = 1; a <= 14; ++a)
        for (unsigned s = 0; s < a; ++s) {
            const auto ir = interval(a - s);
            for (std::uint64_t r = ir.low; r < ir.high; ++r)
                REQUIRE(degree(stern_of((std::uint64_t{1} << a) - r)) == s + degree(stern_of(r)));
        }
}

TEST_CASE("large indices stay exact") {
    // c(n) for n = (2^62 - 1)/3 is a Fibonacci number; value at 2 must round-trip.
    const std::uint64_t n = ((std::uint64_t{1} << 62) - 1) / 3;
    CHECK(evaluate(stern_of(n), 2) == n);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t x = rng() >> 2;
        REQUIRE(evaluate(stern_of(x), 2) == x);
    }
}
