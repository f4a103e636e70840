#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qpi/number_theory.hpp"
#include "qpi/qseries.hpp"

using qpi::chi;
using qpi::Factorization;

TEST_CASE("integer square root")
{
    CHECK(qpi::isqrt_floor(0) == 0);
    CHECK(qpi::isqrt_floor(1) == 1);
    CHECK(qpi::isqrt_floor(3) == 1);
    CHECK(qpi::isqrt_floor(4) == 2);
    CHECK(qpi::isqrt_floor(99) == 9);
    CHECK(qpi::isqrt_floor(100) == 10);
    CHECK_THROWS_AS(qpi::isqrt_floor(-1), std::domain_error);
    for (long long n = 0; n <= 5000; ++n) {
        const long long r = qpi::isqrt_floor(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("square and triangular predicates")
{
    bool square[3001] = {};
    bool triangular[3001] = {};
    for (long long k = 0; k * k <= 3000; ++k)
        square[k * k] = true;
    for (long long k = 0; k * (k + 1) / 2 <= 3000; ++k)
        triangular[k * (k + 1) / 2] = true;
    for (long long n = 0; n <= 3000; ++n) {
        CHECK(qpi::is_square(n) == square[n]);
        CHECK(qpi::is_triangular(n) == triangular[n]);
    }
    CHECK_FALSE(qpi::is_square(-4));
    CHECK_FALSE(qpi::is_triangular(-3));
}

TEST_CASE("chi indicator")
{
    CHECK(chi(true) == 1);
    CHECK(chi(false) == 0);
    CHECK(4 - 2 * chi(qpi::is_square(4)) == 2);
}

TEST_CASE("trial-division factorization")
{
    const Factorization f = qpi::factorize(360);  // 2^3 * 3^2 * 5
    CHECK(f.two_exp == 3);
    CHECK(f.odd_primes ==
          std::vector<std::pair<long long, int>>{{3, 2}, {5, 1}});
    CHECK(qpi::factorize(1).two_exp == 0);
    CHECK(qpi::factorize(1).odd_primes.empty());
    CHECK(qpi::factorize(97).odd_primes ==
          std::vector<std::pair<long long, int>>{{97, 1}});
    CHECK_THROWS_AS(qpi::factorize(0), std::domain_error);
}

TEST_CASE("two-squares counts")
{
    CHECK(qpi::r2(1) == 4);
    CHECK(qpi::r2(2) == 4);
    CHECK(qpi::r2(3) == 0);
    CHECK(qpi::r2(4) == 4);
    CHECK(qpi::r2(5) == 8);
    CHECK(qpi::r2(25) == 12);
    CHECK(qpi::r2(65) == 16);  // 5 * 13, both 1 mod 4
    CHECK(qpi::r2(9) == 4);    // the 3-exponent is even
    CHECK_THROWS_AS(qpi::r2(0), std::domain_error);
    CHECK_THROWS_AS(qpi::r2_lattice(0), std::domain_error);

    for (long long n = 1; n <= 2000; ++n)
        CHECK(qpi::r2(n) == qpi::r2_lattice(n));
}

TEST_CASE("theta square generates the two-squares counts")
{
    const int order = 50;
    const qpi::QSeries phi = qpi::theta_phi(+1, order);
    const qpi::QSeries sq = phi * phi;
    CHECK(sq[0].coeff(0) == 1);
    for (int n = 1; n <= order; ++n)
        CHECK(sq[n].coeff(0) == qpi::r2(n));
}
