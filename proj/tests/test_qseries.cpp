#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qpi/qseries.hpp"

using qpi::Int;
using qpi::PochBase;
using qpi::QSeries;
using qpi::ZLaurent;

namespace {

QSeries lift(const oracle::Poly& p)
{
    QSeries s(static_cast<int>(p.size()) - 1);
    for (size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0)
            s.coeff(static_cast<int>(k)) = ZLaurent(p[k]);
    return s;
}

oracle::Poly random_poly(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    oracle::Poly p = oracle::zero(order);
    for (auto& c : p)
        c = coeff(rng);
    return p;
}

QSeries random_bivariate(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> z_exp(-2, 2);
    QSeries s(order);
    for (int k = 0; k <= order; ++k)
        for (int t = 0; t < 2; ++t)
            s.coeff(k) += ZLaurent::term(coeff(rng), z_exp(rng));
    return s;
}

}  // namespace

TEST_CASE("laurent coefficients in z")
{
    ZLaurent zero;
    CHECK(zero.is_zero());
    CHECK(zero.z_free());
    CHECK(zero.str() == "0");
    CHECK(zero.coeff(0) == 0);

    ZLaurent a = ZLaurent::term(2, 2) - ZLaurent::term(1, 1) + ZLaurent(7);
    CHECK(a.str() == "2*z^2 - z + 7");
    CHECK(a.coeff(2) == 2);
    CHECK(a.coeff(1) == -1);
    CHECK(a.coeff(0) == 7);
    CHECK(a.coeff(5) == 0);
    CHECK(a.min_exp() == 0);
    CHECK(a.max_exp() == 2);
    CHECK_FALSE(a.z_free());
    CHECK(a.eval(2) == 13);
    CHECK(a.eval(0) == 7);

    ZLaurent b = ZLaurent::term(1, 1) - ZLaurent(1);
    ZLaurent c = ZLaurent::term(1, 1) + ZLaurent(1);
    CHECK((b * c).str() == "z^2 - 1");
    CHECK((a + (-a)).is_zero());
    CHECK(a - a == ZLaurent());

    ZLaurent inv = ZLaurent::term(3, -2);
    CHECK(inv.min_exp() == -2);
    CHECK(inv.eval(1) == 3);
    CHECK(inv.eval(-1) == 3);
    CHECK(ZLaurent::term(3, -1).eval(-1) == -3);
    CHECK_THROWS_AS(inv.eval(2), std::domain_error);

    CHECK(ZLaurent(-1).str() == "-1");
    CHECK((ZLaurent::term(1, 1) + ZLaurent::term(-1, -1)).str() == "z - z^-1");
}

TEST_CASE("series construction and element access")
{
    QSeries one = QSeries::one(5);
    CHECK(one.order() == 5);
    CHECK(one[0].coeff(0) == 1);
    for (int k = 1; k <= 5; ++k)
        CHECK(one[k].is_zero());
    CHECK_FALSE(one.is_zero());
    CHECK(one.z_free());
    CHECK(QSeries(3).is_zero());

    QSeries m = QSeries::monomial(3, 2, 1, 5);
    CHECK(m[2] == ZLaurent::term(3, 1));
    CHECK_FALSE(m.z_free());

    CHECK_THROWS_AS(QSeries(-1), std::domain_error);
    CHECK_THROWS_AS(QSeries::monomial(1, 6, 0, 5), std::domain_error);
    CHECK_THROWS_AS(QSeries::monomial(1, -1, 0, 5), std::domain_error);
    CHECK_THROWS_AS(one[6], std::out_of_range);
    CHECK_THROWS_AS(one[-1], std::out_of_range);
}

TEST_CASE("arithmetic agrees with the dense oracle")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        const oracle::Poly a = random_poly(rng, 12);
        const oracle::Poly b = random_poly(rng, 12);
        CHECK(oracle::matches(lift(a) + lift(b), oracle::add(a, b)));
        CHECK(oracle::matches(lift(a) - lift(b), oracle::sub(a, b)));
        CHECK(oracle::matches(lift(a) * lift(b), oracle::mul(a, b)));
        CHECK(oracle::matches(-lift(a), oracle::sub(oracle::zero(12), a)));
    }
}

TEST_CASE("ring laws hold with z-dependent coefficients")
{
    std::mt19937 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const QSeries a = random_bivariate(rng, 8);
        const QSeries b = random_bivariate(rng, 8);
        const QSeries c = random_bivariate(rng, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QSeries::one(8) == a);
        CHECK(a - a == QSeries(8));
    }
}

TEST_CASE("mixing truncation orders is rejected")
{
    QSeries a = QSeries::one(5);
    QSeries b = QSeries::one(6);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(a - b, std::domain_error);
    CHECK_THROWS_AS(a * b, std::domain_error);
}

TEST_CASE("inverse by back-substitution")
{
    // 1/(1-q) is the all-ones series.
    QSeries g = QSeries::one(6) - QSeries::monomial(1, 1, 0, 6);
    QSeries inv = g.inverse();
    for (int k = 0; k <= 6; ++k)
        CHECK(inv[k].coeff(0) == 1);

    // 1/(1+zq) has coefficients (-z)^k.
    QSeries u = QSeries::one(6) + QSeries::monomial(1, 1, 1, 6);
    QSeries uinv = u.inverse();
    for (int k = 0; k <= 6; ++k)
        CHECK(uinv[k] == ZLaurent::term((k % 2 == 0) ? 1 : -1, k));

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries r = random_bivariate(rng, 8);
        r.coeff(0) = ZLaurent((trial % 2 == 0) ? 1 : -1);
        CHECK(r * r.inverse() == QSeries::one(8));
        CHECK(r.inverse().inverse() == r);
    }

    CHECK_THROWS_AS(QSeries(4).inverse(), std::domain_error);
    CHECK_THROWS_AS((Int(2) * QSeries::one(4)).inverse(), std::domain_error);
    QSeries zc = QSeries::one(4);
    zc.coeff(0) = ZLaurent::term(1, 1);
    CHECK_THROWS_AS(zc.inverse(), std::domain_error);
}

TEST_CASE("truncation is a ring homomorphism")
{
    std::mt19937 rng(99);
    const oracle::Poly a = random_poly(rng, 12);
    const oracle::Poly b = random_poly(rng, 12);
    const QSeries qa = lift(a);
    const QSeries qb = lift(b);
    CHECK((qa * qb).truncated(5) == qa.truncated(5) * qb.truncated(5));
    CHECK((qa + qb).truncated(5) == qa.truncated(5) + qb.truncated(5));
    CHECK(qa.truncated(12) == qa);
    CHECK_THROWS_AS(qa.truncated(13), std::domain_error);
    CHECK_THROWS_AS(qa.truncated(-1), std::domain_error);
}

TEST_CASE("shifting multiplies by a monomial")
{
    QSeries s = QSeries::one(6) + QSeries::monomial(1, 1, 0, 6);
    QSeries shifted = s.shifted(2);
    CHECK(shifted[2].coeff(0) == 1);
    CHECK(shifted[3].coeff(0) == 1);
    CHECK(shifted[0].is_zero());
    CHECK(s.shifted(7).is_zero());
    CHECK(s.shifted(0) == s);

    QSeries marked = QSeries::monomial(5, 1, 1, 6).shifted(1, 2);
    CHECK(marked[2] == ZLaurent::term(5, 3));
    CHECK_THROWS_AS(s.shifted(-1), std::domain_error);

    // Shift against direct monomial multiplication.
    CHECK(s.shifted(3, 1) == s * QSeries::monomial(1, 3, 1, 6));
}

TEST_CASE("pochhammer products match a dense rebuild")
{
    // (q;q)_2 and (-q;q)_3 by hand.
    QSeries p2 = qpi::poch_finite({+1, 1, 0}, 2, 8);
    CHECK(p2[0].coeff(0) == 1);
    CHECK(p2[1].coeff(0) == -1);
    CHECK(p2[2].coeff(0) == -1);
    CHECK(p2[3].coeff(0) == 1);
    for (int k = 4; k <= 8; ++k)
        CHECK(p2[k].is_zero());

    QSeries n3 = qpi::poch_finite({-1, 1, 0}, 3, 8);
    const long long expect_n3[] = {1, 1, 1, 2, 1, 1, 1, 0, 0};
    for (int k = 0; k <= 8; ++k)
        CHECK(n3[k].coeff(0) == expect_n3[k]);

    for (int sign : {+1, -1})
        for (int q_exp : {1, 2, 3})
            for (int step : {1, 2, 3})
                for (long long n : {0LL, 1LL, 2LL, 5LL}) {
                    CAPTURE(sign);
                    CAPTURE(q_exp);
                    CAPTURE(step);
                    CAPTURE(n);
                    const QSeries lib =
                        qpi::poch_finite({sign, q_exp, 0}, n, 20, step);
                    const oracle::Poly dense =
                        oracle::factor_product(20, -sign, q_exp, step, n);
                    CHECK(oracle::matches(lib, dense));
                }

    for (int sign : {+1, -1})
        for (int q_exp : {1, 2})
            for (int step : {1, 3}) {
                const QSeries lib = qpi::poch_infinite({sign, q_exp, 0}, 20, step);
                CHECK(oracle::matches(lib, oracle::factor_product(20, -sign, q_exp, step, -1)));
            }

    // Scaled bases: (3q;q)_4 and (-2q;q^2)_inf.
    CHECK(oracle::matches(qpi::poch_finite_scaled(3, 1, 1, 4, 15),
                          oracle::factor_product(15, -3, 1, 1, 4)));
    CHECK(oracle::matches(qpi::poch_infinite_scaled(-2, 1, 2, 15),
                          oracle::factor_product(15, 2, 1, 2, -1)));

    // Once every factor exceeds the order, finite and infinite agree.
    CHECK(qpi::poch_finite({+1, 1, 0}, 1000, 30) == qpi::poch_infinite({+1, 1, 0}, 30));
    CHECK(qpi::poch_finite({+1, 1, 0}, 0, 10) == QSeries::one(10));

    CHECK_THROWS_AS(qpi::poch_finite({+1, 1, 0}, -1, 10), std::domain_error);
    CHECK_THROWS_AS(qpi::poch_finite({0, 1, 0}, 2, 10), std::domain_error);
    CHECK_THROWS_AS(qpi::poch_finite({+1, -1, 0}, 2, 10), std::domain_error);
    CHECK_THROWS_AS(qpi::poch_finite({+1, 1, 0}, 2, 10, 0), std::domain_error);
    CHECK_THROWS_AS(qpi::poch_infinite({+1, 0, 0}, 10), std::domain_error);
    CHECK_THROWS_AS(qpi::poch_infinite_scaled(2, 0, 1, 10), std::domain_error);
}

TEST_CASE("pochhammer recurrence (a;q)_{n+1} = (a;q)_n (1 - a q^n)")
{
    const int order = 25;
    for (long long n = 0; n <= 6; ++n) {
        QSeries factor = QSeries::one(order);
        if (n + 1 <= order)
            factor.coeff(static_cast<int>(n + 1)) += ZLaurent(1);  // 1 + q^{n+1}
        CHECK(qpi::poch_finite({-1, 1, 0}, n + 1, order) ==
              qpi::poch_finite({-1, 1, 0}, n, order) * factor);
    }
}

TEST_CASE("infinite product matches the pentagonal expansion")
{
    CHECK(oracle::matches(qpi::poch_infinite({+1, 1, 0}, 40), oracle::pentagonal(40)));

    // Euler: 1/(q;q)_inf generates the partition counts.
    const QSeries gf = qpi::poch_infinite({+1, 1, 0}, 30).inverse();
    const auto p = oracle::partition_counts(30);
    for (int n = 0; n <= 30; ++n)
        CHECK(gf[n].coeff(0) == p[static_cast<size_t>(n)]);
}

TEST_CASE("theta series")
{
    QSeries phi = qpi::theta_phi(+1, 10);
    QSeries phi_neg = qpi::theta_phi(-1, 10);
    QSeries psi = qpi::theta_psi(+1, 10);
    QSeries psi_neg = qpi::theta_psi(-1, 10);

    const long long expect_phi[] = {1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0};
    const long long expect_phi_neg[] = {1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0};
    const long long expect_psi[] = {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1};
    const long long expect_psi_neg[] = {1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1};
    for (int k = 0; k <= 10; ++k) {
        CHECK(phi[k].coeff(0) == expect_phi[k]);
        CHECK(phi_neg[k].coeff(0) == expect_phi_neg[k]);
        CHECK(psi[k].coeff(0) == expect_psi[k]);
        CHECK(psi_neg[k].coeff(0) == expect_psi_neg[k]);
    }
    CHECK_THROWS_AS(qpi::theta_phi(0, 10), std::domain_error);
    CHECK_THROWS_AS(qpi::theta_psi(2, 10), std::domain_error);
}

TEST_CASE("theta series as infinite products")
{
    const int order = 40;
    // phi(-q) = (q;q)_inf / (-q;q)_inf
    CHECK(qpi::theta_phi(-1, order) ==
          qpi::poch_infinite({+1, 1, 0}, order) * qpi::poch_infinite({-1, 1, 0}, order).inverse());
    // psi(q) = (q^2;q^2)_inf / (q;q^2)_inf
    CHECK(qpi::theta_psi(+1, order) ==
          qpi::poch_infinite({+1, 2, 0}, order, 2) *
              qpi::poch_infinite({+1, 1, 0}, order, 2).inverse());
}

TEST_CASE("geometric kernels")
{
    QSeries pos = qpi::geometric_kernel(+1, 2, 9);
    for (int k = 0; k <= 9; ++k)
        CHECK(pos[k].coeff(0) == ((k > 0 && k % 2 == 0) ? 1 : 0));

    QSeries neg = qpi::geometric_kernel(-1, 1, 5);
    const long long expect_neg[] = {0, 1, -1, 1, -1, 1};
    for (int k = 0; k <= 5; ++k)
        CHECK(neg[k].coeff(0) == expect_neg[k]);

    // q^3/(1+q^3) * (1+q^3) telescopes back to q^3.
    QSeries factor = QSeries::one(20) + QSeries::monomial(1, 3, 0, 20);
    CHECK(qpi::geometric_kernel(-1, 3, 20) * factor == QSeries::monomial(1, 3, 0, 20));

    QSeries strided = qpi::geometric_series(5, 4, -1, 20);
    const int expect_exps[] = {5, 9, 13, 17};
    int sign = 1;
    QSeries rebuilt(20);
    for (int e : expect_exps) {
        rebuilt.coeff(e) += ZLaurent(sign);
        sign = -sign;
    }
    CHECK(strided == rebuilt);

    CHECK_THROWS_AS(qpi::geometric_kernel(0, 1, 5), std::domain_error);
    CHECK_THROWS_AS(qpi::geometric_kernel(+1, 0, 5), std::domain_error);
    CHECK_THROWS_AS(qpi::geometric_series(-1, 1, +1, 5), std::domain_error);
    CHECK_THROWS_AS(qpi::geometric_series(0, 0, +1, 5), std::domain_error);
}

TEST_CASE("substituting an integer for z")
{
    const int order = 10;
    // (-zq;q)_3 at z = 2 equals the scaled product with base -2q.
    CHECK(qpi::poch_finite({-1, 1, 1}, 3, order).eval_z(2) ==
          qpi::poch_finite_scaled(-2, 1, 1, 3, order));
    // (-q/z;q^2)_2 at z = -1 flips into (q;q^2)_2.
    CHECK(qpi::poch_finite({-1, 1, -1}, 2, order, 2).eval_z(-1) ==
          qpi::poch_finite({+1, 1, 0}, 2, order, 2));
    CHECK_THROWS_AS(qpi::poch_finite({-1, 1, -1}, 2, order, 2).eval_z(2), std::domain_error);

    QSeries zfree = qpi::poch_finite({+1, 1, 0}, 3, order);
    CHECK(zfree.eval_z(7) == zfree);
}

TEST_CASE("z-exponent bookkeeping")
{
    const int order = 10;
    QSeries inv_pow = qpi::poch_finite({-1, 1, -1}, 2, order, 2);  // (1 + q/z)(1 + q^3/z)
    CHECK(inv_pow.min_z_exp() == -2);
    CHECK_FALSE(inv_pow.z_free());
    CHECK(qpi::poch_finite({+1, 1, 0}, 2, order).min_z_exp() == 0);
}

TEST_CASE("display form")
{
    CHECK(QSeries::one(3).str() == "1");
    CHECK(QSeries(3).str() == "0");
    CHECK((QSeries::one(3) - QSeries::monomial(1, 1, 0, 3)).str() == "1 - q");
    CHECK((QSeries::monomial(1, 0, 0, 4) + QSeries::monomial(2, 2, 2, 4)).str() ==
          "1 + (2*z^2)*q^2");
    CHECK((-QSeries::one(2)).str() == "-1");
    CHECK(qpi::geometric_kernel(-1, 1, 3).str() == "q - q^2 + q^3");
}
