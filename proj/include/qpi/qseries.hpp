#pragma once

#include <string>
#include <vector>

#include "qpi/zlaurent.hpp"

namespace qpi {

/* Formal power series in q truncated at a fixed order N: all arithmetic is
 * exact on the coefficients of q^0 .. q^N and anything beyond is discarded.
 * Coefficients are Laurent polynomials in the marker variable z, so the same
 * type covers both plain q-series (z-free) and two-variable refinements. */
class QSeries {
public:
    explicit QSeries(int order);

    static QSeries one(int order);

    /* coeff * q^q_exp * z^z_exp as a truncated series. */
    static QSeries monomial(Int coeff, int q_exp, int z_exp, int order);

    int order() const { return order_; }

    const ZLaurent& operator[](int q_exp) const;
    ZLaurent& coeff(int q_exp);

    bool is_zero() const;
    bool z_free() const;
    int min_z_exp() const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries operator-() const;

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries s, const Int& scalar);
    friend QSeries operator*(const Int& scalar, QSeries s) { return std::move(s) * scalar; }

    /* Multiplicative inverse by back-substitution; the constant term must be
     * z-free and +-1 so the inverse again has integer coefficients. */
    QSeries inverse() const;

    QSeries truncated(int new_order) const;

    /* Multiply by q^q_shift * z^z_shift, silently dropping q-exponents that
     * fall beyond the truncation order. */
    QSeries shifted(long long q_shift, int z_shift = 0) const;

    /* Substitute a concrete integer for z; the result is z-free. */
    QSeries eval_z(long long z0) const;

    bool operator==(const QSeries&) const = default;

    std::string str() const;

private:
    int order_ = 0;
    std::vector<ZLaurent> c_;
};

/* Base of a q-Pochhammer symbol: a = sign * q^q_exp * z^z_exp with
 * sign in {+1,-1}. The default encodes a = -q, so (-q;q)_n is
 * poch_finite({}, n, order). */
struct PochBase {
    int sign = -1;
    int q_exp = 1;
    int z_exp = 0;
};

/* (a;Q)_n = prod_{i=0}^{n-1} (1 - a Q^i) with Q = q^q_step. Factors whose
 * q-exponent exceeds the truncation order contribute 1 and are skipped. */
QSeries poch_finite(const PochBase& a, long long n, int order, int q_step = 1);

/* (a;Q)_inf, requires q_exp >= 1 so that only finitely many factors matter. */
QSeries poch_infinite(const PochBase& a, int order, int q_step = 1);

/* Same products for a base c * q^q_exp with an arbitrary integer scalar c;
 * used for substituting concrete values into two-variable identities. */
QSeries poch_finite_scaled(const Int& c, int q_exp, int q_step, long long n, int order);
QSeries poch_infinite_scaled(const Int& c, int q_exp, int q_step, int order);

/* Gauss theta series.
 *   theta_phi(+1): sum_{n in Z} q^{n^2}        = 1 + 2q + 2q^4 + 2q^9 + ...
 *   theta_phi(-1): sum_{n in Z} (-q)^{n^2}     = 1 - 2q + 2q^4 - 2q^9 + ...
 *   theta_psi(+1): sum_{n >= 0} q^{n(n+1)/2}   = 1 + q + q^3 + q^6 + ...
 *   theta_psi(-1): sum_{n >= 0} (-q)^{n(n+1)/2}                              */
QSeries theta_phi(int sign_q, int order);
QSeries theta_psi(int sign_q, int order);

/* geometric_kernel(+1, k): q^k / (1 - q^k) = q^k + q^{2k} + q^{3k} + ...
 * geometric_kernel(-1, k): q^k / (1 + q^k) = q^k - q^{2k} + q^{3k} - ...   */
QSeries geometric_kernel(int sign, int k, int order);

/* sum_{j >= 0} sign^j q^{start + j*step}; handy for ratios such as
 * q^{2n} / (1 - q^{4n}) that are not literal geometric kernels. */
QSeries geometric_series(long long start, long long step, int sign, int order);

}  // namespace qpi
