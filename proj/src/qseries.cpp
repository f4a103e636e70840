#include "qpi/qseries.hpp"

#include <sstream>

namespace qpi {

QSeries::QSeries(int order) : order_(order)
{
    if (order < 0)
        throw std::domain_error("QSeries: order must be >= 0");
    c_.resize(static_cast<size_t>(order) + 1);
}

QSeries QSeries::one(int order)
{
    QSeries s(order);
    s.c_[0] = ZLaurent(1);
    return s;
}

QSeries QSeries::monomial(Int coeff, int q_exp, int z_exp, int order)
{
    if (q_exp < 0)
        throw std::domain_error("QSeries::monomial: q_exp must be >= 0");
    if (q_exp > order)
        throw std::domain_error("QSeries::monomial: q_exp exceeds truncation order");
    QSeries s(order);
    s.c_[static_cast<size_t>(q_exp)] = ZLaurent::term(std::move(coeff), z_exp);
    return s;
}

const ZLaurent& QSeries::operator[](int q_exp) const
{
    if (q_exp < 0 || q_exp > order_)
        throw std::out_of_range("QSeries: q-exponent out of range");
    return c_[static_cast<size_t>(q_exp)];
}

ZLaurent& QSeries::coeff(int q_exp)
{
    if (q_exp < 0 || q_exp > order_)
        throw std::out_of_range("QSeries: q-exponent out of range");
    return c_[static_cast<size_t>(q_exp)];
}

bool QSeries::is_zero() const
{
    for (const auto& c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

bool QSeries::z_free() const
{
    for (const auto& c : c_)
        if (!c.z_free())
            return false;
    return true;
}

int QSeries::min_z_exp() const
{
    int m = 0;
    bool seen = false;
    for (const auto& c : c_) {
        if (c.is_zero())
            continue;
        if (!seen || c.min_exp() < m)
            m = c.min_exp();
        seen = true;
    }
    return m;
}

static void require_same_order(const QSeries& a, const QSeries& b)
{
    if (a.order() != b.order())
        throw std::domain_error("QSeries: mixing different truncation orders");
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    require_same_order(*this, o);
    for (int k = 0; k <= order_; ++k)
        c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    require_same_order(*this, o);
    for (int k = 0; k <= order_; ++k)
        c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
    return *this;
}

QSeries QSeries::operator-() const
{
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[static_cast<size_t>(k)] = -c_[static_cast<size_t>(k)];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    require_same_order(a, b);
    QSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        const ZLaurent& ca = a.c_[static_cast<size_t>(i)];
        if (ca.is_zero())
            continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            const ZLaurent& cb = b.c_[static_cast<size_t>(j)];
            if (cb.is_zero())
                continue;
            r.c_[static_cast<size_t>(i + j)] += ca * cb;
        }
    }
    return r;
}

QSeries operator*(QSeries s, const Int& scalar)
{
    ZLaurent m(scalar);
    for (auto& c : s.c_)
        c = c * m;
    return s;
}

/* If a_0 = e with e^2 = 1 then b defined by b_0 = e and
 *   b_n = -e * sum_{k=1}^{n} a_k b_{n-k}
 * satisfies a*b = 1 up to the truncation order even when the higher a_k carry
 * powers of z. */
QSeries QSeries::inverse() const
{
    const ZLaurent& a0 = c_[0];
    if (!a0.z_free() || (a0.coeff(0) != 1 && a0.coeff(0) != -1))
        throw std::domain_error("QSeries::inverse: constant term must be z-free and +-1");
    const Int e = a0.coeff(0);
    QSeries b(order_);
    b.c_[0] = ZLaurent(e);
    for (int n = 1; n <= order_; ++n) {
        ZLaurent acc;
        for (int k = 1; k <= n; ++k) {
            const ZLaurent& ak = c_[static_cast<size_t>(k)];
            if (ak.is_zero())
                continue;
            acc += ak * b.c_[static_cast<size_t>(n - k)];
        }
        if (!acc.is_zero())
            b.c_[static_cast<size_t>(n)] = (e == 1) ? -acc : acc;
    }
    return b;
}

QSeries QSeries::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order_)
        throw std::domain_error("QSeries::truncated: can only shorten a series");
    QSeries r(new_order);
    for (int k = 0; k <= new_order; ++k)
        r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
    return r;
}

QSeries QSeries::shifted(long long q_shift, int z_shift) const
{
    if (q_shift < 0)
        throw std::domain_error("QSeries::shifted: q_shift must be >= 0");
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k) {
        if (c_[static_cast<size_t>(k)].is_zero())
            continue;
        const long long target = k + q_shift;
        if (target > order_)
            continue;
        ZLaurent moved;
        for (const auto& [e, v] : c_[static_cast<size_t>(k)].terms())
            moved += ZLaurent::term(v, e + z_shift);
        r.c_[static_cast<size_t>(target)] = std::move(moved);
    }
    return r;
}

QSeries QSeries::eval_z(long long z0) const
{
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k) {
        Int v = c_[static_cast<size_t>(k)].eval(z0);
        if (v != 0)
            r.c_[static_cast<size_t>(k)] = ZLaurent(std::move(v));
    }
    return r;
}

std::string QSeries::str() const
{
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        const ZLaurent& c = c_[static_cast<size_t>(k)];
        if (c.is_zero())
            continue;
        std::string piece;
        bool lead_minus = false;
        if (c.z_free()) {
            Int v = c.coeff(0);
            lead_minus = v < 0;
            Int mag = lead_minus ? Int(-v) : v;
            if (k == 0)
                piece = mag.str();
            else if (mag == 1)
                piece = "";
            else
                piece = mag.str() + "*";
        } else {
            piece = "(" + c.str() + ")";
            if (k > 0)
                piece += "*";
        }
        if (k > 0)
            piece += (k == 1) ? "q" : "q^" + std::to_string(k);
        if (first) {
            out << (lead_minus ? "-" : "") << piece;
            first = false;
        } else {
            out << (lead_minus ? " - " : " + ") << piece;
        }
    }
    if (first)
        out << "0";
    return out.str();
}

/* Shared product loop: multiplies (1 - base * q^{q_exp + i*q_step}) for
 * i = 0 .. count-1, where count < 0 means "all factors that still matter". */
static QSeries poch_product(const ZLaurent& base, int q_exp, int q_step, long long count, int order)
{
    if (q_step < 1)
        throw std::domain_error("pochhammer: q_step must be >= 1");
    if (q_exp < 0)
        throw std::domain_error("pochhammer: base q-exponent must be >= 0");
    QSeries prod = QSeries::one(order);
    for (long long i = 0; count < 0 || i < count; ++i) {
        const long long exp = q_exp + i * q_step;
        if (exp > order)
            break;  // every remaining factor is 1 modulo q^{order+1}
        QSeries factor = QSeries::one(order);
        factor.coeff(static_cast<int>(exp)) -= base;
        prod *= factor;
    }
    return prod;
}

static ZLaurent poch_base_value(const PochBase& a)
{
    if (a.sign != 1 && a.sign != -1)
        throw std::domain_error("pochhammer: base sign must be +-1");
    return ZLaurent::term(Int(a.sign), a.z_exp);
}

QSeries poch_finite(const PochBase& a, long long n, int order, int q_step)
{
    if (n < 0)
        throw std::domain_error("poch_finite: n must be >= 0");
    return poch_product(poch_base_value(a), a.q_exp, q_step, n, order);
}

QSeries poch_infinite(const PochBase& a, int order, int q_step)
{
    if (a.q_exp < 1)
        throw std::domain_error("poch_infinite: base q-exponent must be >= 1");
    return poch_product(poch_base_value(a), a.q_exp, q_step, -1, order);
}

QSeries poch_finite_scaled(const Int& c, int q_exp, int q_step, long long n, int order)
{
    if (n < 0)
        throw std::domain_error("poch_finite_scaled: n must be >= 0");
    return poch_product(ZLaurent(c), q_exp, q_step, n, order);
}

QSeries poch_infinite_scaled(const Int& c, int q_exp, int q_step, int order)
{
    if (q_exp < 1)
        throw std::domain_error("poch_infinite_scaled: base q-exponent must be >= 1");
    return poch_product(ZLaurent(c), q_exp, q_step, -1, order);
}

QSeries theta_phi(int sign_q, int order)
{
    if (sign_q != 1 && sign_q != -1)
        throw std::domain_error("theta_phi: sign must be +-1");
    QSeries s = QSeries::one(order);
    for (long long n = 1; n * n <= order; ++n) {
        // (-q)^{n^2} = (-1)^n q^{n^2} since n^2 and n share parity.
        const int sgn = (sign_q == -1 && (n & 1)) ? -1 : 1;
        s.coeff(static_cast<int>(n * n)) += ZLaurent(2 * sgn);
    }
    return s;
}

QSeries theta_psi(int sign_q, int order)
{
    if (sign_q != 1 && sign_q != -1)
        throw std::domain_error("theta_psi: sign must be +-1");
    QSeries s(order);
    for (long long n = 0; n * (n + 1) / 2 <= order; ++n) {
        const long long t = n * (n + 1) / 2;
        const int sgn = (sign_q == -1 && (t & 1)) ? -1 : 1;
        s.coeff(static_cast<int>(t)) += ZLaurent(sgn);
    }
    return s;
}

QSeries geometric_kernel(int sign, int k, int order)
{
    if (sign != 1 && sign != -1)
        throw std::domain_error("geometric_kernel: sign must be +-1");
    if (k < 1)
        throw std::domain_error("geometric_kernel: k must be >= 1");
    return geometric_series(k, k, sign, order);
}

QSeries geometric_series(long long start, long long step, int sign, int order)
{
    if (sign != 1 && sign != -1)
        throw std::domain_error("geometric_series: sign must be +-1");
    if (start < 0 || step < 1)
        throw std::domain_error("geometric_series: need start >= 0 and step >= 1");
    QSeries s(order);
    int sgn = 1;
    for (long long e = start; e <= order; e += step) {
        s.coeff(static_cast<int>(e)) += ZLaurent(sgn);
        sgn *= sign;
    }
    return s;
}

}  // namespace qpi
