#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qpi {

using Int = boost::multiprecision::cpp_int;

/* Laurent polynomial in the auxiliary variable z with arbitrary-precision
 * integer coefficients. Zero coefficients are never stored, so the default
 * constructed value is the zero polynomial and equality is structural. */
class ZLaurent {
public:
    ZLaurent() = default;
    ZLaurent(long long constant) { set(0, Int(constant)); }
    ZLaurent(Int constant) { set(0, std::move(constant)); }

    static ZLaurent term(Int coeff, int z_exp)
    {
        ZLaurent p;
        p.set(z_exp, std::move(coeff));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /* True when the support is contained in {z^0}. */
    bool z_free() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    Int coeff(int z_exp) const
    {
        auto it = terms_.find(z_exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    const std::map<int, Int>& terms() const { return terms_; }

    ZLaurent& operator+=(const ZLaurent& o)
    {
        for (const auto& [e, c] : o.terms_)
            add(e, c);
        return *this;
    }

    ZLaurent& operator-=(const ZLaurent& o)
    {
        for (const auto& [e, c] : o.terms_)
            add(e, -c);
        return *this;
    }

    ZLaurent operator-() const
    {
        ZLaurent r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
    friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }

    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b)
    {
        ZLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const ZLaurent&) const = default;

    /* Substitute a concrete integer for z. Exponents below zero are only
     * meaningful for z = +-1; anything else raises a domain error since the
     * result would not be an integer. */
    Int eval(long long z0) const
    {
        Int total = 0;
        for (const auto& [e, c] : terms_) {
            if (e >= 0) {
                Int p = 1;
                for (int i = 0; i < e; ++i)
                    p *= z0;
                total += c * p;
            } else {
                if (z0 != 1 && z0 != -1)
                    throw std::domain_error("ZLaurent::eval: negative z-exponent needs z0 = +-1");
                total += (z0 == -1 && (e & 1)) ? -c : c;
            }
        }
        return total;
    }

    /* Canonical display form, highest exponent first: "2*z^2 - z + 7". */
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool negative = c < 0;
            Int mag = negative ? Int(-c) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (e == 0) {
                out += mag.str();
            } else {
                if (mag != 1)
                    out += mag.str() + "*";
                out += (e == 1) ? "z" : "z^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, Int> terms_;

    void set(int e, Int v)
    {
        if (v == 0)
            terms_.erase(e);
        else
            terms_[e] = std::move(v);
    }

    void add(int e, const Int& v)
    {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (v != 0)
                terms_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
};

}  // namespace qpi
