#include <algorithm>
#include <sstream>

#include "qpi/identities.hpp"
#include "qpi/number_theory.hpp"
#include "qpi/statistics.hpp"

namespace qpi {

namespace {

/* ---- building blocks shared by several sides ---------------------------- */

// 1 +- q^n, with exponents beyond the order quietly dropped.
QSeries one_plus_q_pow(int sign, long long n, int order)
{
    QSeries s = QSeries::one(order);
    if (n <= order)
        s.coeff(static_cast<int>(n)) += ZLaurent(sign);
    return s;
}

// 1/(q;q)_n
QSeries inv_poch(long long n, int order)
{
    return poch_finite({+1, 1, 0}, n, order).inverse();
}

// (-q;q)_n / (q;q)_n
QSeries ratio_neg_pos(long long n, int order)
{
    return poch_finite({-1, 1, 0}, n, order) * inv_poch(n, order);
}

// (-q;q^2)_n / (q^2;q^2)_n
QSeries ratio_neg_pos_2mod(long long n, int order)
{
    return poch_finite({-1, 1, 0}, n, order, 2) *
           poch_finite({+1, 2, 0}, n, order, 2).inverse();
}

// sum_{n>=0} (-1)^n q^{n^2}
QSeries alternating_squares(int order)
{
    QSeries s(order);
    for (long long n = 0; n * n <= order; ++n)
        s.coeff(static_cast<int>(n * n)) += ZLaurent((n & 1) ? -1 : 1);
    return s;
}

/* ---- side factories ----------------------------------------------------- */

Side analytic_side(std::string label, long long n_start,
                   std::function<long long(long long)> min_order,
                   std::function<QSeries(long long, int)> summand)
{
    Side s;
    s.tag = SideTag::AnalyticSum;
    s.label = std::move(label);
    s.min_order = min_order;
    s.build = [n_start, min_order, summand](int order, int extra_terms) {
        QSeries total(order);
        int slack = extra_terms;
        for (long long n = n_start;; ++n) {
            if (min_order(n) > order) {
                if (slack == 0)
                    break;
                --slack;
            }
            total += summand(n, order);
        }
        return total;
    };
    return s;
}

Side enum_side(std::string label, SetId set, WeightId weight, bool mark_odd_parts = false)
{
    Side s;
    s.tag = SideTag::CombinatorialEnum;
    s.label = std::move(label);
    s.build = [set, weight, mark_odd_parts](int order, int) {
        return enum_series(order, set, weight, mark_odd_parts);
    };
    return s;
}

Side product_side(std::string label, std::function<QSeries(int)> make)
{
    Side s;
    s.tag = SideTag::ProductForm;
    s.label = std::move(label);
    s.build = [make](int order, int) { return make(order); };
    return s;
}

Side closed_side(std::string label, std::string formula_id)
{
    Side s;
    s.tag = SideTag::ClosedFormula;
    s.label = std::move(label);
    s.build = [formula_id](int order, int) {
        QSeries total(order);
        for (int n = 1; n <= order; ++n)
            total.coeff(n) += ZLaurent(explicit_formula(formula_id, n));
        return total;
    };
    return s;
}

Side closed_custom(std::string label, std::function<QSeries(int)> make)
{
    Side s;
    s.tag = SideTag::ClosedFormula;
    s.label = std::move(label);
    s.build = [make](int order, int) { return make(order); };
    return s;
}

/* ---- specific analytic summands reused by the negative control ---------- */

// n-th summand of sum_{n>=1} q^n / ((1 + q^n) (q;q)_{n-1})
QSeries smallest_part_summand(long long n, int order)
{
    return geometric_kernel(-1, static_cast<int>(n), order) * inv_poch(n - 1, order);
}

/* ---- the multiset comparison for the one conjecture --------------------- */

std::vector<std::string> witness_weight_multiset(SetId set, int order)
{
    std::vector<std::string> per_norm;
    per_norm.reserve(static_cast<size_t>(order));
    for (int norm = 1; norm <= order; ++norm) {
        std::vector<std::pair<int, Int>> items;
        for_each_partition(norm, [&](const std::vector<int>& parts) {
            if (parts.empty())
                return;
            if (set == SetId::R) {
                if (auto n = r_index(parts))
                    items.emplace_back(*n, mu_weight(parts, *n));
            } else {
                if (auto n = q_index(parts))
                    items.emplace_back(*n, eta_weight(parts, *n));
            }
        });
        std::sort(items.begin(), items.end());
        std::ostringstream out;
        out << "{";
        for (size_t i = 0; i < items.size(); ++i) {
            if (i)
                out << ",";
            out << "(" << items[i].first << "," << items[i].second << ")";
        }
        out << "}";
        per_norm.push_back(out.str());
    }
    return per_norm;
}

std::vector<IdentityEntry> make_registry()
{
    std::vector<IdentityEntry> reg;

    auto add = [&](IdentityEntry e) { reg.push_back(std::move(e)); };

    /* -------------------- overpartitions vs 2^{nu_d} --------------------- */

    add({.id = "eq-1.3",
         .statement = "sum over non-empty overpartitions of q^|pi| = "
                      "sum over non-empty partitions of 2^{nu_d(pi)} q^|pi| = "
                      "(-q;q)_inf / (q;q)_inf - 1",
         .source = "overpartition generating function; Corteel and Lovejoy (2004)",
         .sides = {enum_side("enum-overpartitions", SetId::O, WeightId::Count),
                   enum_side("enum-2^nu_d", SetId::U, WeightId::TwoPowDistinct),
                   product_side("product",
                                [](int order) {
                                    return poch_infinite({-1, 1, 0}, order) *
                                               poch_infinite({+1, 1, 0}, order).inverse() -
                                           QSeries::one(order);
                                })},
         .max_enum_norm = 32});

    /* -------------------- smallest-part sums with t and tau -------------- */

    add({.id = "thm-3.1",
         .statement = "sum over partitions with f_1 odd of t(pi) q^|pi| = "
                      "sum over non-empty partitions of (-1)^{s(pi)+1} q^|pi|",
         .source = "",
         .sides = {enum_side("enum-t", SetId::Ustar, WeightId::TStat),
                   enum_side("enum-sign-smallest", SetId::U, WeightId::SignSmallest)},
         .max_enum_norm = 40});

    add({.id = "thm-3.2",
         .statement = "sum_{n>=1} q^n / ((1+q^n) (q;q)_{n-1}) = "
                      "sum_{n>=1} q^{n(n+1)/2} / ((q^2;q^2)_n (q^{n+1};q)_inf); "
                      "both equal sum over non-empty partitions of (-1)^{s(pi)+1} q^|pi|",
         .source = "via Jackson's transformation of 2phi1 series",
         .sides = {analytic_side(
                       "analytic-lhs", 1, [](long long n) { return n; }, smallest_part_summand),
                   analytic_side(
                       "analytic-rhs", 1, [](long long n) { return n * (n + 1) / 2; },
                       [](long long n, int order) {
                           QSeries s = poch_finite({+1, 2, 0}, n, order, 2).inverse() *
                                       poch_infinite({+1, static_cast<int>(n) + 1, 0}, order)
                                           .inverse();
                           return s.shifted(n * (n + 1) / 2);
                       }),
                   enum_side("enum-sign-smallest", SetId::U, WeightId::SignSmallest)},
         .max_enum_norm = 40});

    add({.id = "thm-3.3",
         .statement = "sum_{n>=1} 2 q^n (-q;q)_{n-1} / ((1+q^n) (q;q)_{n-1}) = "
                      "sum_{n>=0} q^{n(n+1)/2} / (q;q)_n * 2 q^{n+1} / (1-q^{2n+2}) * "
                      "(-q^{n+2};q)_inf / (q^{n+2};q)_inf; "
                      "both equal sum over non-empty overpartitions of (-1)^{s+1} q^|pi|",
         .source = "",
         .sides = {analytic_side(
                       "analytic-lhs", 1, [](long long n) { return n; },
                       [](long long n, int order) {
                           return Int(2) * (geometric_kernel(-1, static_cast<int>(n), order) *
                                            ratio_neg_pos(n - 1, order));
                       }),
                   analytic_side(
                       "analytic-rhs", 0, [](long long n) { return (n + 1) * (n + 2) / 2; },
                       [](long long n, int order) {
                           const int base_exp = static_cast<int>(n) + 2;
                           QSeries s = inv_poch(n, order) *
                                       geometric_series(n + 1, 2 * (n + 1), +1, order) *
                                       poch_infinite({-1, base_exp, 0}, order) *
                                       poch_infinite({+1, base_exp, 0}, order).inverse();
                           return Int(2) * s.shifted(n * (n + 1) / 2);
                       }),
                   enum_side("enum-sign-smallest", SetId::O, WeightId::SignSmallest)},
         .max_enum_norm = 30});

    add({.id = "thm-3.4",
         .statement = "sum over non-empty overpartitions of (-1)^{s+1} q^|pi| = "
                      "sum over non-empty partitions of tau(pi) q^|pi|",
         .source = "",
         .sides = {enum_side("enum-sign-smallest", SetId::O, WeightId::SignSmallest),
                   enum_side("enum-tau", SetId::U, WeightId::TauStat)},
         .max_enum_norm = 30});

    /* -------------------- alternating sums and two squares --------------- */

    add({.id = "lem-4.1",
         .kind = IdentityKind::Theorem,
         .statement = "sum_{n>=1} (-1)^n q^{n(n+1)/2} / ((1+q^n) (q;q)_n) = "
                      "sum_{n>=1} (-1)^n q^{n^2}",
         .source = "specialization of a q-series expansion of partial theta sums",
         .sides = {analytic_side(
                       "analytic-lhs", 1, [](long long n) { return n * (n + 1) / 2; },
                       [](long long n, int order) {
                           QSeries s = one_plus_q_pow(+1, n, order).inverse() * inv_poch(n, order);
                           s = s.shifted(n * (n + 1) / 2);
                           return (n & 1) ? -s : s;
                       }),
                   analytic_side(
                       "analytic-rhs", 1, [](long long n) { return n * n; },
                       [](long long n, int order) {
                           QSeries s(order);
                           if (n * n <= order)
                               s.coeff(static_cast<int>(n * n)) += ZLaurent((n & 1) ? -1 : 1);
                           return s;
                       })},
         .compare_from = 0,
         .max_enum_norm = 0});

    add({.id = "thm-4.2",
         .statement = "sum over partitions into distinct parts with smallest part odd of "
                      "(-1)^{nu(pi)} q^|pi| = sum_{N>=1} (-1)^N [N is a square] q^N",
         .source = "Alladi (2009)",
         .sides = {enum_side("enum-sign-nu", SetId::Do, WeightId::SignNu),
                   closed_side("closed-formula", "thm-4.2")},
         .max_enum_norm = 80});

    add({.id = "thm-4.3",
         .statement = "sum over partitions into distinct parts with smallest part odd of "
                      "(-1)^{nu_e(pi)} q^|pi| = sum_{N>=1} [N is a square] q^N",
         .source = "",
         .sides = {enum_side("enum-sign-nu-e", SetId::Do, WeightId::SignNuE),
                   closed_side("closed-formula", "thm-4.3")},
         .max_enum_norm = 80});

    add({.id = "thm-4.4",
         .statement = "sum over partitions into distinct parts with smallest part odd of "
                      "(-1)^{nu_e(pi)} z^{nu_o(pi)} q^|pi| = sum_{k>=1} z^k q^{k^2}",
         .source = "",
         .sides = {enum_side("enum-sign-nu-e-marked", SetId::Do, WeightId::SignNuE, true),
                   closed_custom("closed-formula",
                                 [](int order) {
                                     QSeries s(order);
                                     for (long long k = 1; k * k <= order; ++k)
                                         s.coeff(static_cast<int>(k * k)) +=
                                             ZLaurent::term(1, static_cast<int>(k));
                                     return s;
                                 })},
         .max_enum_norm = 80});

    add({.id = "thm-4.5",
         .statement = "sum_{n>=1} (-1)^n 2 q^n (-q;q)_{n-1} / ((1+q^n) (q;q)_{n-1}) = "
                      "phi(-q)^2 - phi(-q) = sum_{N>=1} (-1)^N (r2(N) - 2 [N is a square]) q^N; "
                      "the coefficients are the omega-weighted partition counts",
         .source = "",
         .sides = {analytic_side(
                       "analytic-sum", 1, [](long long n) { return n; },
                       [](long long n, int order) {
                           QSeries s = Int(2) * (geometric_kernel(-1, static_cast<int>(n), order) *
                                                 ratio_neg_pos(n - 1, order));
                           return (n & 1) ? -s : s;
                       }),
                   product_side("theta-product",
                                [](int order) {
                                    QSeries phi = theta_phi(-1, order);
                                    return phi * phi - phi;
                                }),
                   closed_side("closed-formula", "thm-4.5"),
                   enum_side("enum-omega", SetId::U, WeightId::Omega)},
         .max_enum_norm = 32});

    add({.id = "thm-4.6",
         .statement = "sum over non-empty partitions of omega*(pi) q^|pi| = "
                      "sum_{N>=1} (r2(N) - 2 [N is a square]) q^N",
         .source = "",
         .sides = {enum_side("enum-omega-star", SetId::U, WeightId::OmegaStar),
                   closed_side("closed-formula", "thm-4.6")},
         .max_enum_norm = 32});

    add({.id = "thm-4.7",
         .statement = "sum over non-empty overpartitions of (-1)^{s+nu_e+1} q^|pi| = "
                      "sum_{N>=1} (r2(N) - 2 [N is a square]) q^N",
         .source = "",
         .sides = {enum_side("enum-sign-smallest-nu-e", SetId::O, WeightId::SignSNuE),
                   closed_side("closed-formula", "thm-4.7")},
         .max_enum_norm = 28});

    /* -------------------- distinct even parts, smallest part even -------- */

    add({.id = "thm-5.1",
         .statement = "sum_{n>=1} (-1)^n q^{3n-1} (-q;q^2)_{n-1} / ((1-q^{2n}) (q^2;q^2)_{n-1}) = "
                      "psi(-q) - 1/(1+q) = sum over partitions with distinct even parts and "
                      "smallest part even of (-1)^{nu(pi)} q^|pi|",
         .source = "",
         .sides = {analytic_side(
                       "analytic-sum", 1, [](long long n) { return 3 * n - 1; },
                       [](long long n, int order) {
                           QSeries s = geometric_series(2 * n, 2 * n, +1, order) *
                                       ratio_neg_pos_2mod(n - 1, order);
                           s = s.shifted(n - 1);
                           return (n & 1) ? -s : s;
                       }),
                   product_side("theta-difference",
                                [](int order) {
                                    return theta_psi(-1, order) -
                                           one_plus_q_pow(+1, 1, order).inverse();
                                }),
                   enum_side("enum-sign-nu", SetId::Pe, WeightId::SignNu)},
         .max_enum_norm = 40});

    add({.id = "eq-5.4",
         .statement = "sum over partitions with distinct even parts and smallest part even of "
                      "(-1)^{nu(pi)} q^|pi| = sum_{N>=1} (-1)^{N+1} [N is not triangular] q^N",
         .source = "",
         .sides = {enum_side("enum-sign-nu", SetId::Pe, WeightId::SignNu),
                   closed_side("closed-formula", "eq-5.4")},
         .max_enum_norm = 40});

    add({.id = "thm-5.2-refined",
         .statement = "sum over partitions with distinct even parts and smallest part even of "
                      "(-1)^{nu_e(pi)+1} q^|pi| = sum_{N>=1} [N is not triangular] q^N",
         .source = "",
         .sides = {enum_side("enum-sign-nu-e-flip", SetId::Pe, WeightId::SignNuEFlip),
                   closed_side("closed-formula", "thm-5.2-refined")},
         .max_enum_norm = 40});

    add({.id = "eq-5.6-z",
         .statement = "sum_{n>=1} (-1)^n q^{2n} (zq)^{n-1} (-q/z;q^2)_{n-1} / "
                      "((1-q^{2n}) (q^2;q^2)_{n-1}) = "
                      "(q^2;q^2)_inf / (-zq;q^2)_inf - 1/(1+zq) = "
                      "sum over partitions with distinct even parts and smallest part even of "
                      "(-1)^{nu} z^{nu_o} q^|pi|",
         .source = "",
         .sides = {analytic_side(
                       "analytic-sum", 1, [](long long n) { return 3 * n - 1; },
                       [](long long n, int order) {
                           QSeries s = geometric_series(2 * n, 2 * n, +1, order) *
                                       poch_finite({-1, 1, -1}, n - 1, order, 2) *
                                       poch_finite({+1, 2, 0}, n - 1, order, 2).inverse();
                           s = s.shifted(n - 1, static_cast<int>(n - 1));
                           return (n & 1) ? -s : s;
                       }),
                   product_side("product-difference",
                                [](int order) {
                                    QSeries one_plus_zq = QSeries::one(order);
                                    if (order >= 1)
                                        one_plus_zq.coeff(1) += ZLaurent::term(1, 1);
                                    return poch_infinite({+1, 2, 0}, order, 2) *
                                               poch_infinite({-1, 1, 1}, order, 2).inverse() -
                                           one_plus_zq.inverse();
                                }),
                   enum_side("enum-sign-nu-marked", SetId::Pe, WeightId::SignNu, true)},
         .max_enum_norm = 40});

    add({.id = "eq-5.7-z",
         .statement = "sum over partitions with distinct even parts of "
                      "(-1)^{nu} z^{nu_o} q^|pi| = (q^2;q^2)_inf / (-zq;q^2)_inf - 1",
         .source = "",
         .sides = {enum_side("enum-sign-nu-marked", SetId::P, WeightId::SignNu, true),
                   product_side("product",
                                [](int order) {
                                    return poch_infinite({+1, 2, 0}, order, 2) *
                                               poch_infinite({-1, 1, 1}, order, 2).inverse() -
                                           QSeries::one(order);
                                })},
         .max_enum_norm = 40});

    add({.id = "eq-5.8-z",
         .statement = "sum over partitions with distinct even parts and smallest part odd of "
                      "(-1)^{nu_e} z^{nu_o} q^|pi| = 1/(1-zq) - 1",
         .source = "",
         .sides = {enum_side("enum-sign-nu-e-marked", SetId::Po, WeightId::SignNuE, true),
                   product_side("product",
                                [](int order) {
                                    QSeries one_minus_zq = QSeries::one(order);
                                    if (order >= 1)
                                        one_minus_zq.coeff(1) -= ZLaurent::term(1, 1);
                                    return one_minus_zq.inverse() - QSeries::one(order);
                                })},
         .max_enum_norm = 40});

    add({.id = "thm-5.3",
         .statement = "sum over partitions with distinct even parts, smallest part odd and "
                      "exactly k odd parts of (-1)^{nu_e} q^|pi| = [|pi| = k], jointly over "
                      "all k as sum_{k>=1} z^k q^k",
         .source = "",
         .sides = {enum_side("enum-sign-nu-e-marked", SetId::Po, WeightId::SignNuE, true),
                   closed_custom("closed-formula",
                                 [](int order) {
                                     QSeries s(order);
                                     for (int k = 1; k <= order; ++k)
                                         s.coeff(k) += ZLaurent::term(1, k);
                                     return s;
                                 })},
         .max_enum_norm = 40});

    /* -------------------- square-interval oscillations ------------------- */

    add({.id = "thm-5.4-analytic",
         .statement = "sum_{n>=1} (-1)^n q^{3n-1} (-q;q^2)_{n-1} / ((1-q^{4n}) (q^2;q^2)_{n-1}) = "
                      "(sum_{n>=0} (-1)^n q^{n^2}) / (1-q) - 1/(1-q^2) = "
                      "sum over partitions with distinct even parts and smallest part = 2 mod 4 "
                      "of (-1)^{nu(pi)} q^|pi|",
         .source = "",
         .sides = {analytic_side(
                       "analytic-sum", 1, [](long long n) { return 3 * n - 1; },
                       [](long long n, int order) {
                           QSeries s = geometric_series(2 * n, 4 * n, +1, order) *
                                       ratio_neg_pos_2mod(n - 1, order);
                           s = s.shifted(n - 1);
                           return (n & 1) ? -s : s;
                       }),
                   product_side("theta-quotient",
                                [](int order) {
                                    return alternating_squares(order) *
                                               one_plus_q_pow(-1, 1, order).inverse() -
                                           one_plus_q_pow(-1, 2, order).inverse();
                                }),
                   enum_side("enum-sign-nu", SetId::P24, WeightId::SignNu)},
         .max_enum_norm = 40});

    add({.id = "thm-5.5",
         .statement = "sum over partitions with distinct even parts and smallest part = 2 mod 4 "
                      "of (-1)^{nu(pi)} q^|pi| has coefficient +1 when N is odd and lies "
                      "strictly between an even square and the next odd square, -1 when N is "
                      "even and lies strictly between an odd square and the next even square, "
                      "0 otherwise",
         .source = "",
         .sides = {enum_side("enum-sign-nu", SetId::P24, WeightId::SignNu),
                   closed_side("closed-formula", "thm-5.5")},
         .max_enum_norm = 40});

    add({.id = "thm-5.6",
         .statement = "sum over partitions with distinct even parts and smallest part = 3 mod 4 "
                      "of (-1)^{nu(pi)} q^|pi| has coefficient +1 when N is even and lies "
                      "strictly between an even square and the next odd square, -1 when N is "
                      "odd and lies strictly between an odd square and the next even square, "
                      "0 otherwise",
         .source = "",
         .sides = {enum_side("enum-sign-nu", SetId::P34, WeightId::SignNu),
                   closed_side("closed-formula", "thm-5.6")},
         .max_enum_norm = 40});

    add({.id = "thm-5.7",
         .statement = "the signed counts over smallest part = 3 mod 4 minus those over "
                      "smallest part = 2 mod 4, with weight (-1)^{nu}, give "
                      "sum_{N>=1} (-1)^N [N is not a square] q^N",
         .source = "",
         .sides = {{SideTag::CombinatorialEnum, "enum-difference",
                    [](int order, int) {
                        return enum_series(order, SetId::P34, WeightId::SignNu) -
                               enum_series(order, SetId::P24, WeightId::SignNu);
                    }},
                   closed_side("closed-formula", "thm-5.7")},
         .max_enum_norm = 40});

    add({.id = "thm-5.8",
         .statement = "the signed counts over smallest part = 3 mod 4 minus those over "
                      "smallest part = 2 mod 4, with weight (-1)^{nu_e}, give "
                      "sum_{N>=1} [N is not a square] q^N",
         .source = "",
         .sides = {{SideTag::CombinatorialEnum, "enum-difference",
                    [](int order, int) {
                        return enum_series(order, SetId::P34, WeightId::SignNuE) -
                               enum_series(order, SetId::P24, WeightId::SignNuE);
                    }},
                   closed_side("closed-formula", "thm-5.8")},
         .max_enum_norm = 40});

    /* -------------------- parts prime to 3 and the mu / eta weights ------ */

    add({.id = "rama-6.1",
         .statement = "(-q;q^3)_inf (-q^2;q^3)_inf / ((q;q^3)_inf (q^2;q^3)_inf) - 1 = "
                      "sum_{n>=1} 2 q^{n^2} (-q;q)_{n-1} / ((1-q^n) (q;q)_{n-1} (q;q^2)_n) = "
                      "sum over non-empty partitions with no part divisible by 3 of "
                      "2^{nu_d(pi)} q^|pi|",
         .source = "Ramanujan's lost notebook; Slater's list, entry 6",
         .sides = {product_side("product",
                                [](int order) {
                                    return poch_infinite({-1, 1, 0}, order, 3) *
                                               poch_infinite({-1, 2, 0}, order, 3) *
                                               poch_infinite({+1, 1, 0}, order, 3).inverse() *
                                               poch_infinite({+1, 2, 0}, order, 3).inverse() -
                                           QSeries::one(order);
                                }),
                   analytic_side(
                       "analytic-sum", 1, [](long long n) { return n * n; },
                       [](long long n, int order) {
                           QSeries s = ratio_neg_pos(n - 1, order) *
                                       geometric_kernel(+1, static_cast<int>(n), order) *
                                       poch_finite({+1, 1, 0}, n, order, 2).inverse();
                           return Int(2) * s.shifted(n * n - n);
                       }),
                   enum_side("enum-2^nu_d", SetId::Ctilde, WeightId::TwoPowDistinct)},
         .max_enum_norm = 36});

    add({.id = "thm-6.2",
         .statement = "sum over non-empty partitions with no part divisible by 3 of "
                      "2^{nu_d(pi)} q^|pi| = sum over R-partitions of mu(pi) q^|pi|",
         .source = "",
         .sides = {enum_side("enum-2^nu_d", SetId::Ctilde, WeightId::TwoPowDistinct),
                   enum_side("enum-mu", SetId::R, WeightId::Mu)},
         .max_enum_norm = 36});

    add({.id = "thm-6.3",
         .statement = "sum over non-empty partitions with no part divisible by 3 of "
                      "2^{nu_d(pi)} q^|pi| = sum over Q-partitions of eta(pi) q^|pi|",
         .source = "",
         .sides = {enum_side("enum-2^nu_d", SetId::Ctilde, WeightId::TwoPowDistinct),
                   enum_side("enum-eta", SetId::Q, WeightId::Eta)},
         .max_enum_norm = 36});

    add({.id = "rama-6.8",
         .statement = "(-q;q^3)_inf (-q^2;q^3)_inf / ((q;q^3)_inf (q^2;q^3)_inf) = "
                      "sum_{n>=0} q^{n^2} (-q;q)_n / ((q;q)_n (q;q^2)_{n+1})",
         .source = "Ramanujan's lost notebook",
         .sides = {product_side("product",
                                [](int order) {
                                    return poch_infinite({-1, 1, 0}, order, 3) *
                                               poch_infinite({-1, 2, 0}, order, 3) *
                                               poch_infinite({+1, 1, 0}, order, 3).inverse() *
                                               poch_infinite({+1, 2, 0}, order, 3).inverse();
                                }),
                   analytic_side(
                       "analytic-sum", 0, [](long long n) { return n * n; },
                       [](long long n, int order) {
                           QSeries s = ratio_neg_pos(n, order) *
                                       poch_finite({+1, 1, 0}, n + 1, order, 2).inverse();
                           return s.shifted(n * n);
                       })},
         .compare_from = 0,
         .max_enum_norm = 0});

    /* -------------------- the R vs Q conjecture -------------------------- */

    {
        IdentityEntry e;
        e.id = "rq-bijection";
        e.kind = IdentityKind::Conjecture;
        e.statement =
            "for every norm, the multiset of (witness n, mu(pi)) over R-partitions equals "
            "the multiset of (witness n, eta(pi)) over Q-partitions";
        e.source = "";
        e.sides = {{SideTag::CombinatorialEnum, "enum-mu-by-witness",
                    [](int order, int) {
                        QSeries total(order);
                        for (int norm = 1; norm <= order; ++norm)
                            for_each_partition(norm, [&](const std::vector<int>& parts) {
                                if (parts.empty())
                                    return;
                                if (auto n = r_index(parts))
                                    total.coeff(norm) +=
                                        ZLaurent::term(mu_weight(parts, *n), *n);
                            });
                        return total;
                    }},
                   {SideTag::CombinatorialEnum, "enum-eta-by-witness",
                    [](int order, int) {
                        QSeries total(order);
                        for (int norm = 1; norm <= order; ++norm)
                            for_each_partition(norm, [&](const std::vector<int>& parts) {
                                if (parts.empty())
                                    return;
                                if (auto n = q_index(parts))
                                    total.coeff(norm) +=
                                        ZLaurent::term(eta_weight(parts, *n), *n);
                            });
                        return total;
                    }}};
        e.max_enum_norm = 25;
        e.multiset_lhs = [](int order) { return witness_weight_multiset(SetId::R, order); };
        e.multiset_rhs = [](int order) { return witness_weight_multiset(SetId::Q, order); };
        add(std::move(e));
    }

    return reg;
}

}  // namespace

const std::vector<IdentityEntry>& registry()
{
    static const std::vector<IdentityEntry> reg = make_registry();
    return reg;
}

long long explicit_formula(std::string_view id, long long N)
{
    if (N < 1)
        throw std::domain_error("explicit_formula: N must be >= 1");
    const long long sign_N = (N % 2 == 0) ? 1 : -1;
    if (id == "thm-4.2")
        return sign_N * chi(is_square(N));
    if (id == "thm-4.3" || id == "thm-4.4")
        return chi(is_square(N));
    if (id == "thm-4.5")
        return sign_N * (r2(N) - 2 * chi(is_square(N)));
    if (id == "thm-4.6" || id == "thm-4.7")
        return r2(N) - 2 * chi(is_square(N));
    if (id == "eq-5.4")
        return -sign_N * chi(!is_triangular(N));
    if (id == "thm-5.2-refined")
        return chi(!is_triangular(N));
    if (id == "thm-5.3")
        return 1;  // at z = 1 every norm picks up exactly its own k
    if (id == "thm-5.5" || id == "thm-5.6") {
        if (is_square(N))
            return 0;
        const bool below_even = isqrt_floor(N) % 2 == 0;  // nearest square below is even^2
        if (id == "thm-5.5")
            return (N % 2 == 1 && below_even) ? 1 : (N % 2 == 0 && !below_even) ? -1 : 0;
        return (N % 2 == 0 && below_even) ? 1 : (N % 2 == 1 && !below_even) ? -1 : 0;
    }
    if (id == "thm-5.7")
        return sign_N * chi(!is_square(N));
    if (id == "thm-5.8")
        return chi(!is_square(N));
    throw std::invalid_argument("explicit_formula: no closed form for id '" + std::string(id) + "'");
}

CorruptedEntry corrupted_entry()
{
    const IdentityEntry* base = find_entry("thm-3.2");
    IdentityEntry bad = *base;
    bad.id = "thm-3.2-corrupted";
    // Flip the sign of the n = 2 summand of the analytic left side. The
    // summand starts at q^2, so the sides must first diverge there.
    Side& lhs = bad.sides[0];
    auto orig = lhs.build;
    lhs.build = [orig](int order, int extra_terms) {
        QSeries s = orig(order, extra_terms);
        return s - Int(2) * smallest_part_summand(2, order);
    };
    return {std::move(bad), 2};
}

}  // namespace qpi
