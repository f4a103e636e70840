#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpi/qseries.hpp"
#include "qpi/weights.hpp"

namespace qpi {

enum class SideTag { AnalyticSum, ProductForm, CombinatorialEnum, ClosedFormula };
enum class IdentityKind { Theorem, Conjecture };
enum class VerifyStatus { Match, Mismatch, ConjectureMatch, ConjectureFail };

const char* tag_name(SideTag tag);
const char* kind_name(IdentityKind kind);
const char* status_name(VerifyStatus status);
std::optional<VerifyStatus> status_from_name(std::string_view name);

/* One route to the common q-series of an identity. extra_terms only matters
 * for analytic sums: it forces that many summands past the natural cutoff
 * into the total, which must not change any retained coefficient. */
struct Side {
    SideTag tag;
    std::string label;
    std::function<QSeries(int order, int extra_terms)> build;

    /* For analytic sums: minimal q-order contributed by the n-th summand,
     * which justifies the truncation cutoff. Null for the other kinds. */
    std::function<long long(long long n)> min_order{};
};

struct IdentityEntry {
    std::string id;
    IdentityKind kind = IdentityKind::Theorem;
    std::string statement;  // the claimed equality, in (a;q)_n notation
    std::string source;     // classical attribution, when one exists
    std::vector<Side> sides;

    /* First q-exponent that is compared; enumeration sides start at q^1 so
     * entries with such a side usually skip the constant term. */
    int compare_from = 1;

    /* Suggested ceiling for enumeration sides; build_side refuses larger
     * requests, and verification quietly caps enumeration at this norm. */
    int max_enum_norm = 0;  // 0: no enumeration side

    /* Set for the one conjecture entry that is checked as a per-norm multiset
     * of (witness, weight) pairs rather than coefficient-by-coefficient. Each
     * builder returns one canonical string per norm 1..order. */
    std::function<std::vector<std::string>(int order)> multiset_lhs{};
    std::function<std::vector<std::string>(int order)> multiset_rhs{};
};

struct SideReport {
    std::string tag;
    std::vector<std::string> coeffs;
    bool operator==(const SideReport&) const = default;
};

struct VerificationReport {
    std::string id;
    IdentityKind kind = IdentityKind::Theorem;
    int order = 0;
    VerifyStatus status = VerifyStatus::Match;
    std::optional<int> first_divergent_exponent;
    std::vector<SideReport> sides;
    double ms = 0.0;
    bool operator==(const VerificationReport&) const = default;
};

const std::vector<IdentityEntry>& registry();
const IdentityEntry* find_entry(std::string_view id);

/* Builds one side at the given truncation order; unknown id raises
 * std::invalid_argument, bad index std::out_of_range, and an enumeration
 * side beyond its declared ceiling std::domain_error. */
QSeries build_side(std::string_view id, int side_index, int order);

/* Compares every pair of sides coefficient-by-coefficient from compare_from
 * to the truncation order. Enumeration sides are built only up to
 * min(order, enum_ceiling, max_enum_norm) and compared on that range. */
VerificationReport verify_entry(const IdentityEntry& entry, int order, int enum_ceiling);
VerificationReport verify(std::string_view id, int order, int enum_ceiling);
std::vector<VerificationReport> verify_all(int order, int enum_ceiling);

/* Closed-form right-hand sides evaluated at a single norm, for the entries
 * that have one. */
long long explicit_formula(std::string_view id, long long N);

/* 0 when every theorem entry matched, 1 otherwise. Conjecture entries never
 * influence the result. */
int exit_code_for(const std::vector<VerificationReport>& reports);

/* sum over the members of the set with norm 1..order of
 * weight * z^{nu_o} * q^{norm} (or plain q^{norm} when mark_odd_parts is
 * false). This is the generating function every enumeration side uses. */
QSeries enum_series(int order, SetId set, WeightId weight, bool mark_odd_parts = false);

/* Fixture for negative-control tests: a clone of a registry entry with the
 * sign of one analytic summand flipped, plus the q-exponent where the first
 * divergence must appear. */
struct CorruptedEntry {
    IdentityEntry entry;
    int expected_divergence;
};
CorruptedEntry corrupted_entry();

}  // namespace qpi
