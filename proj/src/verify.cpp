#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "qpi/identities.hpp"

namespace qpi {

const char* tag_name(SideTag tag)
{
    switch (tag) {
    case SideTag::AnalyticSum: return "analytic-sum";
    case SideTag::ProductForm: return "product-form";
    case SideTag::CombinatorialEnum: return "combinatorial-enum";
    case SideTag::ClosedFormula: return "closed-formula";
    }
    throw std::invalid_argument("tag_name: bad SideTag");
}

const char* kind_name(IdentityKind kind)
{
    return kind == IdentityKind::Theorem ? "theorem" : "conjecture";
}

const char* status_name(VerifyStatus status)
{
    switch (status) {
    case VerifyStatus::Match: return "MATCH";
    case VerifyStatus::Mismatch: return "MISMATCH";
    case VerifyStatus::ConjectureMatch: return "CONJECTURE-MATCH";
    case VerifyStatus::ConjectureFail: return "CONJECTURE-FAIL";
    }
    throw std::invalid_argument("status_name: bad VerifyStatus");
}

std::optional<VerifyStatus> status_from_name(std::string_view name)
{
    for (VerifyStatus s : {VerifyStatus::Match, VerifyStatus::Mismatch,
                           VerifyStatus::ConjectureMatch, VerifyStatus::ConjectureFail})
        if (name == status_name(s))
            return s;
    return std::nullopt;
}

const IdentityEntry* find_entry(std::string_view id)
{
    for (const IdentityEntry& e : registry())
        if (e.id == id)
            return &e;
    return nullptr;
}

QSeries build_side(std::string_view id, int side_index, int order)
{
    const IdentityEntry* entry = find_entry(id);
    if (!entry)
        throw std::invalid_argument("build_side: unknown identity id '" + std::string(id) + "'");
    if (side_index < 0 || static_cast<size_t>(side_index) >= entry->sides.size())
        throw std::out_of_range("build_side: side index out of range");
    const Side& side = entry->sides[static_cast<size_t>(side_index)];
    if (side.tag == SideTag::CombinatorialEnum && order > entry->max_enum_norm)
        throw std::domain_error("build_side: order " + std::to_string(order) +
                                " exceeds the enumeration ceiling " +
                                std::to_string(entry->max_enum_norm) + " for '" +
                                std::string(id) + "'; request a smaller order");
    return side.build(order, 0);
}

namespace {

std::vector<std::string> coeff_strings(const QSeries& s)
{
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(s.order()) + 1);
    for (int k = 0; k <= s.order(); ++k)
        out.push_back(s[k].str());
    return out;
}

VerificationReport verify_multiset(const IdentityEntry& entry, int order, int enum_ceiling)
{
    const int eff = std::min({order, enum_ceiling, entry.max_enum_norm});
    VerificationReport rep;
    rep.id = entry.id;
    rep.kind = entry.kind;
    rep.order = order;
    const std::vector<std::string> lhs = entry.multiset_lhs(eff);
    const std::vector<std::string> rhs = entry.multiset_rhs(eff);
    rep.status = VerifyStatus::ConjectureMatch;
    for (int n = 1; n <= eff; ++n) {
        if (lhs[static_cast<size_t>(n - 1)] != rhs[static_cast<size_t>(n - 1)]) {
            rep.status = VerifyStatus::ConjectureFail;
            rep.first_divergent_exponent = n;
            break;
        }
    }
    // Norm-indexed strings: pad the q^0 slot so coeffs[k] describes norm k.
    SideReport l{"combinatorial-enum", {}};
    SideReport r{"combinatorial-enum", {}};
    l.coeffs.push_back("{}");
    r.coeffs.push_back("{}");
    l.coeffs.insert(l.coeffs.end(), lhs.begin(), lhs.end());
    r.coeffs.insert(r.coeffs.end(), rhs.begin(), rhs.end());
    rep.sides = {std::move(l), std::move(r)};
    return rep;
}

}  // namespace

VerificationReport verify_entry(const IdentityEntry& entry, int order, int enum_ceiling)
{
    if (order < 1)
        throw std::domain_error("verify_entry: order must be >= 1");
    if (enum_ceiling < 1)
        throw std::domain_error("verify_entry: enum_ceiling must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (entry.multiset_lhs && entry.multiset_rhs) {
        rep = verify_multiset(entry, order, enum_ceiling);
    } else {
        rep.id = entry.id;
        rep.kind = entry.kind;
        rep.order = order;

        std::vector<QSeries> built;
        built.reserve(entry.sides.size());
        for (const Side& side : entry.sides) {
            int eff = order;
            if (side.tag == SideTag::CombinatorialEnum)
                eff = std::min({order, enum_ceiling, entry.max_enum_norm});
            built.push_back(side.build(eff, 0));
        }

        std::optional<int> first_diff;
        for (size_t i = 0; i < built.size(); ++i) {
            for (size_t j = i + 1; j < built.size(); ++j) {
                const int upto = std::min(built[i].order(), built[j].order());
                for (int k = entry.compare_from; k <= upto; ++k) {
                    if (built[i][k] != built[j][k]) {
                        if (!first_diff || k < *first_diff)
                            first_diff = k;
                        break;
                    }
                }
            }
        }

        const bool equal = !first_diff.has_value();
        if (entry.kind == IdentityKind::Theorem)
            rep.status = equal ? VerifyStatus::Match : VerifyStatus::Mismatch;
        else
            rep.status = equal ? VerifyStatus::ConjectureMatch : VerifyStatus::ConjectureFail;
        rep.first_divergent_exponent = first_diff;

        for (size_t i = 0; i < built.size(); ++i)
            rep.sides.push_back(SideReport{tag_name(entry.sides[i].tag), coeff_strings(built[i])});
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

VerificationReport verify(std::string_view id, int order, int enum_ceiling)
{
    const IdentityEntry* entry = find_entry(id);
    if (!entry)
        throw std::invalid_argument("verify: unknown identity id '" + std::string(id) + "'");
    return verify_entry(*entry, order, enum_ceiling);
}

std::vector<VerificationReport> verify_all(int order, int enum_ceiling)
{
    std::vector<VerificationReport> reports;
    reports.reserve(registry().size());
    for (const IdentityEntry& entry : registry())
        reports.push_back(verify_entry(entry, order, enum_ceiling));
    return reports;
}

int exit_code_for(const std::vector<VerificationReport>& reports)
{
    for (const VerificationReport& r : reports)
        if (r.status == VerifyStatus::Mismatch)
            return 1;
    return 0;
}

}  // namespace qpi
