#include "qpi/weights.hpp"

#include <stdexcept>

#include "qpi/statistics.hpp"

namespace qpi {

const char* weight_name(WeightId id)
{
    switch (id) {
    case WeightId::Count: return "count";
    case WeightId::SignSmallest: return "sign-smallest";
    case WeightId::SignSNuE: return "sign-smallest-nu-e";
    case WeightId::TStat: return "t";
    case WeightId::TauStat: return "tau";
    case WeightId::TwoPowDistinct: return "two-pow-distinct";
    case WeightId::Omega: return "omega";
    case WeightId::OmegaStar: return "omega-star";
    case WeightId::SignNu: return "sign-nu";
    case WeightId::SignNuE: return "sign-nu-e";
    case WeightId::SignNuEFlip: return "sign-nu-e-flip";
    case WeightId::Mu: return "mu";
    case WeightId::Eta: return "eta";
    }
    throw std::invalid_argument("weight_name: bad WeightId");
}

std::optional<WeightId> weight_from_name(std::string_view name)
{
    for (WeightId id : {WeightId::Count, WeightId::SignSmallest, WeightId::SignSNuE,
                        WeightId::TStat, WeightId::TauStat, WeightId::TwoPowDistinct,
                        WeightId::Omega, WeightId::OmegaStar, WeightId::SignNu,
                        WeightId::SignNuE, WeightId::SignNuEFlip, WeightId::Mu, WeightId::Eta})
        if (name == weight_name(id))
            return id;
    return std::nullopt;
}

namespace {

Int sign_of_parity(int value)
{
    return value % 2 == 0 ? Int(1) : Int(-1);
}

}  // namespace

Int eval_weight(WeightId id, const std::vector<int>& parts)
{
    switch (id) {
    case WeightId::Count:
        return 1;
    case WeightId::TStat:
        return t_stat(parts);
    case WeightId::TauStat:
        return tau_stat(parts);
    case WeightId::Omega:
        return omega_weight(parts);
    case WeightId::OmegaStar:
        return omega_star_weight(parts);
    case WeightId::Mu: {
        auto n = r_index(parts);
        if (!n)
            throw std::domain_error("eval_weight: mu needs an R-member");
        return mu_weight(parts, *n);
    }
    case WeightId::Eta: {
        auto n = q_index(parts);
        if (!n)
            throw std::domain_error("eval_weight: eta needs a Q-member");
        return eta_weight(parts, *n);
    }
    default:
        break;
    }
    const BasicStats s = basic_stats(parts);
    switch (id) {
    case WeightId::SignSmallest:
        return sign_of_parity(s.smallest + 1);
    case WeightId::SignSNuE:
        return sign_of_parity(s.smallest + s.nu_e + 1);
    case WeightId::TwoPowDistinct:
        return Int(1) << s.nu_d;
    case WeightId::SignNu:
        return sign_of_parity(s.nu);
    case WeightId::SignNuE:
        return sign_of_parity(s.nu_e);
    case WeightId::SignNuEFlip:
        return sign_of_parity(s.nu_e + 1);
    default:
        throw std::invalid_argument("eval_weight: bad WeightId");
    }
}

Int weighted_sum(long long N, SetId set, WeightId weight, std::optional<int> nu_o_filter)
{
    if (N < 1)
        throw std::domain_error("weighted_sum: N must be >= 1");
    if (weight == WeightId::Mu && set != SetId::R)
        throw std::domain_error("weighted_sum: mu is only defined on R");
    if (weight == WeightId::Eta && set != SetId::Q)
        throw std::domain_error("weighted_sum: eta is only defined on Q");

    Int total = 0;
    if (set == SetId::O) {
        const bool supported = weight == WeightId::Count || weight == WeightId::SignSmallest ||
                               weight == WeightId::SignSNuE;
        if (!supported)
            throw std::domain_error("weighted_sum: this weight is not defined on overpartitions");
        if (nu_o_filter)
            throw std::domain_error("weighted_sum: nu_o filter applies to partition families only");
        for_each_overpartition(N, [&](const std::vector<int>& parts, const std::vector<int>&) {
            total += eval_weight(weight, parts);
        });
        return total;
    }

    auto visit = [&](const std::vector<int>& parts) {
        if (parts.empty() || !in_set(set, parts))
            return;
        if (nu_o_filter) {
            int nu_o = 0;
            for (int p : parts)
                if (p % 2 == 1)
                    ++nu_o;
            if (nu_o != *nu_o_filter)
                return;
        }
        total += eval_weight(weight, parts);
    };
    if (set == SetId::Do) {
        // Distinct parts with odd smallest: enumerate distinct partitions only.
        for_each_distinct_partition(N, [&](const std::vector<int>& parts) {
            if (!parts.empty() && parts.back() % 2 == 1)
                visit(parts);
        });
    } else {
        for_each_partition(N, visit);
    }
    return total;
}

}  // namespace qpi
