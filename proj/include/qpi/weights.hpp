#pragma once

#include <optional>
#include <string_view>

#include "qpi/sets.hpp"

namespace qpi {

/* Weight functions attached to a partition (or to the base partition of an
 * overpartition, whose statistics ignore overlines):
 *
 *   Count           1
 *   SignSmallest    (-1)^{s+1}
 *   SignSNuE        (-1)^{s+nu_e+1}
 *   TStat           t  (longest run of odd frequencies f_1..f_t)
 *   TauStat         tau
 *   TwoPowDistinct  2^{nu_d}
 *   Omega           (-1)^{s+nu+1} 2^{nu_d}
 *   OmegaStar       (-1)^{s+nu_e+1} 2^{nu_d}
 *   SignNu          (-1)^{nu}
 *   SignNuE         (-1)^{nu_e}
 *   SignNuEFlip     (-1)^{nu_e+1}
 *   Mu              mu with the R witness n
 *   Eta             eta with the Q witness n                                */
enum class WeightId {
    Count,
    SignSmallest,
    SignSNuE,
    TStat,
    TauStat,
    TwoPowDistinct,
    Omega,
    OmegaStar,
    SignNu,
    SignNuE,
    SignNuEFlip,
    Mu,
    Eta,
};

const char* weight_name(WeightId id);
std::optional<WeightId> weight_from_name(std::string_view name);

Int eval_weight(WeightId id, const std::vector<int>& parts);

/* Sum of the weight over the members of the set with norm N, optionally
 * restricted to members with exactly nu_o odd parts. Mu demands SetId::R,
 * Eta demands SetId::Q, and the overpartition family O only supports the
 * pure sign weights and Count; any other pairing is a domain error. */
Int weighted_sum(long long N, SetId set, WeightId weight,
                 std::optional<int> nu_o_filter = std::nullopt);

}  // namespace qpi
