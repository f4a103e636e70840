#include "qpi/tables.hpp"

#include <stdexcept>

#include "qpi/statistics.hpp"

namespace qpi {

namespace {

/* One section listing weight(pi) for every member of the set with this norm;
 * rows with zero weight can be suppressed to match the usual presentation. */
TableSection weight_section(std::string title, long long norm, SetId set, WeightId weight,
                            bool keep_zero_rows = true)
{
    TableSection sec{std::move(title), norm, {}, 0};
    for_each_partition(norm, [&](const std::vector<int>& parts) {
        if (parts.empty() || !in_set(set, parts))
            return;
        Int w = eval_weight(weight, parts);
        sec.total += w;
        if (w == 0 && !keep_zero_rows)
            return;
        int witness = 0;
        if (set == SetId::R)
            witness = *r_index(parts);
        else if (set == SetId::Q)
            witness = *q_index(parts);
        sec.rows.push_back(TableRow{Partition(parts).str(), witness, std::move(w)});
    });
    return sec;
}

}  // namespace

std::vector<TableSection> example_table(int table_id)
{
    switch (table_id) {
    case 2:
        return {weight_section("t(pi) over partitions of 10 with f_1 odd", 10, SetId::Ustar,
                               WeightId::TStat)};
    case 3:
        return {weight_section("tau(pi) over partitions of 8 (rows with tau != 0)", 8, SetId::U,
                               WeightId::TauStat, /*keep_zero_rows=*/false)};
    case 4:
        return {weight_section("omega*(pi) over partitions of 4", 4, SetId::U, WeightId::OmegaStar),
                weight_section("omega*(pi) over partitions of 5", 5, SetId::U, WeightId::OmegaStar)};
    case 7:
        return {weight_section("2^{nu_d} over partitions of 7 with no part divisible by 3", 7,
                               SetId::Ctilde, WeightId::TwoPowDistinct),
                weight_section("mu(pi) over R-partitions of 7 (witness n shown)", 7, SetId::R,
                               WeightId::Mu),
                weight_section("eta(pi) over Q-partitions of 7 (witness n shown)", 7, SetId::Q,
                               WeightId::Eta)};
    default:
        throw std::invalid_argument("example_table: known ids are 2, 3, 4 and 7");
    }
}

}  // namespace qpi
