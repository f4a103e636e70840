#include "qpi/identities.hpp"

namespace qpi {

QSeries enum_series(int order, SetId set, WeightId weight, bool mark_odd_parts)
{
    QSeries total(order);
    for (int n = 1; n <= order; ++n) {
        ZLaurent& coeff = total.coeff(n);
        if (set == SetId::O) {
            if (mark_odd_parts)
                throw std::domain_error("enum_series: odd-part marking is for partition families");
            for_each_overpartition(n, [&](const std::vector<int>& parts, const std::vector<int>&) {
                coeff += ZLaurent(eval_weight(weight, parts));
            });
            continue;
        }
        auto visit = [&](const std::vector<int>& parts) {
            if (parts.empty() || !in_set(set, parts))
                return;
            Int w = eval_weight(weight, parts);
            if (mark_odd_parts) {
                int nu_o = 0;
                for (int p : parts)
                    if (p % 2 == 1)
                        ++nu_o;
                coeff += ZLaurent::term(std::move(w), nu_o);
            } else {
                coeff += ZLaurent(std::move(w));
            }
        };
        if (set == SetId::Do) {
            for_each_distinct_partition(n, [&](const std::vector<int>& parts) {
                if (!parts.empty() && parts.back() % 2 == 1)
                    visit(parts);
            });
        } else {
            for_each_partition(n, visit);
        }
    }
    return total;
}

}  // namespace qpi
