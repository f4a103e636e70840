#include "qpi/partition.hpp"

namespace qpi {

std::vector<Partition> enumerate_partitions(long long n)
{
    std::vector<Partition> all;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        Partition p;
        if (!parts.empty())
            p = Partition(parts);
        all.push_back(std::move(p));
    });
    return all;
}

std::vector<Overpartition> enumerate_overpartitions(long long n)
{
    if (n < 1)
        throw std::domain_error("enumerate_overpartitions: n must be >= 1");
    std::vector<Overpartition> all;
    for_each_overpartition(n, [&](const std::vector<int>& parts, const std::vector<int>& overlined) {
        all.push_back(Overpartition{Partition(parts), overlined});
    });
    return all;
}

}  // namespace qpi
