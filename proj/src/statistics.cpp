#include "qpi/statistics.hpp"

#include <stdexcept>

namespace qpi {

BasicStats basic_stats(const std::vector<int>& parts)
{
    if (parts.empty())
        throw std::domain_error("basic_stats: the empty partition has no smallest part");
    BasicStats s;
    s.smallest = parts.back();
    for (size_t i = 0; i < parts.size(); ++i) {
        s.norm += parts[i];
        ++s.nu;
        if (parts[i] % 2 == 0)
            ++s.nu_e;
        else
            ++s.nu_o;
        if (i == 0 || parts[i] != parts[i - 1])
            ++s.nu_d;
    }
    return s;
}

/* Walk the parts from the smallest end, measuring the run length of each
 * consecutive value 1, 2, 3, ... until a frequency fails to be odd. */
int t_stat(const std::vector<int>& parts)
{
    int t = 0;
    size_t i = parts.size();
    int expect = 1;
    while (i > 0 && parts[i - 1] == expect) {
        int run = 0;
        while (i > 0 && parts[i - 1] == expect) {
            ++run;
            --i;
        }
        if (run % 2 == 0)
            break;
        t = expect;
        ++expect;
    }
    return t;
}

int least_non_part(const std::vector<int>& parts)
{
    int expect = 1;
    size_t i = parts.size();
    while (i > 0) {
        if (parts[i - 1] == expect) {
            ++expect;
        } else if (parts[i - 1] < expect) {
            --i;
            continue;
        } else {
            break;
        }
        while (i > 0 && parts[i - 1] == expect - 1)
            --i;
    }
    return expect;
}

int distinct_count_ge(const std::vector<int>& parts, int n)
{
    int count = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i] >= n && (i == 0 || parts[i] != parts[i - 1]))
            ++count;
    return count;
}

Int tau_stat(const std::vector<int>& parts)
{
    const int m = least_non_part(parts);
    // Frequencies of 1 .. m-1 (sizes >= m never matter for the odd test).
    std::vector<int> freq(static_cast<size_t>(m), 0);
    for (size_t i = parts.size(); i-- > 0;) {
        if (parts[i] >= m)
            break;
        ++freq[static_cast<size_t>(parts[i])];
    }
    Int total = 0;
    for (int i = 1; i <= m; ++i) {
        const bool odd = (i < m) && (freq[static_cast<size_t>(i)] % 2 == 1);
        if (odd)
            total += Int(1) << distinct_count_ge(parts, i);
    }
    return total;
}

Int omega_weight(const std::vector<int>& parts)
{
    const BasicStats s = basic_stats(parts);
    const Int mag = Int(1) << s.nu_d;
    return ((s.smallest + s.nu + 1) % 2 == 0) ? mag : -mag;
}

Int omega_star_weight(const std::vector<int>& parts)
{
    const BasicStats s = basic_stats(parts);
    const Int mag = Int(1) << s.nu_d;
    return ((s.smallest + s.nu_e + 1) % 2 == 0) ? mag : -mag;
}

std::vector<int> conjugate(const std::vector<int>& parts)
{
    std::vector<int> conj;
    if (parts.empty())
        return conj;
    conj.reserve(static_cast<size_t>(parts[0]));
    for (int j = 1; j <= parts[0]; ++j) {
        int count = 0;
        for (int p : parts) {
            if (p < j)
                break;
            ++count;
        }
        conj.push_back(count);
    }
    return conj;
}

}  // namespace qpi
