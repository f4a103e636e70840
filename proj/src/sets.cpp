#include "qpi/sets.hpp"

#include <stdexcept>

namespace qpi {

const char* set_name(SetId id)
{
    switch (id) {
    case SetId::U: return "U";
    case SetId::Ustar: return "Ustar";
    case SetId::O: return "O";
    case SetId::Do: return "Do";
    case SetId::P: return "P";
    case SetId::Pe: return "Pe";
    case SetId::Po: return "Po";
    case SetId::P24: return "P24";
    case SetId::P34: return "P34";
    case SetId::Ctilde: return "Ctilde";
    case SetId::R: return "R";
    case SetId::Q: return "Q";
    }
    throw std::invalid_argument("set_name: bad SetId");
}

std::optional<SetId> set_from_name(std::string_view name)
{
    for (SetId id : {SetId::U, SetId::Ustar, SetId::O, SetId::Do, SetId::P, SetId::Pe,
                     SetId::Po, SetId::P24, SetId::P34, SetId::Ctilde, SetId::R, SetId::Q})
        if (name == set_name(id))
            return id;
    return std::nullopt;
}

namespace {

bool all_distinct(const std::vector<int>& parts)
{
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1])
            return false;
    return true;
}

bool even_parts_distinct(const std::vector<int>& parts)
{
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1] && parts[i] % 2 == 0)
            return false;
    return true;
}

int count_trailing_ones(const std::vector<int>& parts)
{
    int c = 0;
    for (size_t i = parts.size(); i-- > 0 && parts[i] == 1;)
        ++c;
    return c;
}

}  // namespace

bool in_set(SetId id, const std::vector<int>& parts)
{
    if (id == SetId::O)
        throw std::domain_error("in_set: O contains overpartitions, not partitions");
    if (parts.empty())
        return false;
    const int smallest = parts.back();
    switch (id) {
    case SetId::U:
        return true;
    case SetId::Ustar:
        return count_trailing_ones(parts) % 2 == 1;
    case SetId::Do:
        return smallest % 2 == 1 && all_distinct(parts);
    case SetId::P:
        return even_parts_distinct(parts);
    case SetId::Pe:
        return smallest % 2 == 0 && even_parts_distinct(parts);
    case SetId::Po:
        return smallest % 2 == 1 && even_parts_distinct(parts);
    case SetId::P24:
        return smallest % 4 == 2 && even_parts_distinct(parts);
    case SetId::P34:
        return smallest % 4 == 3 && even_parts_distinct(parts);
    case SetId::Ctilde:
        for (int p : parts)
            if (p % 3 == 0)
                return false;
        return true;
    case SetId::R:
        return r_index(parts).has_value();
    case SetId::Q:
        return q_index(parts).has_value();
    case SetId::O:
        break;
    }
    throw std::invalid_argument("in_set: bad SetId");
}

std::optional<int> r_index(const std::vector<int>& parts)
{
    if (parts.empty())
        return std::nullopt;
    int largest_even = 0;
    for (int p : parts)
        if (p % 2 == 0) {
            largest_even = p;
            break;  // parts are nonincreasing
        }
    const int n = largest_even / 2 + 1;
    if (parts[0] > 2 * n - 1)
        return std::nullopt;
    // Frequencies of 1 .. 2n-1 (no larger part exists at this point).
    std::vector<int> freq(static_cast<size_t>(2 * n), 0);
    for (int p : parts)
        ++freq[static_cast<size_t>(p)];
    for (int e = 2; e <= 2 * n - 2; e += 2)
        if (freq[static_cast<size_t>(e)] == 0)
            return std::nullopt;
    if (freq[static_cast<size_t>(n)] < 1 + (n % 2 == 0 ? 1 : 0))
        return std::nullopt;
    for (int e = n % 2 == 0 ? n + 2 : n + 1; e <= 2 * n - 2; e += 2)  // even sizes above n
        if (freq[static_cast<size_t>(e)] > 1)
            return std::nullopt;
    return n;
}

std::optional<int> q_index(const std::vector<int>& parts)
{
    if (parts.empty() || parts[0] % 2 == 0)
        return std::nullopt;
    const int n = (parts[0] + 1) / 2;
    std::vector<int> freq(static_cast<size_t>(2 * n), 0);
    for (int p : parts)
        ++freq[static_cast<size_t>(p)];
    for (int o = 1; o <= 2 * n - 1; o += 2)
        if (freq[static_cast<size_t>(o)] == 0)
            return std::nullopt;
    for (int e = n % 2 == 0 ? n + 2 : n + 1; e <= 2 * n - 2; e += 2)  // even sizes above n
        if (freq[static_cast<size_t>(e)] > 0)
            return std::nullopt;
    return n;
}

Int mu_weight(const std::vector<int>& parts, int n)
{
    if (r_index(parts) != std::optional<int>(n))
        throw std::domain_error("mu_weight: partition is not an R-member with this witness");
    std::vector<int> freq(static_cast<size_t>(2 * n), 0);
    for (int p : parts)
        ++freq[static_cast<size_t>(p)];
    int repeats = 0;
    for (int e = 2; e <= 2 * n - 2; e += 2)
        if (freq[static_cast<size_t>(e)] > 1)
            ++repeats;
    Int w = Int(1) << repeats;
    w *= (n % 2 == 0) ? Int(1) : Int(2 * freq[static_cast<size_t>(n)]);
    for (int o = 1; o < n; o += 2)
        w *= 2 * freq[static_cast<size_t>(o)] + 1;
    return w;
}

Int eta_weight(const std::vector<int>& parts, int n)
{
    if (q_index(parts) != std::optional<int>(n))
        throw std::domain_error("eta_weight: partition is not a Q-member with this witness");
    std::vector<int> freq(static_cast<size_t>(2 * n), 0);
    int distinct_even = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        ++freq[static_cast<size_t>(parts[i])];
        if (parts[i] % 2 == 0 && (i == 0 || parts[i] != parts[i - 1]))
            ++distinct_even;
    }
    Int w = Int(1) << distinct_even;
    if (n % 2 == 0)
        w *= freq[static_cast<size_t>(n)] == 0 ? 2 : 1;
    else
        w *= 2 * freq[static_cast<size_t>(n)];
    for (int o = 1; o < n; o += 2)
        w *= 2 * freq[static_cast<size_t>(o)] - 1;
    return w;
}

}  // namespace qpi
