#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpi {

/* Integer partition stored as nonincreasing positive parts. */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    long long norm() const
    {
        long long n = 0;
        for (int p : parts_)
            n += p;
        return n;
    }

    std::map<int, int> frequencies() const
    {
        std::map<int, int> f;
        for (int p : parts_)
            ++f[p];
        return f;
    }

    /* Frequency notation, smallest part first: "(1^3,2,3)". */
    std::string str() const
    {
        std::string out = "(";
        for (auto it = parts_.rbegin(); it != parts_.rend();) {
            const int value = *it;
            int run = 0;
            while (it != parts_.rend() && *it == value) {
                ++run;
                ++it;
            }
            if (out.size() > 1)
                out += ",";
            out += std::to_string(value);
            if (run > 1)
                out += "^" + std::to_string(run);
        }
        return out + ")";
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/* Overpartition: a partition in which the final occurrence of a part size may
 * be overlined. Equivalently a pair (base partition, subset of its distinct
 * part sizes). */
struct Overpartition {
    Partition base;
    std::vector<int> overlined;  // decreasing, subset of base's distinct sizes

    std::string str() const
    {
        std::string out = base.str();
        if (!overlined.empty()) {
            out += " over{";
            for (size_t i = overlined.size(); i-- > 0;) {
                out += std::to_string(overlined[i]);
                if (i > 0)
                    out += ",";
            }
            out += "}";
        }
        return out;
    }

    auto operator<=>(const Overpartition&) const = default;
};

/* Visit every partition of n in canonical order: parts nonincreasing, first
 * part descending, then recursively on the remainder. n = 0 yields only the
 * empty partition. The callback receives the working buffer by const
 * reference and must not retain it. */
template <class F>
void for_each_partition(long long n, F&& f)
{
    if (n < 0)
        throw std::domain_error("for_each_partition: n must be >= 0");
    std::vector<int> parts;
    auto rec = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            f(static_cast<const std::vector<int>&>(parts));
            return;
        }
        for (long long p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(static_cast<int>(p));
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

/* Same order restricted to partitions with pairwise distinct parts. */
template <class F>
void for_each_distinct_partition(long long n, F&& f)
{
    if (n < 0)
        throw std::domain_error("for_each_distinct_partition: n must be >= 0");
    std::vector<int> parts;
    auto rec = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            f(static_cast<const std::vector<int>&>(parts));
            return;
        }
        for (long long p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(static_cast<int>(p));
            self(self, remaining - p, p - 1);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

/* Visit every overpartition of n exactly once: each base partition in
 * canonical order, then every subset of its distinct part sizes in mask
 * order. The second argument lists the overlined sizes in decreasing order. */
template <class F>
void for_each_overpartition(long long n, F&& f)
{
    std::vector<int> distinct;
    std::vector<int> overlined;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        if (parts.empty())
            return;
        distinct.clear();
        for (size_t i = 0; i < parts.size(); ++i)
            if (i == 0 || parts[i] != parts[i - 1])
                distinct.push_back(parts[i]);
        const unsigned subsets = 1u << distinct.size();
        for (unsigned mask = 0; mask < subsets; ++mask) {
            overlined.clear();
            for (size_t i = 0; i < distinct.size(); ++i)
                if (mask & (1u << i))
                    overlined.push_back(distinct[i]);
            f(parts, static_cast<const std::vector<int>&>(overlined));
        }
    });
}

std::vector<Partition> enumerate_partitions(long long n);
std::vector<Overpartition> enumerate_overpartitions(long long n);

}  // namespace qpi
