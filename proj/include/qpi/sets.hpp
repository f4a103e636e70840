#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qpi/partition.hpp"
#include "qpi/zlaurent.hpp"  // for Int

namespace qpi {

/* Families of partitions (and one of overpartitions) that weighted counts
 * range over.
 *
 *   U       non-empty partitions
 *   Ustar   partitions with f_1 odd
 *   O       non-empty overpartitions
 *   Do      partitions with distinct parts and smallest part odd
 *   P       non-empty partitions whose even parts are distinct
 *   Pe/Po   P with smallest part even / odd
 *   P24     P with smallest part congruent to 2 mod 4
 *   P34     P with smallest part congruent to 3 mod 4
 *   Ctilde  non-empty partitions with no part divisible by 3
 *   R       partitions satisfying the r_index conditions below
 *   Q       partitions satisfying the q_index conditions below          */
enum class SetId { U, Ustar, O, Do, P, Pe, Po, P24, P34, Ctilde, R, Q };

const char* set_name(SetId id);
std::optional<SetId> set_from_name(std::string_view name);

/* Membership for the partition-valued sets; SetId::O raises a domain error
 * because overpartitions are a different carrier. The empty partition is a
 * member of none of these families. */
bool in_set(SetId id, const std::vector<int>& parts);
inline bool in_set(SetId id, const Partition& p) { return in_set(id, p.parts()); }

/* R: there is an n >= 1 with
 *     - every part is at most 2n - 1,
 *     - every even number 2, 4, ..., 2n - 2 occurs as a part,
 *     - f_n >= 1 when n is odd and f_n >= 2 when n is even,
 *     - no even part larger than n repeats.
 * The witness n is determined by the largest even part E as n = E/2 + 1
 * (n = 1 when there is no even part); r_index returns it, or nullopt when
 * the remaining conditions fail. */
std::optional<int> r_index(const std::vector<int>& parts);

/* Q: the largest part is odd, say 2n - 1, every odd number 1, 3, ..., 2n - 1
 * occurs as a part, and every even part is at most n. q_index returns the
 * witness n or nullopt. */
std::optional<int> q_index(const std::vector<int>& parts);

/* Weights attached to R- and Q-partitions with witness n:
 *   mu  = 2^{#even sizes among 2..2n-2 that repeat}
 *         * (1 if n even, else 2 f_n)
 *         * prod over odd o < n of (2 f_o + 1)
 *   eta = 2^{#distinct even sizes}
 *         * (2 - min(f_n,1) if n even, else 2 f_n)
 *         * prod over odd o < n of (2 f_o - 1)
 * Both throw std::domain_error unless the partition lies in the family with
 * that witness. */
Int mu_weight(const std::vector<int>& parts, int n);
Int eta_weight(const std::vector<int>& parts, int n);

inline std::optional<int> r_index(const Partition& p) { return r_index(p.parts()); }
inline std::optional<int> q_index(const Partition& p) { return q_index(p.parts()); }
inline Int mu_weight(const Partition& p, int n) { return mu_weight(p.parts(), n); }
inline Int eta_weight(const Partition& p, int n) { return eta_weight(p.parts(), n); }

}  // namespace qpi
