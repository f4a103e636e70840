#pragma once

#include <vector>

#include "qpi/partition.hpp"
#include "qpi/zlaurent.hpp"  // for Int

namespace qpi {

/* All functions below take the parts of a partition in nonincreasing order,
 * exactly as produced by the enumerators. Wrappers accepting a Partition are
 * provided for convenience. Statistics of an overpartition are those of its
 * base partition: overlines never change them. */

struct BasicStats {
    long long norm = 0;
    int smallest = 0;  // s
    int nu = 0;        // number of parts
    int nu_e = 0;      // number of even parts
    int nu_o = 0;      // number of odd parts
    int nu_d = 0;      // number of distinct part sizes
};

/* Throws std::domain_error on the empty partition, which has no smallest
 * part. */
BasicStats basic_stats(const std::vector<int>& parts);

/* Largest t such that the frequencies f_1, ..., f_t are all odd; 0 when f_1
 * is even or 1 is not a part. */
int t_stat(const std::vector<int>& parts);

/* Smallest positive integer that is not a part. */
int least_non_part(const std::vector<int>& parts);

/* Number of distinct part sizes that are >= n. */
int distinct_count_ge(const std::vector<int>& parts, int n);

/* sum_{i=1}^{m} [f_i odd] * 2^{#distinct sizes >= i}, where m is the least
 * non-part. */
Int tau_stat(const std::vector<int>& parts);

/* (-1)^{s + nu + 1} * 2^{nu_d} and (-1)^{s + nu_e + 1} * 2^{nu_d}. */
Int omega_weight(const std::vector<int>& parts);
Int omega_star_weight(const std::vector<int>& parts);

/* Conjugate partition (columns of the Ferrers diagram). */
std::vector<int> conjugate(const std::vector<int>& parts);

inline BasicStats basic_stats(const Partition& p) { return basic_stats(p.parts()); }
inline int t_stat(const Partition& p) { return t_stat(p.parts()); }
inline int least_non_part(const Partition& p) { return least_non_part(p.parts()); }
inline int distinct_count_ge(const Partition& p, int n) { return distinct_count_ge(p.parts(), n); }
inline Int tau_stat(const Partition& p) { return tau_stat(p.parts()); }
inline Int omega_weight(const Partition& p) { return omega_weight(p.parts()); }
inline Int omega_star_weight(const Partition& p) { return omega_star_weight(p.parts()); }
inline Partition conjugate(const Partition& p) { return Partition(conjugate(p.parts())); }

}  // namespace qpi
