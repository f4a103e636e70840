#pragma once

#include <utility>
#include <vector>

namespace qpi {

long long isqrt_floor(long long n);
bool is_square(long long n);
bool is_triangular(long long n);

/* Indicator as a signed integer, so expressions like r2(N) - 2*chi(is_square(N))
 * read close to their mathematical form. */
inline int chi(bool condition) { return condition ? 1 : 0; }

struct Factorization {
    int two_exp = 0;
    // (prime, exponent) for odd primes, ascending.
    std::vector<std::pair<long long, int>> odd_primes;
};

Factorization factorize(long long n);

/* Number of representations N = x^2 + y^2 over ordered integer pairs,
 * via the classical divisor formula: with N = 2^a * prod p_i^{b_i} * prod q_j^{c_j}
 * (p_i = 1 mod 4, q_j = 3 mod 4), r2(N) = 0 unless all c_j are even, in which
 * case r2(N) = 4 * prod (b_i + 1). Requires N >= 1. */
long long r2(long long n);

/* Independent check: count lattice points on the circle x^2 + y^2 = N
 * directly. */
long long r2_lattice(long long n);

}  // namespace qpi
