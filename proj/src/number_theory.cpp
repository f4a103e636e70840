#include "qpi/number_theory.hpp"

#include <cmath>
#include <stdexcept>

namespace qpi {

long long isqrt_floor(long long n)
{
    if (n < 0)
        throw std::domain_error("isqrt_floor: negative argument");
    if (n == 0)
        return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square(long long n)
{
    if (n < 0)
        return false;
    const long long r = isqrt_floor(n);
    return r * r == n;
}

bool is_triangular(long long n)
{
    if (n < 0)
        return false;
    // n = k(k+1)/2 iff 8n+1 is an odd square.
    return is_square(8 * n + 1);
}

Factorization factorize(long long n)
{
    if (n < 1)
        throw std::domain_error("factorize: argument must be >= 1");
    Factorization f;
    while (n % 2 == 0) {
        ++f.two_exp;
        n /= 2;
    }
    for (long long p = 3; p * p <= n; p += 2) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            ++e;
            n /= p;
        }
        f.odd_primes.emplace_back(p, e);
    }
    if (n > 1)
        f.odd_primes.emplace_back(n, 1);
    return f;
}

long long r2(long long n)
{
    if (n < 1)
        throw std::domain_error("r2: argument must be >= 1");
    long long count = 4;
    for (const auto& [p, e] : factorize(n).odd_primes) {
        if (p % 4 == 1) {
            count *= e + 1;
        } else if (e % 2 != 0) {
            return 0;
        }
    }
    return count;
}

long long r2_lattice(long long n)
{
    if (n < 1)
        throw std::domain_error("r2_lattice: argument must be >= 1");
    long long count = 0;
    const long long bound = isqrt_floor(n);
    for (long long x = -bound; x <= bound; ++x) {
        const long long rest = n - x * x;
        const long long y = isqrt_floor(rest);
        if (y * y == rest)
            count += (y == 0) ? 1 : 2;  // (x, +-y)
    }
    return count;
}

}  // namespace qpi
