#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fq {

using std::gcd;
using std::lcm;

inline long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Validates the genus parameter accepted throughout: a prime q >= 5.
inline void require_prime_q(long q) {
    if (q < 5 || !is_prime(q))
        throw std::invalid_argument("q must be a prime >= 5, got " + std::to_string(q));
}

}  // namespace fq
