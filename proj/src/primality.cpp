#include "mtk/primality.hpp"

#include <algorithm>
#include <stdexcept>

#include "mtk/modmath.hpp"

namespace mtk {

namespace {

// total over uint64_t, unlike the checked kernel
inline uint64_t wide_mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t wide_pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    while (exp > 0) {
        if (exp & 1)
            result = wide_mul_mod(result, base, m);
        base = wide_mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Fixed witness set deterministic for all n < 2^64 (Sinclair).
constexpr uint64_t kWitnesses[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2)
        return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }

    // n - 1 = d * 2^s with d odd
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    for (uint64_t a : kWitnesses) {
        a %= n;
        if (a == 0)
            continue;
        uint64_t x = wide_pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = wide_mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2)
        return primes;

    const uint64_t sqrt_limit = isqrt(limit);

    // base primes <= sqrt(limit)
    std::vector<char> small(sqrt_limit + 1, 1);
    for (uint64_t i = 2; i * i <= sqrt_limit; ++i)
        if (small[i])
            for (uint64_t j = i * i; j <= sqrt_limit; j += i)
                small[j] = 0;

    primes.push_back(2);

    const uint64_t segment_size = std::max<uint64_t>(sqrt_limit, 1 << 16);
    std::vector<char> sieve(segment_size);
    std::vector<uint64_t> base;
    std::vector<uint64_t> next; // offset of the next multiple within the segment

    uint64_t s = 3;
    uint64_t n = 3;
    for (uint64_t low = 0; low <= limit; low += segment_size) {
        std::fill(sieve.begin(), sieve.end(), 1);
        const uint64_t high = std::min(low + segment_size - 1, limit);

        for (; s * s <= high; s += 2) {
            if (small[s]) {
                base.push_back(s);
                next.push_back(s * s - low);
            }
        }
        for (size_t i = 0; i < base.size(); ++i) {
            uint64_t j = next[i];
            for (const uint64_t k = 2 * base[i]; j < segment_size; j += k)
                sieve[j] = 0;
            next[i] = j - segment_size;
        }
        for (; n <= high; n += 2)
            if (sieve[n - low])
                primes.push_back(n);
    }
    return primes;
}

uint64_t smallest_factor(uint64_t n) {
    if (n < 2)
        throw std::invalid_argument("smallest_factor: n must be >= 2");
    if (n % 2 == 0)
        return 2;
    if (n % 3 == 0)
        return 3;
    for (uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0)
            return d;
        if (n % (d + 2) == 0)
            return d + 2;
    }
    return n;
}

PrimeExponent::PrimeExponent(uint64_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeExponent: " + std::to_string(p) + " is not prime");
}

LucasLehmerTrace lucas_lehmer(PrimeExponent p) {
    const uint64_t q = p.value();
    if (q > 63)
        throw std::invalid_argument("lucas_lehmer: p must be <= 63, got " + std::to_string(q));
    if (q == 2)
        return {p, 0, true}; // M_2 = 3; the recurrence starts at p = 3

    const uint64_t m = (uint64_t(1) << q) - 1;
    uint64_t s = 4 % m;
    for (uint64_t i = 0; i + 2 < q; ++i) {
        const uint64_t sq = mul_mod(s, s, m);
        s = (sq + m - 2) % m;
    }
    return {p, s, s == 0};
}

} // namespace mtk
