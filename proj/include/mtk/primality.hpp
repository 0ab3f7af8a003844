#pragma once

#include <cstdint>
#include <vector>

namespace mtk {

// Deterministic Miller-Rabin over a fixed witness set that is exact for the
// whole 64-bit range. No randomness, no error probability.
bool is_prime(uint64_t n);

// All primes <= limit, ascending. Segmented sieve; limits up to ~10^8 are fine.
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Smallest prime factor of n >= 2 by trial division up to sqrt(n);
// returns n itself when n is prime.
uint64_t smallest_factor(uint64_t n);

// A prime exponent p, validated at construction.
class PrimeExponent {
public:
    explicit PrimeExponent(uint64_t p);
    uint64_t value() const noexcept { return p_; }

    bool operator==(const PrimeExponent&) const = default;

private:
    uint64_t p_;
};

struct LucasLehmerTrace {
    PrimeExponent p;
    uint64_t final_s;        // last term of the recurrence, mod M_p
    bool is_mersenne_prime;  // final_s == 0 for p >= 3; p == 2 is special-cased
};

// Lucas-Lehmer test of M_p = 2^p - 1 for prime 2 <= p <= 63:
// s_0 = 4, s_{k+1} = (s_k^2 - 2) mod M_p, iterated p - 2 times.
LucasLehmerTrace lucas_lehmer(PrimeExponent p);

} // namespace mtk
