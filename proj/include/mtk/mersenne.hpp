#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mtk/primality.hpp"

namespace mtk {

enum class Classification { prime, composite, unknown };

struct MersenneRecord {
    PrimeExponent p;
    std::optional<uint64_t> exact_value;      // present iff p <= 63
    std::map<uint64_t, uint64_t> fingerprint; // modulus -> M_p mod modulus
    Classification classification;            // unknown only when p > 63
};

struct PerfectNumberRecord {
    PrimeExponent p;
    uint64_t n_value; // 2^(p-1) * (2^p - 1)
    bool is_verified_perfect;
};

// Exact 2^p - 1 for 1 <= p <= 63. Larger p is a range error.
uint64_t mersenne_number(uint64_t p);

// (2^p - 1) mod m for any p >= 1 without materializing 2^p - 1,
// as (pow_mod(2, p, m) + m - 1) mod m.
uint64_t mersenne_mod(uint64_t p, uint64_t m);

// m -> mersenne_mod(p, m) for every requested modulus.
std::map<uint64_t, uint64_t> residue_fingerprint(uint64_t p, const std::vector<uint64_t>& moduli);

// The table's default modulus set 2..10.
std::vector<uint64_t> default_fingerprint_moduli();

// Full record for prime p: exact value and Lucas-Lehmer verdict when p <= 63,
// classification unknown beyond that, never guessed from congruence filters.
MersenneRecord classify(PrimeExponent p);
MersenneRecord classify(PrimeExponent p, const std::vector<uint64_t>& moduli);

// Even perfect number 2^(p-1) * M_p for a Mersenne-prime exponent p <= 31.
// Verified by divisor-sum brute force for p <= 13 and by the sigma identity
// sigma(2^(p-1)) * sigma(M_p) = (2^p - 1)(M_p + 1) = 2N above.
PerfectNumberRecord perfect_number(PrimeExponent p);

// True iff the proper divisors of n sum to n. Trial division; n <= 10^12.
bool is_perfect_bruteforce(uint64_t n);

// Checks sum_{i=1..p} C(p, i) == 2^p - 1 with an exact Pascal-recurrence row.
// 1 <= p <= 62 so every partial sum fits.
bool binomial_sum_check(uint64_t p);

} // namespace mtk
