#include "mtk/mersenne.hpp"

#include <stdexcept>
#include <string>

#include "mtk/modmath.hpp"

namespace mtk {

uint64_t mersenne_number(uint64_t p) {
    if (p < 1)
        throw std::invalid_argument("mersenne_number: p must be >= 1");
    if (p > 63)
        throw std::range_error("mersenne_number: 2^" + std::to_string(p) +
                               " - 1 does not fit the 63-bit domain");
    return (uint64_t(1) << p) - 1;
}

uint64_t mersenne_mod(uint64_t p, uint64_t m) {
    if (p < 1)
        throw std::invalid_argument("mersenne_mod: p must be >= 1");
    if (m < 1)
        throw std::invalid_argument("mersenne_mod: modulus must be >= 1");
    return (pow_mod(2 % m, p, m) + m - 1) % m;
}

std::map<uint64_t, uint64_t> residue_fingerprint(uint64_t p, const std::vector<uint64_t>& moduli) {
    std::map<uint64_t, uint64_t> fp;
    for (uint64_t m : moduli)
        fp[m] = mersenne_mod(p, m);
    return fp;
}

std::vector<uint64_t> default_fingerprint_moduli() {
    return {2, 3, 4, 5, 6, 7, 8, 9, 10};
}

MersenneRecord classify(PrimeExponent p) {
    return classify(p, default_fingerprint_moduli());
}

MersenneRecord classify(PrimeExponent p, const std::vector<uint64_t>& moduli) {
    MersenneRecord rec{p, std::nullopt, residue_fingerprint(p.value(), moduli),
                       Classification::unknown};
    if (p.value() <= 63) {
        rec.exact_value = mersenne_number(p.value());
        rec.classification = lucas_lehmer(p).is_mersenne_prime ? Classification::prime
                                                               : Classification::composite;
    }
    return rec;
}

PerfectNumberRecord perfect_number(PrimeExponent p) {
    const uint64_t q = p.value();
    if (q > 31)
        throw std::range_error("perfect_number: p must be <= 31 so that N fits, got " +
                               std::to_string(q));
    if (!lucas_lehmer(p).is_mersenne_prime)
        throw std::domain_error("perfect_number: M_" + std::to_string(q) +
                                " is not a Mersenne prime");

    const uint64_t m = mersenne_number(q);
    const uint64_t n = (uint64_t(1) << (q - 1)) * m;

    bool verified;
    if (q <= 13) {
        verified = is_perfect_bruteforce(n);
    } else {
        // sigma(2^(p-1)) * sigma(M_p) = (2^p - 1) * (M_p + 1) = 2N; M_p prime
        const uint64_t sigma = ((uint64_t(1) << q) - 1) * (m + 1);
        verified = sigma == 2 * n;
    }
    return {p, n, verified};
}

bool is_perfect_bruteforce(uint64_t n) {
    if (n < 2)
        throw std::invalid_argument("is_perfect_bruteforce: n must be >= 2");
    if (n > 1000000000000ull)
        throw std::range_error("is_perfect_bruteforce: n beyond the 10^12 trial-division range");

    uint64_t sum = 1; // 1 is a proper divisor of every n >= 2
    for (uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            sum += d;
            const uint64_t q = n / d;
            if (q != d)
                sum += q;
        }
    }
    return sum == n;
}

bool binomial_sum_check(uint64_t p) {
    if (p < 1)
        throw std::invalid_argument("binomial_sum_check: p must be >= 1");
    if (p > 62)
        throw std::range_error("binomial_sum_check: partial sums exceed the 63-bit domain for p > 62");

    // row p of Pascal's triangle, exact
    std::vector<uint64_t> row(p + 1, 0);
    row[0] = 1;
    for (uint64_t i = 1; i <= p; ++i)
        for (uint64_t j = i; j > 0; --j)
            row[j] += row[j - 1];

    uint64_t sum = 0;
    for (uint64_t i = 1; i <= p; ++i)
        sum += row[i];
    return sum == mersenne_number(p);
}

} // namespace mtk
