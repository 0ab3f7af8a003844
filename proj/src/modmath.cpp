#include "mtk/modmath.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace mtk {

Residue::Residue(uint64_t value, uint64_t modulus) : value_(value), modulus_(modulus) {
    if (modulus == 0)
        throw std::invalid_argument("Residue: modulus must be >= 1");
    if (modulus > kMaxModulus)
        throw std::invalid_argument("Residue: modulus exceeds the 63-bit domain");
    if (value >= modulus)
        throw std::invalid_argument("Residue: value " + std::to_string(value) +
                                    " not canonical mod " + std::to_string(modulus));
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("mul_mod: modulus must be >= 1");
    if (a >= m || b >= m)
        throw std::invalid_argument("mul_mod: operands must be reduced mod m");
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("pow_mod: modulus must be >= 1");
    if (base >= m)
        throw std::invalid_argument("pow_mod: base must be reduced mod m");

    uint64_t result = 1 % m;
    if (exp == 0)
        return result;

    // left-to-right binary exponentiation
    int bit = 63 - std::countl_zero(exp);
    for (; bit >= 0; --bit) {
        result = mul_mod(result, result, m);
        if ((exp >> bit) & 1)
            result = mul_mod(result, base, m);
    }
    return result;
}

uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

Egcd egcd(int64_t a, int64_t b) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("egcd: gcd(0, 0) is undefined");
    if (a == INT64_MIN || b == INT64_MIN)
        throw std::invalid_argument("egcd: operand outside the 63-bit domain");

    int64_t old_r = a, r = b;
    int64_t old_x = 1, x = 0;
    int64_t old_y = 0, y = 1;
    while (r != 0) {
        const int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

Congruence crt_pair(const Congruence& c1, const Congruence& c2) {
    const uint64_t r1 = c1.value(), m1 = c1.modulus();
    const uint64_t r2 = c2.value(), m2 = c2.modulus();

    const uint64_t g = std::gcd(m1, m2);
    const uint64_t diff = r1 >= r2 ? r1 - r2 : r2 - r1;
    if (diff % g != 0)
        throw no_solution_error("no solution: " + format_congruence(c1) + " and " +
                                format_congruence(c2) + " conflict mod " + std::to_string(g));

    const uint64_t m2g = m2 / g;
    if (m2g != 0 && m1 > kMaxModulus / m2g)
        throw std::range_error("crt_pair: lcm(" + std::to_string(m1) + ", " +
                               std::to_string(m2) + ") exceeds the 63-bit domain");
    const uint64_t lcm = m1 * m2g;

    // x = r1 + m1 * t with t = (r2 - r1)/g * inv(m1/g) (mod m2/g)
    if (m2g == 1)
        return Congruence(r1, lcm);
    const uint64_t inv =
        static_cast<uint64_t>(((egcd(static_cast<int64_t>((m1 / g) % m2g),
                                     static_cast<int64_t>(m2g))
                                    .x %
                                static_cast<int64_t>(m2g)) +
                               static_cast<int64_t>(m2g)) %
                              static_cast<int64_t>(m2g));
    const uint64_t step = (r2 >= r1 ? (r2 - r1) / g % m2g : m2g - (r1 - r2) / g % m2g) % m2g;
    const uint64_t t = mul_mod(step, inv, m2g);
    const uint64_t x = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(m1) * t + r1) % lcm);

    // both inputs must hold by construction
    if (x % m1 != r1 || x % m2 != r2)
        throw std::logic_error("crt_pair: internal postcondition failed");
    return Congruence(x, lcm);
}

Congruence crt_combine(const std::vector<Congruence>& system) {
    if (system.empty())
        throw std::invalid_argument("crt_combine: empty system");
    Congruence acc = system.front();
    for (size_t i = 1; i < system.size(); ++i)
        acc = crt_pair(acc, system[i]);
    return acc;
}

std::string format_congruence(const Congruence& c) {
    return std::to_string(c.value()) + " mod " + std::to_string(c.modulus());
}

Congruence parse_congruence(const std::string& text) {
    const auto fail = [&text]() -> std::invalid_argument {
        return std::invalid_argument("cannot parse congruence \"" + text +
                                     "\": expected \"r mod m\"");
    };

    size_t pos = 0;
    const auto read_uint = [&]() -> uint64_t {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw fail();
        uint64_t v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            const uint64_t digit = static_cast<uint64_t>(text[pos] - '0');
            if (v > (UINT64_MAX - digit) / 10)
                throw fail();
            v = v * 10 + digit;
            ++pos;
        }
        return v;
    };

    const uint64_t value = read_uint();
    if (text.compare(pos, 5, " mod ") != 0)
        throw fail();
    pos += 5;
    const uint64_t modulus = read_uint();
    if (pos != text.size())
        throw fail();
    return Congruence(value, modulus); // rejects non-canonical pairs
}

} // namespace mtk
