#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtk {

// Domain limits. Residue values and CRT moduli are confined to 63 bits so
// that every quantity also fits in int64_t (egcd, CRT) and every product
// fits in unsigned __int128. The raw kernels below are total over uint64_t.
inline constexpr uint64_t kMaxValue = (uint64_t(1) << 63) - 1;
inline constexpr uint64_t kMaxModulus = (uint64_t(1) << 63) - 1;

/// Thrown by crt_pair / crt_combine when the congruence system is
/// inconsistent. The message names both offending congruences.
class no_solution_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A canonical value-modulus pair: 0 <= value < modulus, 1 <= modulus <= 2^63 - 1.
// Construction rejects non-canonical input instead of reducing it, so every
// reduction site in the toolkit is explicit.
class Residue {
public:
    Residue(uint64_t value, uint64_t modulus);

    uint64_t value() const noexcept { return value_; }
    uint64_t modulus() const noexcept { return modulus_; }

    bool operator==(const Residue&) const = default;

private:
    uint64_t value_;
    uint64_t modulus_;
};

// The constraint x == value (mod modulus).
struct Congruence {
    Residue residue;

    Congruence(uint64_t value, uint64_t modulus) : residue(value, modulus) {}
    explicit Congruence(Residue r) : residue(r) {}

    uint64_t value() const noexcept { return residue.value(); }
    uint64_t modulus() const noexcept { return residue.modulus(); }

    bool operator==(const Congruence&) const = default;
};

// (a * b) mod m with an exact double-width intermediate. Requires a < m, b < m.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);

// base^exp mod m by left-to-right binary exponentiation. Requires base < m.
// exp == 0 yields 1 mod m (0 when m == 1).
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// floor(sqrt(n)).
uint64_t isqrt(uint64_t n);

struct Egcd {
    int64_t g; // gcd(a, b), always > 0
    int64_t x;
    int64_t y; // a*x + b*y == g
};

// Extended Euclidean algorithm. Rejects a == b == 0.
Egcd egcd(int64_t a, int64_t b);

// The unique congruence mod lcm(m1, m2) satisfying both inputs. Non-coprime
// moduli are supported; the system is consistent iff r1 == r2 (mod gcd(m1, m2)),
// otherwise no_solution_error is thrown.
Congruence crt_pair(const Congruence& c1, const Congruence& c2);

// Left fold of crt_pair over a non-empty system.
Congruence crt_combine(const std::vector<Congruence>& system);

// Text form used at the CLI boundary: "r mod m" (decimal, single spaces).
std::string format_congruence(const Congruence& c);
Congruence parse_congruence(const std::string& text);

} // namespace mtk
