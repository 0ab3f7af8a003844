#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "mtk/modmath.hpp"

using namespace mtk;

namespace {

// independent oracle: double-and-add, no wide multiply anywhere
uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= m - b ? a - (m - b) : a + b;
}

uint64_t peasant_mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t acc = 0;
    a %= m;
    while (b > 0) {
        if (b & 1)
            acc = add_mod(acc, a, m);
        a = add_mod(a, a, m);
        b >>= 1;
    }
    return acc;
}

} // namespace

TEST_CASE("mul_mod examples") {
    CHECK_EQ(mul_mod(0, 17, 101), 0);
    CHECK_EQ(mul_mod(3, 5, 7), 1);
    // 2^80 mod (2^61 - 1) = 2^19
    const uint64_t m61 = (uint64_t(1) << 61) - 1;
    CHECK_EQ(mul_mod(uint64_t(1) << 40, uint64_t(1) << 40, m61), 524288);
}

TEST_CASE("mul_mod rejects unreduced operands") {
    CHECK_THROWS_AS(mul_mod(5, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(mul_mod(2, 9, 7), std::invalid_argument);
    CHECK_THROWS_AS(mul_mod(0, 0, 0), std::invalid_argument);
}

TEST_CASE("mul_mod matches the double-and-add oracle, moduli up to 2^64") {
    std::mt19937_64 rng(20250809);
    const uint64_t moduli[] = {2,
                               3,
                               10,
                               (uint64_t(1) << 31) + 11,
                               (uint64_t(1) << 61) - 1,
                               (uint64_t(1) << 63) - 1,
                               uint64_t(1) << 63,
                               (uint64_t(1) << 63) + 9,
                               UINT64_MAX};
    for (uint64_t m : moduli) {
        for (int i = 0; i < 200; ++i) {
            const uint64_t a = rng() % m;
            const uint64_t b = rng() % m;
            CHECK_EQ(mul_mod(a, b, m), peasant_mul_mod(a, b, m));
        }
    }
}

TEST_CASE("pow_mod examples") {
    CHECK_EQ(pow_mod(2, 10, 11), 1); // a^(p-1) == 1 (mod p)
    CHECK_EQ(pow_mod(5, 0, 9), 1);
    CHECK_EQ(pow_mod(0, 0, 1), 0); // 1 mod 1
    CHECK_EQ(pow_mod(7, 13, 1000003), 719743);
    CHECK_THROWS_AS(pow_mod(9, 2, 7), std::invalid_argument);
    CHECK_THROWS_AS(pow_mod(0, 1, 0), std::invalid_argument);
}

TEST_CASE("pow_mod equals repeated multiplication") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const uint64_t m = 2 + rng() % 1000000;
        const uint64_t base = rng() % m;
        const uint64_t exp = rng() % 50;
        uint64_t brute = 1 % m;
        for (uint64_t k = 0; k < exp; ++k)
            brute = mul_mod(brute, base, m);
        CHECK_EQ(pow_mod(base, exp, m), brute);
    }
}

TEST_CASE("pow_mod splits exponent sums") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const uint64_t m = 2 + rng() % ((uint64_t(1) << 62));
        const uint64_t a = rng() % m;
        const uint64_t e1 = rng() >> 1; // keep e1 + e2 from wrapping
        const uint64_t e2 = rng() >> 1;
        CHECK_EQ(pow_mod(a, e1 + e2, m),
                 mul_mod(pow_mod(a, e1, m), pow_mod(a, e2, m), m));
    }
}

TEST_CASE("isqrt") {
    CHECK_EQ(isqrt(0), 0);
    CHECK_EQ(isqrt(1), 1);
    CHECK_EQ(isqrt(3), 1);
    CHECK_EQ(isqrt(4), 2);
    CHECK_EQ(isqrt(UINT64_MAX), 4294967295ull);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const uint64_t r = rng() % 4294967295ull + 1;
        CHECK_EQ(isqrt(r * r), r);
        CHECK_EQ(isqrt(r * r - 1), r - 1);
    }
}

TEST_CASE("egcd examples") {
    Egcd e = egcd(3, 4);
    CHECK_EQ(e.g, 1);
    CHECK_EQ(e.x, -1);
    CHECK_EQ(e.y, 1);

    e = egcd(42, 0);
    CHECK_EQ(e.g, 42);
    CHECK_EQ(e.x, 1);
    CHECK_EQ(e.y, 0);

    e = egcd(6, 4);
    CHECK_EQ(e.g, 2);
    CHECK_EQ(e.x, 1);
    CHECK_EQ(e.y, -1);

    CHECK_THROWS_AS(egcd(0, 0), std::invalid_argument);
}

TEST_CASE("egcd Bezout identity holds exactly") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        int64_t a = static_cast<int64_t>(rng() >> 1);
        int64_t b = static_cast<int64_t>(rng() >> 1);
        if (rng() & 1)
            a = -a;
        if (rng() & 1)
            b = -b;
        if (a == 0 && b == 0)
            continue;
        const Egcd e = egcd(a, b);
        CHECK_GT(e.g, 0);
        CHECK_EQ(a % e.g, 0);
        CHECK_EQ(b % e.g, 0);
        const __int128 lhs = static_cast<__int128>(a) * e.x + static_cast<__int128>(b) * e.y;
        CHECK(lhs == static_cast<__int128>(e.g));
    }
}

TEST_CASE("Residue and Congruence invariants") {
    CHECK_EQ(Residue(0, 1).value(), 0);
    CHECK_EQ(Residue(6, 7).modulus(), 7);
    CHECK_THROWS_AS(Residue(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(Residue(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Residue(0, kMaxModulus + 1), std::invalid_argument);
    CHECK_EQ(Congruence(3, 4).value(), 3);
    CHECK_EQ(Congruence(3, 4).modulus(), 4);
}

TEST_CASE("crt_pair worked examples") {
    const Congruence combined = crt_pair(Congruence(1, 3), Congruence(3, 4));
    CHECK_EQ(combined.value(), 7);
    CHECK_EQ(combined.modulus(), 12);

    const Congruence vacuous = crt_pair(Congruence(0, 1), Congruence(5, 7));
    CHECK_EQ(vacuous.value(), 5);
    CHECK_EQ(vacuous.modulus(), 7);

    const Congruence noncoprime = crt_pair(Congruence(1, 4), Congruence(3, 6));
    CHECK_EQ(noncoprime.value(), 9);
    CHECK_EQ(noncoprime.modulus(), 12);
}

TEST_CASE("crt_pair inconsistent system names both congruences") {
    try {
        crt_pair(Congruence(1, 2), Congruence(0, 4));
        FAIL("expected no_solution_error");
    } catch (const no_solution_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("1 mod 2") != std::string::npos);
        CHECK(msg.find("0 mod 4") != std::string::npos);
    }
}

TEST_CASE("crt_pair matches exhaustive scan on random pairs") {
    std::mt19937_64 rng(20240101);
    int inconsistent_seen = 0;
    for (int i = 0; i < 400; ++i) {
        const uint64_t m1 = 1 + rng() % 1000;
        const uint64_t m2 = 1 + rng() % 1000;
        const uint64_t r1 = rng() % m1;
        const uint64_t r2 = rng() % m2;
        const uint64_t lcm = std::lcm(m1, m2);

        uint64_t expected = lcm;
        for (uint64_t x = 0; x < lcm; ++x) {
            if (x % m1 == r1 && x % m2 == r2) {
                expected = x;
                break;
            }
        }

        if (expected == lcm) {
            ++inconsistent_seen;
            CHECK_THROWS_AS(crt_pair(Congruence(r1, m1), Congruence(r2, m2)), no_solution_error);
        } else {
            const Congruence got = crt_pair(Congruence(r1, m1), Congruence(r2, m2));
            CHECK_EQ(got.value(), expected);
            CHECK_EQ(got.modulus(), lcm);
        }
    }
    CHECK_GT(inconsistent_seen, 0); // the sample must exercise both branches
}

TEST_CASE("crt_combine") {
    const Congruence paper = crt_combine({Congruence(1, 3), Congruence(3, 4)});
    CHECK_EQ(paper.value(), 7);
    CHECK_EQ(paper.modulus(), 12);

    const Congruence single = crt_combine({Congruence(5, 7)});
    CHECK_EQ(single.value(), 5);
    CHECK_EQ(single.modulus(), 7);

    for (uint64_t p : {5ull, 7ull, 11ull, 101ull, 99991ull}) {
        const Congruence c = crt_combine({Congruence(1, 6), Congruence(1, p)});
        CHECK_EQ(c.value(), 1);
        CHECK_EQ(c.modulus(), 6 * p);
    }

    CHECK_THROWS_AS(crt_combine({}), std::invalid_argument);
    CHECK_THROWS_AS(crt_combine({Congruence(1, 2), Congruence(0, 4)}), no_solution_error);
}

TEST_CASE("crt_pair result satisfies both inputs on larger random systems") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const uint64_t m1 = 1 + rng() % 1000000;
        const uint64_t m2 = 1 + rng() % 1000000;
        const uint64_t r = rng(); // pick a common solution, then project it
        const Congruence c1(r % m1, m1);
        const Congruence c2(r % m2, m2);
        const Congruence got = crt_pair(c1, c2); // consistent by construction
        CHECK_EQ(got.modulus(), std::lcm(m1, m2));
        CHECK_EQ(got.value() % m1, c1.value());
        CHECK_EQ(got.value() % m2, c2.value());
    }
}

TEST_CASE("congruence text format") {
    CHECK_EQ(format_congruence(Congruence(7, 12)), "7 mod 12");
    CHECK_EQ(parse_congruence("7 mod 12"), Congruence(7, 12));
    CHECK_EQ(parse_congruence("0 mod 1"), Congruence(0, 1));

    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const uint64_t m = 1 + rng() % (kMaxModulus - 1);
        const Congruence c(rng() % m, m);
        CHECK_EQ(parse_congruence(format_congruence(c)), c);
    }

    for (const char* bad : {"", "1mod3", "1  mod 3", "15 mod 12", "-1 mod 3", "1 mod 0",
                            "1 mod 3 x", "x mod 3", "1 mod", "mod 3", "1 MOD 3"})
        CHECK_THROWS_AS(parse_congruence(bad), std::invalid_argument);
}
