#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mtk/primality.hpp"

namespace mtk {

struct Counterexample {
    std::string inputs; // e.g. "p=11, i=3"
    uint64_t expected;
    uint64_t actual;
};

struct TheoremReport {
    std::string theorem_id;
    std::string range_description;
    uint64_t cases_checked = 0;
    std::vector<Counterexample> counterexamples;

    TheoremReport() = default;
    TheoremReport(std::string id, std::string range)
        : theorem_id(std::move(id)), range_description(std::move(range)) {}

    bool passed() const { return counterexamples.empty() && cases_checked > 0; }
};

// Merge of partial sweeps of the same verifier: cases sum, counterexamples
// concatenate. Must equal the sequential result over the union range.
TheoremReport merge_reports(const std::vector<TheoremReport>& parts);

// T3: M_n = 2^n - 1 == 3 (mod 4) for every integer n in [n_min, n_max]
// (all integers, not just primes; the induction covers them all).
TheoremReport verify_theorem3(uint64_t n_max, uint64_t n_min = 2);

// The k with 2^n - 1 = 4k + 3, for 2 <= n <= 63.
uint64_t theorem3_witness(uint64_t n);

// C1: even a, prime p: a^p == 0 and a^p - 1 == 3 (mod 4).
TheoremReport verify_claim_i(uint64_t a_max, uint64_t p_max);

// C2: odd a, odd prime p: a^(p-1) == 1 and a^p - 1 == a - 1 (mod 4).
TheoremReport verify_claim_ii(uint64_t a_max, uint64_t p_max);

// T4 parts 1..9: congruences of M_p modulo 2..10 for odd primes p > 2.
// Parts 4 and 9 branch on p mod 4; parts 6 and 8 branch on p mod 3 and skip
// p = 3 (neither branch applies to p == 0 mod 3).
TheoremReport verify_theorem4_part(int part, uint64_t p_max);
std::vector<TheoremReport> verify_theorem4(uint64_t p_max);

// T5: M_p == 2^i - 1 (mod 2^i) for every prime p and 1 <= i < min(p, 64).
TheoremReport verify_theorem5(uint64_t p_max, uint64_t p_min = 2);

// T6: M_p == 1 (mod p) for every odd prime p.
TheoremReport verify_theorem6(uint64_t p_max, uint64_t p_min = 3);

// T8/T9/T10, all mod p: a^p == a; (a+1)^p == a+1; (a+1)^p == a^p + 1.
TheoremReport verify_theorem8(uint64_t a_max, uint64_t p_max);
TheoremReport verify_theorem9(uint64_t a_max, uint64_t p_max);
TheoremReport verify_theorem10(uint64_t a_max, uint64_t p_max);
std::vector<TheoremReport> verify_flt_family(uint64_t a_max, uint64_t p_max);

enum class DecompositionForm {
    two_p_k_plus_1,          // M_p = 2pk + 1, k odd         (T11)
    four_p_k_plus_2p_plus_1, // M_p = 4pk + 2p + 1           (T12)
    four_n_plus_3,           // M_p = 4n + 3 with p | 2n + 1 (T13)
};

struct DecompositionWitness {
    PrimeExponent p;
    DecompositionForm form;
    uint64_t witness; // the k or n of the form
};

// The unique witness for an odd prime p <= 63. The defining identity and side
// condition are re-verified before returning; a failure would disprove the
// theorem and raises std::logic_error.
DecompositionWitness decompose(PrimeExponent p, DecompositionForm form);

// Corollary to T3: M_p is never a sum of two squares. Exhaustive scan over
// a in 0..isqrt(M_p), plus a positive control (5 = 1^2 + 2^2) proving the
// scanner can find decompositions at all.
TheoremReport verify_two_squares(const std::vector<PrimeExponent>& p_set);

// Finds (a, b) with a^2 + b^2 == n and a <= b, if any. The two-squares scanner.
bool find_two_squares(uint64_t n, uint64_t* a_out, uint64_t* b_out);

// CRT consequences: M_p == 7 (mod 12) for p > 2 and M_p == 1 (mod 6p) for
// p > 3. Expected residues are re-derived through crt_combine at run time.
// Keys: "CRT-12" always, "CRT-6P" only when p > 3.
std::map<std::string, bool> derived_congruences(PrimeExponent p);

// Placement of M_p in the sequences {3n+1}, {6n+1}, {8n+7}, {12n+7}, {pn+1},
// {6pn+1}: label -> the witnessing n. A label is absent when the congruence
// fails (only {6pn+1} at p = 3, per the p > 3 hypothesis). Odd prime p <= 63.
std::map<std::string, uint64_t> sequence_membership(PrimeExponent p);

// ---- verifier registry (stable public theorem ids) ----

struct VerifyOptions {
    uint64_t p_max = 100000; // prime bound; also the n bound for T3
    uint64_t a_max = 100;    // base bound for C1/C2 and the FLT family
};

// T3, C1, C2, T4.1..T4.9, T5, T6, T8, T9, T10, T11, T12, T13,
// COR-2SQ, CRT-12, CRT-6P, SEQ -- in this order.
const std::vector<std::string>& all_theorem_ids();

// Runs one verifier by id ("T4" expands to all nine parts).
// Unknown ids raise std::invalid_argument.
std::vector<TheoremReport> run_verifier(const std::string& id, const VerifyOptions& opts);

} // namespace mtk
