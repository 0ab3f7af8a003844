#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mtk/theorems.hpp"

namespace mtk::cli {

enum class TableFormat { markdown, csv };

struct TableSpec {
    uint64_t p_max = 19;
    std::vector<uint64_t> moduli; // empty means the default set 2..10
    TableFormat format = TableFormat::markdown;
};

// The congruence table: rows "Primes (p)", "p (mod 3)", "p (mod 4)", "M_p",
// "Is M_p Prime? (y/n)", then "M_p (mod m)" per modulus ascending; one column
// per prime p <= p_max. Raw residues for every column, including p = 2 and 3.
// p_max > 63 is a range error (exact M_p unavailable).
std::string render_table(const TableSpec& spec);

std::string render_report(const TheoremReport& report);

// Runs the selected verifiers ("all" or explicit ids) and prints one report
// line each. Returns 0 when every counterexample list is empty, 1 otherwise.
// Unknown ids raise std::invalid_argument.
int run_verify(const std::vector<std::string>& theorem_ids,
               const VerifyOptions& opts, std::ostream& out);

// Parses "r mod m" congruences, combines them, returns the combined "r mod m".
std::string run_crt(const std::vector<std::string>& congruence_texts);

// One row per prime p <= p_max: witnessing filter residues and the
// Lucas-Lehmer classification ("passes filters, prime|composite|unknown"),
// plus a summary of the Mersenne-prime exponents found.
std::string render_search(uint64_t p_max);

// One row per Mersenne-prime exponent p <= p_max (<= 31): p, M_p,
// N = 2^(p-1)*M_p, verification method (brute/sigma), verdict.
std::string render_perfect(uint64_t p_max);

} // namespace mtk::cli
