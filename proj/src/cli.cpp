#include "mtk/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "mtk/mersenne.hpp"
#include "mtk/modmath.hpp"

namespace mtk::cli {

namespace {

// row-major cell grid; row 0 is the header
using Table = std::vector<std::vector<std::string>>;

std::string to_markdown(const Table& cells) {
    std::string out;
    for (size_t r = 0; r < cells.size(); ++r) {
        out += '|';
        for (const std::string& cell : cells[r])
            out += ' ' + cell + " |";
        out += '\n';
        if (r == 0) {
            out += '|';
            for (size_t c = 0; c < cells[0].size(); ++c)
                out += " --- |";
            out += '\n';
        }
    }
    return out;
}

std::string to_csv(const Table& cells) {
    std::string out;
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

std::string format_count(uint64_t v) { return std::to_string(v); }

} // namespace

std::string render_table(const TableSpec& spec) {
    if (spec.p_max < 2)
        throw std::invalid_argument("table: p_max must be >= 2");
    if (spec.p_max > 63)
        throw std::range_error("table: exact M_p values are unavailable beyond p = 63");

    std::vector<uint64_t> moduli = spec.moduli.empty() ? default_fingerprint_moduli() : spec.moduli;
    for (uint64_t m : moduli)
        if (m < 2)
            throw std::invalid_argument("table: moduli must be >= 2");
    std::sort(moduli.begin(), moduli.end());

    const auto primes = primes_up_to(spec.p_max);

    Table cells;
    const auto add_row = [&cells, &primes](const std::string& label, auto&& cell_of) {
        std::vector<std::string> row;
        row.reserve(primes.size() + 1);
        row.push_back(label);
        for (uint64_t p : primes)
            row.push_back(cell_of(p));
        cells.push_back(std::move(row));
    };

    add_row("Primes (p)", [](uint64_t p) { return format_count(p); });
    add_row("p (mod 3)", [](uint64_t p) { return format_count(p % 3); });
    add_row("p (mod 4)", [](uint64_t p) { return format_count(p % 4); });
    add_row("M_p", [](uint64_t p) { return format_count(mersenne_number(p)); });
    add_row("Is M_p Prime? (y/n)", [](uint64_t p) {
        return lucas_lehmer(PrimeExponent(p)).is_mersenne_prime ? std::string("y")
                                                                : std::string("n");
    });
    for (uint64_t m : moduli)
        add_row("M_p (mod " + format_count(m) + ")",
                [m](uint64_t p) { return format_count(mersenne_mod(p, m)); });

    return spec.format == TableFormat::csv ? to_csv(cells) : to_markdown(cells);
}

std::string render_report(const TheoremReport& report) {
    std::ostringstream out;
    out << report.theorem_id;
    for (size_t i = report.theorem_id.size(); i < 8; ++i)
        out << ' ';
    out << (report.passed() ? "PASS" : "FAIL") << "  cases=" << report.cases_checked
        << "  counterexamples=" << report.counterexamples.size() << "  ("
        << report.range_description << ")";
    for (const Counterexample& ce : report.counterexamples)
        out << "\n    counterexample: " << ce.inputs << "  expected=" << ce.expected
            << "  actual=" << ce.actual;
    return out.str();
}

int run_verify(const std::vector<std::string>& theorem_ids, const VerifyOptions& opts,
               std::ostream& out) {
    std::vector<std::string> ids = theorem_ids;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all"))
        ids = all_theorem_ids();

    bool clean = true;
    for (const std::string& id : ids) {
        for (const TheoremReport& report : run_verifier(id, opts)) {
            out << render_report(report) << '\n';
            clean = clean && report.counterexamples.empty();
        }
    }
    return clean ? 0 : 1;
}

std::string run_crt(const std::vector<std::string>& congruence_texts) {
    if (congruence_texts.empty())
        throw std::invalid_argument("crt: at least one congruence required");
    std::vector<Congruence> system;
    system.reserve(congruence_texts.size());
    for (const std::string& text : congruence_texts)
        system.push_back(parse_congruence(text));
    return format_congruence(crt_combine(system));
}

std::string render_search(uint64_t p_max) {
    if (p_max < 2)
        throw std::invalid_argument("search: p_max must be >= 2");

    std::ostringstream out;
    out << std::setw(5) << "p" << " | " << std::setw(5) << "mod 4" << " | " << std::setw(6)
        << "mod 12" << " | " << std::setw(5) << "mod p" << " | " << std::setw(6) << "mod 6p"
        << " | classification\n";

    std::vector<uint64_t> found;
    uint64_t scanned = 0;
    for (uint64_t p : primes_up_to(p_max)) {
        ++scanned;
        // the witnessing residues of the necessary-condition filters
        const std::string r4 = std::to_string(mersenne_mod(p, 4));
        const std::string r12 = p > 2 ? std::to_string(mersenne_mod(p, 12)) : std::string("-");
        const std::string rp = p > 2 ? std::to_string(mersenne_mod(p, p)) : std::string("-");
        const std::string r6p = p > 3 ? std::to_string(mersenne_mod(p, 6 * p)) : std::string("-");

        std::string verdict;
        if (p > 63) {
            verdict = "unknown";
        } else if (lucas_lehmer(PrimeExponent(p)).is_mersenne_prime) {
            verdict = "prime";
            found.push_back(p);
        } else {
            verdict = "composite";
        }

        out << std::setw(5) << p << " | " << std::setw(5) << r4 << " | " << std::setw(6) << r12
            << " | " << std::setw(5) << rp << " | " << std::setw(6) << r6p
            << " | passes filters, " << verdict << '\n';
    }

    out << "Mersenne-prime exponents found:";
    for (uint64_t p : found)
        out << ' ' << p;
    out << " (" << found.size() << " of " << scanned << " primes <= " << p_max << ")\n";
    return out.str();
}

std::string render_perfect(uint64_t p_max) {
    if (p_max < 2)
        throw std::invalid_argument("perfect: p_max must be >= 2");
    if (p_max > 31)
        throw std::range_error("perfect: p_max must be <= 31 so that N fits the 63-bit domain");

    std::ostringstream out;
    out << std::setw(3) << "p" << " | " << std::setw(10) << "M_p" << " | " << std::setw(19) << "N"
        << " | method | verdict\n";
    for (uint64_t p : primes_up_to(p_max)) {
        PrimeExponent pe(p);
        if (!lucas_lehmer(pe).is_mersenne_prime)
            continue;
        const PerfectNumberRecord rec = perfect_number(pe);
        out << std::setw(3) << p << " | " << std::setw(10) << mersenne_number(p) << " | "
            << std::setw(19) << rec.n_value << " | " << (p <= 13 ? "brute " : "sigma ") << "| "
            << (rec.is_verified_perfect ? "perfect" : "NOT PERFECT") << '\n';
    }
    return out.str();
}

} // namespace mtk::cli
