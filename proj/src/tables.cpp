#include "rlematch/tables.hpp"

#include <stdexcept>

namespace rlm {

namespace {

RunSeq checked_runs(std::string_view pattern) {
    if (pattern.empty()) throw std::invalid_argument("tables: empty pattern");
    RunSeq rs = run_seq_of(pattern);
    if (rs.run_count() < 2)
        throw std::invalid_argument(
            "tables: pattern has a single distinct symbol (use the single-symbol matcher)");
    return rs;
}

std::vector<BitVec> zero_rows(std::size_t count, std::size_t width) {
    return std::vector<BitVec>(count, BitVec::zeros(width));
}

}  // namespace

PatternTables build_prefix_tables(std::string_view pattern) {
    PatternTables t;
    t.pattern_runs = checked_runs(pattern);
    t.rho = t.pattern_runs.run_count();
    t.m = pattern.size();

    t.b1 = zero_rows(256, t.rho);
    t.b2 = zero_rows(t.m + 2, t.rho);

    for (std::size_t i = 0; i < t.rho; ++i) {
        const Run& r = t.pattern_runs.run(i);
        t.b1[r.symbol].set_bit(i);
        if (i == 0 || i == t.rho - 1) {
            t.ell = r.length;
            for (std::uint64_t j = r.length; j <= t.m + 1; ++j) t.b2[j].set_bit(i);
        } else {
            t.b2[r.length].set_bit(i);
        }
    }
    return t;
}

SuffixTables build_suffix_tables(std::string_view pattern) {
    SuffixTables t;
    t.pattern_runs = checked_runs(pattern);
    t.rho = t.pattern_runs.run_count();
    t.m = pattern.size();
    t.ell = t.pattern_runs.run(t.rho - 1).length;

    t.b1 = zero_rows(256, t.rho);
    t.b2s = zero_rows(t.m + 2, t.rho);
    t.b3 = zero_rows(t.m + 2, t.rho);

    for (std::size_t i = 0; i < t.rho; ++i) {
        const Run& r = t.pattern_runs.run(i);
        t.b1[r.symbol].set_bit(i);
        // b2s: >= semantics at the last run only; no self-loop on q_0.
        if (i == t.rho - 1) {
            for (std::uint64_t j = r.length; j <= t.m + 1; ++j) t.b2s[j].set_bit(i);
        } else {
            t.b2s[r.length].set_bit(i);
        }
        // b3: l <= l_{i-1}, with the last run's bit set for every l.
        std::uint64_t upper = (i == t.rho - 1) ? t.m + 1 : r.length;
        for (std::uint64_t j = 1; j <= upper; ++j) t.b3[j].set_bit(i);
    }
    return t;
}

}  // namespace rlm
