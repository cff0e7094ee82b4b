#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rlematch/bitvec.hpp"
#include "rlematch/rle.hpp"

namespace rlm {

// Preprocessed masks for the run-wise prefix-automaton simulation.
// Bit i-1 of a row corresponds to 1-based run index i (run i-1, 0-based).
//
// b1[c]: runs whose symbol is c.
// b2[l]: runs whose length equals l, with >= semantics for the first and
//        last run; rows for l > m all equal the row at m+1, lookups clamp.
struct PatternTables {
    std::vector<BitVec> b1;  // 256 rows of width rho
    std::vector<BitVec> b2;  // indexed 1..m+1 ([0] unused)
    std::size_t rho = 0;
    std::uint64_t ell = 0;  // length of the last run
    std::size_t m = 0;
    RunSeq pattern_runs;

    const BitVec& b1_for(std::uint8_t c) const { return b1[c]; }
    const BitVec& b2_for(std::uint64_t l) const { return b2[l > m ? m + 1 : l]; }
};

// Masks for the suffix automaton. b2s is b2 with >= semantics only at the
// last run (the first run uses equality). b3 drives the first transition:
// bit i-1 of b3[l] is set iff l <= l_{i-1}, and bit rho-1 is always set.
struct SuffixTables {
    std::vector<BitVec> b1;
    std::vector<BitVec> b2s;
    std::vector<BitVec> b3;
    std::size_t rho = 0;
    std::uint64_t ell = 0;
    std::size_t m = 0;
    RunSeq pattern_runs;

    const BitVec& b1_for(std::uint8_t c) const { return b1[c]; }
    const BitVec& b2s_for(std::uint64_t l) const { return b2s[l > m ? m + 1 : l]; }
    const BitVec& b3_for(std::uint64_t l) const { return b3[l > m ? m + 1 : l]; }
};

// Both builders reject empty patterns and patterns with a single distinct
// symbol (rho < 2); callers must route those to the single-symbol matcher.
PatternTables build_prefix_tables(std::string_view pattern);
SuffixTables build_suffix_tables(std::string_view pattern);

}  // namespace rlm
