#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "rlematch/rle.hpp"
#include "rlematch/tables.hpp"

namespace rlm {

// Sorted, deduplicated 0-based occurrence start positions.
using MatchSet = std::vector<std::uint64_t>;

struct SearchStats {
    std::uint64_t transitions = 0;
    std::uint64_t windows = 0;
};

enum class Algo {
    Auto,
    RlShiftAnd,
    RlBndm,
    ShiftAnd,
    Bndm,
    Naive,
};

// Run-wise Shift-And over the prefix automaton: one transition per text run.
// The optional trace collects the configuration after each transition.
MatchSet rl_shift_and(const PatternTables& tables, RunSource& text_runs,
                      SearchStats* stats = nullptr, std::vector<BitVec>* trace = nullptr);

// Run-wise BNDM; tables must be built from the REVERSED pattern. Windows
// extend to the next run boundary of the text.
MatchSet rl_bndm(const PatternTables& reversed_tables, std::string_view text,
                 SearchStats* stats = nullptr);

// Lengths L >= 1 such that s[0..L-1] is a suffix of the pattern the tables
// were built from. Sorted ascending.
std::vector<std::uint64_t> suffix_prefix_lengths(const SuffixTables& tables,
                                                 std::string_view s);

// rho == 1 fallback: occurrences of symbol^m.
MatchSet single_symbol_match(std::uint8_t symbol, std::uint64_t m, RunSource& text_runs);

// Classic bit-parallel baselines over multi-word m-bit vectors.
MatchSet classic_shift_and(std::string_view pattern, std::string_view text,
                           SearchStats* stats = nullptr);
MatchSet classic_bndm(std::string_view pattern, std::string_view text);

// Ground truth for all equivalence tests.
MatchSet naive_search(std::string_view pattern, std::string_view text);

// Dispatcher over in-memory text. Auto picks the single-symbol matcher for
// one-distinct-symbol patterns, rl_bndm when the pattern's run count fits
// the word budget, classic Shift-And otherwise.
MatchSet search(std::string_view pattern, std::string_view text, Algo algo = Algo::Auto,
                SearchStats* stats = nullptr);

// Dispatcher over an RLE1-encoded stream. Only run-wise algorithms are
// available (Auto and RlShiftAnd); anything needing random access throws.
MatchSet search_rle(std::string_view pattern, std::istream& rle_input,
                    Algo algo = Algo::Auto, SearchStats* stats = nullptr);

// Runs fitting this many machine words qualify a pattern for rl_bndm under
// Auto dispatch.
inline constexpr std::size_t kAutoRleWordBudget = 4;

const char* algo_name(Algo a);
bool parse_algo(std::string_view name, Algo& out);

}  // namespace rlm
