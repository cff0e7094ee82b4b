#include "rlematch/matchers.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>

namespace rlm {

namespace {

void normalize(MatchSet& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

std::uint8_t at(std::string_view s, std::size_t i) {
    return static_cast<std::uint8_t>(s[i]);
}

}  // namespace

MatchSet rl_shift_and(const PatternTables& t, RunSource& text_runs, SearchStats* stats,
                      std::vector<BitVec>* trace) {
    MatchSet out;
    BitVec d = BitVec::zeros(t.rho);
    std::uint64_t j = 0;  // text length consumed before the current run
    Run r;
    while (text_runs.next(r)) {
        d.shl1(true);
        d &= t.b1_for(r.symbol);
        d &= t.b2_for(r.length);
        if (stats) ++stats->transitions;
        if (trace) trace->push_back(d);
        // Output(j + ell) is one past the occurrence end.
        if (d.test_high()) out.push_back(j + t.ell - t.m);
        j += r.length;
    }
    normalize(out);
    return out;
}

MatchSet rl_bndm(const PatternTables& t, std::string_view text, SearchStats* stats) {
    MatchSet out;
    const std::size_t m = t.m;
    const std::size_t n = text.size();
    if (n < m) return out;

    BitVec d = BitVec::zeros(t.rho);
    std::size_t s = m - 1;
    while (s < n) {
        std::size_t b = s - m + 1;
        // Extend the window to the run boundary of the text.
        while (s + 1 < n && text[s] == text[s + 1]) ++s;
        if (stats) ++stats->windows;

        d.fill_ones();
        std::uint64_t j = 0;
        std::uint64_t k = 1;  // longest useful proper prefix found
        std::size_t hi = s + 1;
        while (hi > b) {
            std::uint8_t c = at(text, hi - 1);
            std::size_t lo = hi - 1;
            while (lo > b && at(text, lo - 1) == c) --lo;
            std::uint64_t l = hi - lo;

            d &= t.b1_for(c);
            d &= t.b2_for(l);
            if (stats) ++stats->transitions;
            if (d.is_zero()) break;
            if (d.test_high()) {
                // Output(s - j - ell) is one before the occurrence start.
                if (j + t.ell >= m)
                    out.push_back(s - j - t.ell + 1);
                else
                    k = j + t.ell;
            }
            d.shl1(false);
            j += l;
            hi = lo;
        }
        s += m - k;
    }
    normalize(out);
    return out;
}

std::vector<std::uint64_t> suffix_prefix_lengths(const SuffixTables& t, std::string_view s) {
    if (s.empty()) throw std::invalid_argument("suffix_prefix_lengths: empty input");
    std::vector<std::uint64_t> out;

    TextRunSource runs(s);
    Run r;
    runs.next(r);

    // Single-symbol suffixes live entirely in the first run: if s[0] equals
    // the pattern's last symbol, lengths 1..min(l_S(0), l_{rho-1}) all match.
    std::uint8_t last_symbol = t.pattern_runs.run(t.rho - 1).symbol;
    if (r.symbol == last_symbol)
        for (std::uint64_t L = 1; L <= std::min(r.length, t.ell); ++L) out.push_back(L);

    BitVec d = t.b1_for(r.symbol) & t.b3_for(r.length);
    std::uint64_t j = r.length;
    while (runs.next(r)) {
        if (d.is_zero()) break;
        d.shl1(false);
        d &= t.b1_for(r.symbol);
        d &= t.b2s_for(r.length);
        if (d.test_high()) out.push_back(j + t.ell);
        j += r.length;
    }
    normalize(out);
    return out;
}

MatchSet single_symbol_match(std::uint8_t symbol, std::uint64_t m, RunSource& text_runs) {
    if (m == 0) throw std::invalid_argument("single_symbol_match: empty pattern");
    MatchSet out;
    std::uint64_t alpha = 0;
    Run r;
    while (text_runs.next(r)) {
        if (r.symbol == symbol && r.length >= m)
            for (std::uint64_t p = alpha; p <= alpha + r.length - m; ++p) out.push_back(p);
        alpha += r.length;
    }
    return out;
}

MatchSet classic_shift_and(std::string_view pattern, std::string_view text,
                           SearchStats* stats) {
    if (pattern.empty()) throw std::invalid_argument("classic_shift_and: empty pattern");
    const std::size_t m = pattern.size();
    MatchSet out;

    std::vector<BitVec> b(256, BitVec::zeros(m));
    for (std::size_t i = 0; i < m; ++i) b[at(pattern, i)].set_bit(i);

    BitVec d = BitVec::zeros(m);
    for (std::size_t j = 0; j < text.size(); ++j) {
        d.shl1(true);
        d &= b[at(text, j)];
        if (stats) ++stats->transitions;
        if (d.test_high()) out.push_back(j - m + 1);
    }
    return out;
}

MatchSet classic_bndm(std::string_view pattern, std::string_view text) {
    if (pattern.empty()) throw std::invalid_argument("classic_bndm: empty pattern");
    const std::size_t m = pattern.size();
    const std::size_t n = text.size();
    MatchSet out;
    if (n < m) return out;

    // Masks for the reversed pattern: bit i selects pattern[m-1-i].
    std::vector<BitVec> b(256, BitVec::zeros(m));
    for (std::size_t i = 0; i < m; ++i) b[at(pattern, m - 1 - i)].set_bit(i);

    BitVec d = BitVec::zeros(m);
    std::size_t pos = 0;
    while (pos + m <= n) {
        std::size_t i = m;
        std::size_t last = m;
        d.fill_ones();
        while (i > 0 && !d.is_zero()) {
            d &= b[at(text, pos + i - 1)];
            --i;
            if (d.test_high()) {
                if (i > 0)
                    last = i;  // proper prefix of length m - i ends the window
                else
                    out.push_back(pos);
            }
            d.shl1(false);
        }
        pos += last;
    }
    return out;
}

MatchSet naive_search(std::string_view pattern, std::string_view text) {
    if (pattern.empty()) throw std::invalid_argument("naive_search: empty pattern");
    MatchSet out;
    if (text.size() < pattern.size()) return out;
    for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p)
        if (text.compare(p, pattern.size(), pattern) == 0) out.push_back(p);
    return out;
}

MatchSet search(std::string_view pattern, std::string_view text, Algo algo,
                SearchStats* stats) {
    if (pattern.empty()) throw std::invalid_argument("search: empty pattern");
    RunSeq pruns = run_seq_of(pattern);

    // rho == 1 patterns fall back to the single-symbol matcher for every
    // run-wise selection; the classic algorithms handle them natively.
    if (pruns.run_count() < 2 &&
        (algo == Algo::Auto || algo == Algo::RlShiftAnd || algo == Algo::RlBndm)) {
        TextRunSource runs(text);
        return single_symbol_match(pruns.run(0).symbol, pattern.size(), runs);
    }

    if (algo == Algo::Auto) {
        std::size_t words = (pruns.run_count() + kWordBits - 1) / kWordBits;
        algo = (pattern.size() >= 2 && words <= kAutoRleWordBudget) ? Algo::RlBndm
                                                                    : Algo::ShiftAnd;
    }
    switch (algo) {
        case Algo::RlShiftAnd: {
            PatternTables t = build_prefix_tables(pattern);
            TextRunSource runs(text);
            return rl_shift_and(t, runs, stats);
        }
        case Algo::RlBndm: {
            std::string rev(pattern.rbegin(), pattern.rend());
            PatternTables t = build_prefix_tables(rev);
            return rl_bndm(t, text, stats);
        }
        case Algo::ShiftAnd:
            return classic_shift_and(pattern, text, stats);
        case Algo::Bndm:
            return classic_bndm(pattern, text);
        case Algo::Naive:
            return naive_search(pattern, text);
        default:
            throw std::invalid_argument("search: bad algorithm");
    }
}

MatchSet search_rle(std::string_view pattern, std::istream& rle_input, Algo algo,
                    SearchStats* stats) {
    if (pattern.empty()) throw std::invalid_argument("search: empty pattern");
    if (algo != Algo::Auto && algo != Algo::RlShiftAnd)
        throw std::invalid_argument(
            "search: this algorithm needs random-access text, not an RLE stream");
    RunSeq pruns = run_seq_of(pattern);
    RleReader runs(rle_input);
    if (pruns.run_count() < 2)
        return single_symbol_match(pruns.run(0).symbol, pattern.size(), runs);
    PatternTables t = build_prefix_tables(pattern);
    return rl_shift_and(t, runs, stats);
}

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Auto: return "auto";
        case Algo::RlShiftAnd: return "rl-shift-and";
        case Algo::RlBndm: return "rl-bndm";
        case Algo::ShiftAnd: return "shift-and";
        case Algo::Bndm: return "bndm";
        case Algo::Naive: return "naive";
    }
    return "?";
}

bool parse_algo(std::string_view name, Algo& out) {
    for (Algo a : {Algo::Auto, Algo::RlShiftAnd, Algo::RlBndm, Algo::ShiftAnd, Algo::Bndm,
                   Algo::Naive}) {
        if (name == algo_name(a)) {
            out = a;
            return true;
        }
    }
    return false;
}

}  // namespace rlm
