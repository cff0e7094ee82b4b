#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rlm {

// One maximal run: (c_i, l_i).
struct Run {
    std::uint8_t symbol;
    std::uint64_t length;
};

inline bool operator==(const Run& a, const Run& b) {
    return a.symbol == b.symbol && a.length == b.length;
}

struct RunCoords {
    std::uint64_t alpha;  // start position of the run
    std::uint64_t beta;   // end position (inclusive)
    std::uint64_t ell;    // run length
};

// Materialized run decomposition with prefix sums of run lengths.
// starts has run_count()+1 entries; starts.back() == total_length().
class RunSeq {
public:
    RunSeq() : starts_{0} {}

    void append(std::uint8_t symbol, std::uint64_t length) {
        if (length == 0) throw std::invalid_argument("RunSeq: zero-length run");
        if (!runs_.empty() && runs_.back().symbol == symbol)
            throw std::invalid_argument("RunSeq: adjacent runs with equal symbols");
        runs_.push_back({symbol, length});
        starts_.push_back(starts_.back() + length);
    }

    std::size_t run_count() const { return runs_.size(); }
    std::uint64_t total_length() const { return starts_.back(); }
    const Run& run(std::size_t i) const { return runs_[i]; }
    const std::vector<Run>& runs() const { return runs_; }

    // alpha/beta/ell of run i. For i == run_count() only alpha is defined
    // (alpha == total_length); beta and ell are returned as zero.
    RunCoords coords(std::size_t i) const {
        if (i > runs_.size()) throw std::out_of_range("RunSeq::coords: run index out of range");
        if (i == runs_.size()) return {starts_[i], 0, 0};
        return {starts_[i], starts_[i + 1] - 1, runs_[i].length};
    }

private:
    std::vector<Run> runs_;
    std::vector<std::uint64_t> starts_;
};

// Single left-to-right pass, constant extra memory.
template <class Fn>
void for_each_run(std::string_view text, Fn&& fn) {
    std::size_t i = 0;
    while (i < text.size()) {
        std::uint8_t c = static_cast<std::uint8_t>(text[i]);
        std::size_t j = i + 1;
        while (j < text.size() && static_cast<std::uint8_t>(text[j]) == c) ++j;
        fn(Run{c, static_cast<std::uint64_t>(j - i)});
        i = j;
    }
}

// Runs of reverse(text[b..s]), scanning right to left without
// materializing the reversed substring. Requires b <= s < |text|.
template <class Fn>
void for_each_run_reversed_window(std::string_view text, std::size_t b, std::size_t s, Fn&& fn) {
    if (b > s || s >= text.size())
        throw std::out_of_range("for_each_run_reversed_window: bad window");
    std::size_t hi = s + 1;  // exclusive
    while (hi > b) {
        std::uint8_t c = static_cast<std::uint8_t>(text[hi - 1]);
        std::size_t lo = hi - 1;
        while (lo > b && static_cast<std::uint8_t>(text[lo - 1]) == c) --lo;
        fn(Run{c, static_cast<std::uint64_t>(hi - lo)});
        hi = lo;
    }
}

inline RunSeq run_seq_of(std::string_view text) {
    RunSeq rs;
    for_each_run(text, [&](Run r) { rs.append(r.symbol, r.length); });
    return rs;
}

// Single-consumer run stream, the input side of the run-wise matchers.
class RunSource {
public:
    virtual ~RunSource() = default;
    // Fills r and returns true, or returns false at end of stream.
    virtual bool next(Run& r) = 0;
};

// On-the-fly decomposition of an in-memory text.
class TextRunSource : public RunSource {
public:
    explicit TextRunSource(std::string_view text) : text_(text) {}
    bool next(Run& r) override;

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// --- RLE1 file codec -------------------------------------------------------
//
// Format: 4 magic bytes "RLE1", then records of one symbol byte followed by
// the run length as an unsigned LEB128 varint. Adjacent records must carry
// distinct symbols and nonzero lengths.

enum class RleCodecError {
    bad_magic,
    truncated_varint,
    zero_length_run,
    adjacent_equal_symbols,
    length_overflow,
};

class RleDecodeError : public std::runtime_error {
public:
    RleDecodeError(RleCodecError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    RleCodecError code() const { return code_; }

private:
    RleCodecError code_;
};

inline constexpr char kRleMagic[4] = {'R', 'L', 'E', '1'};

// Validating record reader; throws RleDecodeError on malformed input.
class RleReader : public RunSource {
public:
    explicit RleReader(std::istream& in);
    bool next(Run& r) override;

private:
    std::istream& in_;
    bool have_prev_ = false;
    std::uint8_t prev_symbol_ = 0;
};

class RleWriter {
public:
    explicit RleWriter(std::ostream& out);
    void write(Run r);

private:
    std::ostream& out_;
    bool have_prev_ = false;
    std::uint8_t prev_symbol_ = 0;
};

// Streaming codec over raw bytes; bounded memory.
void rle_encode_stream(std::istream& in, std::ostream& out);
void rle_decode_stream(std::istream& in, std::ostream& out);

}  // namespace rlm
