#include "rlematch/rle.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace rlm {

bool TextRunSource::next(Run& r) {
    if (pos_ >= text_.size()) return false;
    std::uint8_t c = static_cast<std::uint8_t>(text_[pos_]);
    std::size_t j = pos_ + 1;
    while (j < text_.size() && static_cast<std::uint8_t>(text_[j]) == c) ++j;
    r = {c, static_cast<std::uint64_t>(j - pos_)};
    pos_ = j;
    return true;
}

namespace {

void write_varint(std::ostream& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.put(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.put(static_cast<char>(v));
}

std::uint64_t read_varint(std::istream& in) {
    std::uint64_t v = 0;
    int shift = 0;
    for (;;) {
        int b = in.get();
        if (b == std::char_traits<char>::eof())
            throw RleDecodeError(RleCodecError::truncated_varint, "rle: truncated varint");
        std::uint64_t chunk = static_cast<std::uint64_t>(b & 0x7f);
        if (shift >= 64 || (shift == 63 && chunk > 1))
            throw RleDecodeError(RleCodecError::length_overflow,
                                 "rle: run length overflows 64 bits");
        v |= chunk << shift;
        if ((b & 0x80) == 0) return v;
        shift += 7;
    }
}

}  // namespace

RleReader::RleReader(std::istream& in) : in_(in) {
    char magic[4];
    in_.read(magic, 4);
    if (in_.gcount() != 4 || magic[0] != kRleMagic[0] || magic[1] != kRleMagic[1] ||
        magic[2] != kRleMagic[2] || magic[3] != kRleMagic[3])
        throw RleDecodeError(RleCodecError::bad_magic, "rle: bad magic (expected RLE1)");
}

bool RleReader::next(Run& r) {
    int c = in_.get();
    if (c == std::char_traits<char>::eof()) return false;
    std::uint8_t symbol = static_cast<std::uint8_t>(c);
    std::uint64_t length = read_varint(in_);
    if (length == 0)
        throw RleDecodeError(RleCodecError::zero_length_run, "rle: zero-length run");
    if (have_prev_ && symbol == prev_symbol_)
        throw RleDecodeError(RleCodecError::adjacent_equal_symbols,
                             "rle: adjacent runs with equal symbols");
    have_prev_ = true;
    prev_symbol_ = symbol;
    r = {symbol, length};
    return true;
}

RleWriter::RleWriter(std::ostream& out) : out_(out) {
    out_.write(kRleMagic, 4);
}

void RleWriter::write(Run r) {
    if (r.length == 0) throw std::invalid_argument("rle: zero-length run");
    if (have_prev_ && r.symbol == prev_symbol_)
        throw std::invalid_argument("rle: adjacent runs with equal symbols");
    have_prev_ = true;
    prev_symbol_ = r.symbol;
    out_.put(static_cast<char>(r.symbol));
    write_varint(out_, r.length);
}

void rle_encode_stream(std::istream& in, std::ostream& out) {
    RleWriter writer(out);
    bool have_run = false;
    std::uint8_t cur = 0;
    std::uint64_t len = 0;
    char buf[1 << 16];
    for (;;) {
        in.read(buf, sizeof buf);
        std::streamsize n = in.gcount();
        if (n <= 0) break;
        for (std::streamsize i = 0; i < n; ++i) {
            std::uint8_t c = static_cast<std::uint8_t>(buf[i]);
            if (have_run && c == cur) {
                ++len;
            } else {
                if (have_run) writer.write({cur, len});
                cur = c;
                len = 1;
                have_run = true;
            }
        }
    }
    if (have_run) writer.write({cur, len});
}

void rle_decode_stream(std::istream& in, std::ostream& out) {
    RleReader reader(in);
    Run r;
    char buf[1 << 16];
    while (reader.next(r)) {
        std::fill(buf, buf + std::min<std::uint64_t>(r.length, sizeof buf),
                  static_cast<char>(r.symbol));
        std::uint64_t left = r.length;
        while (left > 0) {
            std::uint64_t chunk = std::min<std::uint64_t>(left, sizeof buf);
            out.write(buf, static_cast<std::streamsize>(chunk));
            left -= chunk;
        }
    }
}

}  // namespace rlm
