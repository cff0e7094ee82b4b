#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "rlematch/rle.hpp"

using namespace rlm;

namespace {

std::vector<Run> collect_runs(std::string_view text) {
    std::vector<Run> out;
    for_each_run(text, [&](Run r) { out.push_back(r); });
    return out;
}

std::string random_string(std::mt19937_64& rng, std::size_t len, unsigned sigma) {
    std::string s(len, '\0');
    for (auto& c : s) c = static_cast<char>(rng() % sigma);
    return s;
}

std::string encode(const std::string& raw) {
    std::istringstream in(raw);
    std::ostringstream out;
    rle_encode_stream(in, out);
    return out.str();
}

std::string decode(const std::string& enc) {
    std::istringstream in(enc);
    std::ostringstream out;
    rle_decode_stream(in, out);
    return out.str();
}

}  // namespace

TEST_CASE("runs_of on the worked examples") {
    auto runs = collect_runs("cttcct");
    REQUIRE(runs.size() == 4);
    CHECK(runs[0] == Run{'c', 1});
    CHECK(runs[1] == Run{'t', 2});
    CHECK(runs[2] == Run{'c', 2});
    CHECK(runs[3] == Run{'t', 1});

    auto truns = collect_runs("cttccttcct");
    REQUIRE(truns.size() == 6);
    CHECK(truns[5] == Run{'t', 1});

    CHECK(collect_runs("").empty());
}

TEST_CASE("run coordinates") {
    RunSeq rs = run_seq_of("cttcct");
    CHECK(rs.coords(2).alpha == 3);
    CHECK(rs.coords(2).beta == 4);
    CHECK(rs.coords(2).ell == 2);
    CHECK(rs.coords(0).alpha == 0);
    CHECK(rs.coords(rs.run_count()).alpha == 6);  // alpha(rho) == |P|
    CHECK_THROWS_AS(rs.coords(5), std::out_of_range);

    // alpha(i) for the paper's S
    RunSeq ss = run_seq_of("cttccttcct");
    std::vector<std::uint64_t> alphas;
    for (std::size_t i = 0; i <= ss.run_count(); ++i) alphas.push_back(ss.coords(i).alpha);
    CHECK(alphas == std::vector<std::uint64_t>{0, 1, 3, 5, 7, 9, 10});
}

TEST_CASE("reversed-window runs") {
    std::vector<Run> out;
    for_each_run_reversed_window("cttccttcct", 0, 6, [&](Run r) { out.push_back(r); });
    CHECK(out == std::vector<Run>{{'t', 2}, {'c', 2}, {'t', 2}, {'c', 1}});

    out.clear();
    for_each_run_reversed_window("cttccttcct", 4, 9, [&](Run r) { out.push_back(r); });
    CHECK(out == std::vector<Run>{{'t', 1}, {'c', 2}, {'t', 2}, {'c', 1}});

    out.clear();
    for_each_run_reversed_window("abc", 1, 1, [&](Run r) { out.push_back(r); });
    CHECK(out == std::vector<Run>{{'b', 1}});

    CHECK_THROWS_AS(for_each_run_reversed_window("abc", 2, 1, [](Run) {}),
                    std::out_of_range);
}

TEST_CASE("reversed-window equals naive reversal, random") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 500; ++iter) {
        std::string t = random_string(rng, 1 + rng() % 200, 2 + rng() % 3);
        std::size_t s = rng() % t.size();
        std::size_t b = rng() % (s + 1);
        std::string rev(t.rbegin() + (t.size() - 1 - s), t.rbegin() + (t.size() - b));
        auto expected = collect_runs(rev);
        std::vector<Run> got;
        for_each_run_reversed_window(t, b, s, [&](Run r) { got.push_back(r); });
        REQUIRE(got == expected);
    }
}

TEST_CASE("run decomposition properties, random") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 500; ++iter) {
        std::string t = random_string(rng, rng() % 300, 1 + rng() % 255);
        auto runs = collect_runs(t);
        std::string rebuilt;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            REQUIRE(runs[i].length >= 1);
            if (i > 0) REQUIRE(runs[i].symbol != runs[i - 1].symbol);
            rebuilt.append(runs[i].length, static_cast<char>(runs[i].symbol));
            total += runs[i].length;
        }
        REQUIRE(rebuilt == t);
        REQUIRE(total == t.size());
    }
}

TEST_CASE("codec examples") {
    CHECK(encode("") == "RLE1");
    CHECK(encode("cttcct") == std::string("RLE1") + "c\x01" + "t\x02" + "c\x02" + "t\x01");
    CHECK(decode(encode("cttcct")) == "cttcct");
}

TEST_CASE("codec round trip, random") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 300; ++iter) {
        std::string t = random_string(rng, rng() % 10000, 1 + rng() % 256);
        REQUIRE(decode(encode(t)) == t);
    }
    // long runs exercise multi-byte varints
    std::string longrun(100000, 'x');
    std::string enc = encode(longrun);
    CHECK(enc.size() < 10 + 4);
    CHECK(decode(enc) == longrun);
}

TEST_CASE("malformed streams raise their designated errors") {
    auto code_of = [](const std::string& enc) {
        try {
            decode(enc);
        } catch (const RleDecodeError& e) {
            return e.code();
        }
        throw std::runtime_error("expected RleDecodeError");
    };

    CHECK(code_of("RLX1") == RleCodecError::bad_magic);
    CHECK(code_of("RL") == RleCodecError::bad_magic);
    CHECK(code_of(std::string("RLE1") + "a") == RleCodecError::truncated_varint);
    CHECK(code_of(std::string("RLE1") + "a\x83") == RleCodecError::truncated_varint);
    CHECK(code_of(std::string("RLE1") + std::string("a\x00", 2)) ==
          RleCodecError::zero_length_run);
    CHECK(code_of(std::string("RLE1") + "a\x01" + "a\x02") ==
          RleCodecError::adjacent_equal_symbols);
    // 10-byte varint with bits above position 63
    std::string big = std::string("RLE1") + "a";
    for (int i = 0; i < 9; ++i) big += '\xff';
    big += '\x7f';
    CHECK(code_of(big) == RleCodecError::length_overflow);
}
