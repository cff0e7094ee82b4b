// rlematch: grep-like exact search over raw or RLE1-encoded byte streams,
// plus encode/decode/stats/bench front ends for the library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlematch/bench.hpp"
#include "rlematch/matchers.hpp"
#include "rlematch/rle.hpp"
#include "rlematch/tables.hpp"

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitError = 2;

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_all(f);
}

struct SearchOptions {
    std::string pattern;
    std::string pattern_file;
    std::string algo = "auto";
    bool rle = false;
    bool count = false;
    bool quiet = false;
    std::vector<std::string> files;
};

int run_search(const SearchOptions& opt) {
    std::string pattern = opt.pattern;
    if (!opt.pattern_file.empty()) pattern = read_file(opt.pattern_file);
    if (pattern.empty()) throw std::runtime_error("empty pattern");

    rlm::Algo algo;
    if (!rlm::parse_algo(opt.algo, algo))
        throw std::runtime_error("unknown algorithm: " + opt.algo);

    std::vector<std::string> files = opt.files;
    if (files.empty()) files.push_back("-");
    bool prefix_names = files.size() > 1;

    std::uint64_t total_matches = 0;
    for (const auto& path : files) {
        rlm::MatchSet matches;
        bool streamable = algo == rlm::Algo::Auto || algo == rlm::Algo::RlShiftAnd;
        if (opt.rle && streamable && path != "-") {
            std::ifstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + path);
            matches = rlm::search_rle(pattern, f, algo);
        } else if (opt.rle) {
            // Random-access algorithms run on the decoded text; offsets
            // refer to decoded coordinates either way.
            std::string encoded = read_file(path);
            std::istringstream in(encoded, std::ios::binary);
            std::ostringstream decoded(std::ios::binary);
            rlm::rle_decode_stream(in, decoded);
            matches = rlm::search(pattern, decoded.str(), algo);
        } else {
            matches = rlm::search(pattern, read_file(path), algo);
        }

        total_matches += matches.size();
        if (!opt.quiet && !opt.count) {
            for (auto p : matches) {
                if (prefix_names) std::cout << path << ':';
                std::cout << p << '\n';
            }
        }
        if (opt.count) {
            if (prefix_names)
                std::cout << path << ':' << matches.size() << '\n';
            else
                std::cout << matches.size() << '\n';
        }
    }
    return total_matches > 0 ? kExitMatch : kExitNoMatch;
}

int run_codec(const std::string& in_path, const std::string& out_path, bool encode) {
    std::ifstream fin;
    std::ofstream fout;
    std::istream* in = &std::cin;
    std::ostream* out = &std::cout;
    if (in_path != "-") {
        fin.open(in_path, std::ios::binary);
        if (!fin) throw std::runtime_error("cannot open " + in_path);
        in = &fin;
    }
    if (out_path != "-") {
        fout.open(out_path, std::ios::binary | std::ios::trunc);
        if (!fout) throw std::runtime_error("cannot open " + out_path);
        out = &fout;
    }
    if (encode)
        rlm::rle_encode_stream(*in, *out);
    else
        rlm::rle_decode_stream(*in, *out);
    out->flush();
    return kExitMatch;
}

int run_stats(const std::string& pattern) {
    if (pattern.empty()) throw std::runtime_error("empty pattern");
    rlm::RunSeq runs = rlm::run_seq_of(pattern);
    std::size_t rho = runs.run_count();
    std::size_t words = (rho + rlm::kWordBits - 1) / rlm::kWordBits;
    std::cout << "m: " << pattern.size() << "\n";
    std::cout << "rho: " << rho << "\n";
    std::cout << "words_per_row: " << words << "\n";
    if (rho < 2) {
        std::cout << "note: single distinct symbol; the single-symbol fallback matcher "
                     "applies, no tables are built\n";
        std::cout << "table_bytes: 0\n";
    } else {
        // 256 b1 rows plus m+1 b2 rows of ceil(rho/w) words each.
        std::size_t rows = 256 + pattern.size() + 1;
        std::cout << "table_bytes: " << rows * words * sizeof(std::uint64_t) << "\n";
    }
    return kExitMatch;
}

struct BenchOptions {
    unsigned sigma = 2;
    std::uint64_t length = 1 << 20;
    double mean_run = 8.0;
    std::uint64_t seed = 1;
    std::uint64_t pattern_length = 64;
    unsigned repetitions = 3;
    bool csv = false;
};

int run_bench(const BenchOptions& opt) {
    rlm::BenchConfig config;
    rlm::GenSpec spec;
    spec.alphabet_size = opt.sigma;
    spec.length = opt.length;
    spec.mean_run_length = opt.mean_run;
    spec.seed = opt.seed;
    config.texts.push_back(spec);
    config.pattern_lengths.push_back(opt.pattern_length);
    config.algorithms = {rlm::Algo::RlShiftAnd, rlm::Algo::RlBndm, rlm::Algo::ShiftAnd,
                         rlm::Algo::Bndm};
    config.seed = opt.seed ^ 0x9e3779b97f4a7c15ULL;
    config.repetitions = opt.repetitions;
    auto reports = rlm::run_benchmark(config);
    if (opt.csv)
        rlm::print_report_csv(std::cout, reports);
    else
        rlm::print_report_table(std::cout, reports);
    return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"run-length encoded bit-parallel exact string matching"};
    app.require_subcommand(1);

    SearchOptions sopt;
    auto* search = app.add_subcommand("search", "search for a pattern, print 0-based offsets");
    search->add_option("-p,--pattern", sopt.pattern, "pattern (binary-safe literal)");
    search->add_option("-f,--pattern-file", sopt.pattern_file, "read the pattern from a file");
    search->add_option("--algo", sopt.algo,
                       "auto|rl-shift-and|rl-bndm|shift-and|bndm|naive")
        ->default_str("auto");
    search->add_flag("--rle", sopt.rle, "inputs are RLE1-encoded; offsets refer to decoded text");
    auto* count_flag = search->add_flag("--count", sopt.count, "print only the match count");
    search->add_flag("--quiet", sopt.quiet, "no output, exit status only")
        ->excludes(count_flag);
    search->add_option("files", sopt.files, "input files ('-' for stdin)");

    std::string enc_in, enc_out, dec_in, dec_out;
    auto* encode = app.add_subcommand("encode", "encode raw bytes to RLE1");
    encode->add_option("input", enc_in, "input file or '-'")->required();
    encode->add_option("output", enc_out, "output file or '-'")->required();
    auto* decode = app.add_subcommand("decode", "decode RLE1 to raw bytes");
    decode->add_option("input", dec_in, "input file or '-'")->required();
    decode->add_option("output", dec_out, "output file or '-'")->required();

    std::string stats_pattern;
    auto* stats = app.add_subcommand("stats", "pattern statistics and table footprint");
    stats->add_option("-p,--pattern", stats_pattern, "pattern")->required();

    BenchOptions bopt;
    auto* bench = app.add_subcommand("bench", "benchmark the matchers on generated text");
    bench->add_option("--sigma", bopt.sigma, "alphabet size");
    bench->add_option("--length", bopt.length, "text length in bytes");
    bench->add_option("--mean-run", bopt.mean_run, "mean run length (geometric)");
    bench->add_option("--seed", bopt.seed, "RNG seed");
    bench->add_option("--pattern-length", bopt.pattern_length, "pattern length (sampled from text)");
    bench->add_option("--reps", bopt.repetitions, "repetitions per measurement");
    bench->add_flag("--csv", bopt.csv, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (search->parsed()) return run_search(sopt);
        if (encode->parsed()) return run_codec(enc_in, enc_out, true);
        if (decode->parsed()) return run_codec(dec_in, dec_out, false);
        if (stats->parsed()) return run_stats(stats_pattern);
        if (bench->parsed()) return run_bench(bopt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "rlematch: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
