#include "rlematch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rlm {

std::string gen_text(const GenSpec& spec) {
    if (spec.alphabet_size < 2 || spec.alphabet_size > 256)
        throw std::invalid_argument("gen_text: alphabet_size must be in 2..256");
    if (spec.mean_run_length < 1.0)
        throw std::invalid_argument("gen_text: mean run length must be >= 1");

    std::string text;
    text.reserve(spec.length);
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<unsigned> sym(0, spec.alphabet_size - 1);
    // length = 1 + Geometric(p) has mean 1/p.
    double p = std::min(1.0, 1.0 / spec.mean_run_length);
    std::geometric_distribution<std::uint64_t> extra(p);

    int prev = -1;
    while (text.size() < spec.length) {
        unsigned c = sym(rng);
        if (static_cast<int>(c) == prev) c = (c + 1) % spec.alphabet_size;
        prev = static_cast<int>(c);
        std::uint64_t len =
            spec.dist == RunLengthDist::fixed
                ? static_cast<std::uint64_t>(spec.mean_run_length + 0.5)
                : 1 + extra(rng);
        len = std::min<std::uint64_t>(len, spec.length - text.size());
        text.append(len, static_cast<char>(c));
    }
    return text;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TimedSearch {
    MatchSet matches;
    double preprocess_seconds = 0.0;
    double search_seconds = 0.0;
    std::uint64_t transitions = 0;
};

TimedSearch timed_search(Algo algo, std::string_view pattern, std::string_view text,
                         unsigned repetitions) {
    TimedSearch r;
    RunSeq pruns = run_seq_of(pattern);
    bool single = pruns.run_count() < 2;

    // Preprocessing measured once, outside the search timing.
    PatternTables prefix_tables;
    PatternTables reversed_tables;
    if (!single && (algo == Algo::RlShiftAnd || algo == Algo::RlBndm)) {
        auto t0 = Clock::now();
        if (algo == Algo::RlShiftAnd) {
            prefix_tables = build_prefix_tables(pattern);
        } else {
            std::string rev(pattern.rbegin(), pattern.rend());
            reversed_tables = build_prefix_tables(rev);
        }
        r.preprocess_seconds = seconds_since(t0);
    }

    r.search_seconds = 1e300;
    for (unsigned rep = 0; rep < std::max(1u, repetitions); ++rep) {
        SearchStats stats;
        auto t0 = Clock::now();
        MatchSet ms;
        if (single && algo != Algo::ShiftAnd && algo != Algo::Bndm && algo != Algo::Naive) {
            TextRunSource runs(text);
            ms = single_symbol_match(pruns.run(0).symbol, pattern.size(), runs);
        } else {
            switch (algo) {
                case Algo::RlShiftAnd: {
                    TextRunSource runs(text);
                    ms = rl_shift_and(prefix_tables, runs, &stats);
                    break;
                }
                case Algo::RlBndm:
                    ms = rl_bndm(reversed_tables, text, &stats);
                    break;
                case Algo::ShiftAnd:
                    ms = classic_shift_and(pattern, text, &stats);
                    break;
                case Algo::Bndm:
                    ms = classic_bndm(pattern, text);
                    break;
                case Algo::Naive:
                    ms = naive_search(pattern, text);
                    break;
                default:
                    ms = search(pattern, text, algo, &stats);
                    break;
            }
        }
        r.search_seconds = std::min(r.search_seconds, seconds_since(t0));
        r.transitions = stats.transitions;
        r.matches = std::move(ms);
    }
    return r;
}

}  // namespace

std::vector<BenchReport> run_benchmark(const BenchConfig& config) {
    std::vector<BenchReport> reports;
    std::mt19937_64 rng(config.seed);

    for (const GenSpec& tspec : config.texts) {
        std::string text = gen_text(tspec);
        RunSeq truns = run_seq_of(text);
        for (std::uint64_t m : config.pattern_lengths) {
            if (m == 0 || m > text.size())
                throw std::invalid_argument("run_benchmark: bad pattern length");
            std::string pattern;
            if (config.patterns_from_text) {
                std::uniform_int_distribution<std::uint64_t> pos(0, text.size() - m);
                pattern = text.substr(pos(rng), m);
            } else {
                GenSpec pspec = tspec;
                pspec.length = m;
                pspec.seed = rng();
                pattern = gen_text(pspec);
            }
            RunSeq pruns = run_seq_of(pattern);

            std::vector<TimedSearch> results;
            for (Algo algo : config.algorithms)
                results.push_back(timed_search(algo, pattern, text, config.repetitions));

            // Correctness gate: never report timings for wrong answers.
            for (std::size_t i = 1; i < results.size(); ++i) {
                if (results[i].matches != results[0].matches) {
                    std::ostringstream msg;
                    msg << "run_benchmark: match disagreement between "
                        << algo_name(config.algorithms[0]) << " ("
                        << results[0].matches.size() << " matches) and "
                        << algo_name(config.algorithms[i]) << " ("
                        << results[i].matches.size() << " matches)";
                    throw std::runtime_error(msg.str());
                }
            }

            for (std::size_t i = 0; i < results.size(); ++i) {
                BenchReport rep;
                rep.algorithm = algo_name(config.algorithms[i]);
                rep.n = text.size();
                rep.text_runs = truns.run_count();
                rep.m = m;
                rep.rho = pruns.run_count();
                rep.preprocess_seconds = results[i].preprocess_seconds;
                rep.search_seconds = results[i].search_seconds;
                rep.throughput_bps =
                    results[i].search_seconds > 0 ? text.size() / results[i].search_seconds : 0;
                rep.transitions = results[i].transitions;
                rep.matches = results[i].matches.size();
                reports.push_back(std::move(rep));
            }
        }
    }
    return reports;
}

void print_report_table(std::ostream& out, const std::vector<BenchReport>& reports) {
    out << std::left << std::setw(14) << "algorithm" << std::right << std::setw(12) << "n"
        << std::setw(10) << "|rle(T)|" << std::setw(7) << "m" << std::setw(6) << "rho"
        << std::setw(12) << "prep_s" << std::setw(12) << "search_s" << std::setw(14)
        << "MB/s" << std::setw(12) << "trans" << std::setw(10) << "matches" << "\n";
    for (const auto& r : reports) {
        out << std::left << std::setw(14) << r.algorithm << std::right << std::setw(12)
            << r.n << std::setw(10) << r.text_runs << std::setw(7) << r.m << std::setw(6)
            << r.rho << std::setw(12) << std::fixed << std::setprecision(6)
            << r.preprocess_seconds << std::setw(12) << r.search_seconds << std::setw(14)
            << std::setprecision(1) << r.throughput_bps / 1e6 << std::setw(12)
            << r.transitions << std::setw(10) << r.matches << "\n";
    }
}

void print_report_csv(std::ostream& out, const std::vector<BenchReport>& reports) {
    out << std::defaultfloat;
    out << "algorithm,n,text_runs,m,rho,preprocess_seconds,search_seconds,"
           "throughput_bytes_per_second,transitions,matches\n";
    for (const auto& r : reports) {
        out << r.algorithm << ',' << r.n << ',' << r.text_runs << ',' << r.m << ',' << r.rho
            << ',' << std::setprecision(9) << r.preprocess_seconds << ','
            << r.search_seconds << ',' << std::setprecision(12) << r.throughput_bps << ','
            << r.transitions << ',' << r.matches << "\n";
    }
}

}  // namespace rlm
