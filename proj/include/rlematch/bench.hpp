#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rlematch/matchers.hpp"

namespace rlm {

enum class RunLengthDist { geometric, fixed };

struct GenSpec {
    unsigned alphabet_size = 2;     // 2..256
    std::uint64_t length = 0;       // bytes
    double mean_run_length = 1.0;   // >= 1
    RunLengthDist dist = RunLengthDist::geometric;
    std::uint64_t seed = 0;
};

// Deterministic for a fixed seed; adjacent runs carry distinct symbols.
std::string gen_text(const GenSpec& spec);

struct BenchReport {
    std::string algorithm;
    std::uint64_t n = 0;           // text length
    std::uint64_t text_runs = 0;   // |rle(T)|
    std::uint64_t m = 0;           // pattern length
    std::uint64_t rho = 0;         // pattern run count
    double preprocess_seconds = 0.0;
    double search_seconds = 0.0;
    double throughput_bps = 0.0;   // bytes per second through the search call
    std::uint64_t transitions = 0; // 0 when the algorithm is not instrumented
    std::uint64_t matches = 0;
};

struct BenchConfig {
    std::vector<GenSpec> texts;
    std::vector<std::uint64_t> pattern_lengths;
    std::vector<Algo> algorithms;
    std::uint64_t seed = 0;         // pattern sampling
    unsigned repetitions = 3;       // search_seconds is the minimum over these
    bool patterns_from_text = true; // sample patterns as substrings of the text
};

// One report per (text, pattern, algorithm). Match counts are compared
// across algorithms before any timing is reported; a disagreement throws.
std::vector<BenchReport> run_benchmark(const BenchConfig& config);

void print_report_table(std::ostream& out, const std::vector<BenchReport>& reports);
void print_report_csv(std::ostream& out, const std::vector<BenchReport>& reports);

}  // namespace rlm
