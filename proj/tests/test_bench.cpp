#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rlematch/bench.hpp"
#include "rlematch/rle.hpp"

using namespace rlm;

TEST_CASE("gen_text basics") {
    GenSpec spec;
    spec.alphabet_size = 2;
    spec.length = 0;
    CHECK(gen_text(spec).empty());

    spec.length = 5000;
    spec.seed = 42;
    CHECK(gen_text(spec) == gen_text(spec));  // determinism

    GenSpec other = spec;
    other.seed = 43;
    CHECK(gen_text(spec) != gen_text(other));

    CHECK_THROWS_AS(gen_text(GenSpec{1, 10, 2.0, RunLengthDist::geometric, 0}),
                    std::invalid_argument);
}

TEST_CASE("gen_text run-length statistics") {
    GenSpec spec;
    spec.alphabet_size = 4;
    spec.length = 100000;
    spec.mean_run_length = 8.0;
    spec.seed = 42;
    std::string text = gen_text(spec);
    REQUIRE(text.size() == spec.length);
    RunSeq runs = run_seq_of(text);
    double mean = static_cast<double>(text.size()) / runs.run_count();
    CHECK(mean > 7.2);
    CHECK(mean < 8.8);
    // adjacent-distinct holds by RunSeq construction; spot-check symbols
    for (std::size_t i = 1; i < runs.run_count(); ++i)
        REQUIRE(runs.run(i).symbol != runs.run(i - 1).symbol);
}

TEST_CASE("run_benchmark produces consistent instrumented reports") {
    BenchConfig config;
    GenSpec spec;
    spec.alphabet_size = 2;
    spec.length = 20000;
    spec.mean_run_length = 8.0;
    spec.seed = 7;
    config.texts.push_back(spec);
    config.pattern_lengths = {16, 48};
    config.algorithms = {Algo::Naive, Algo::RlShiftAnd, Algo::RlBndm, Algo::ShiftAnd,
                         Algo::Bndm};
    config.seed = 99;
    config.repetitions = 1;

    auto reports = run_benchmark(config);
    REQUIRE(reports.size() == 10);

    std::string text = gen_text(spec);
    std::uint64_t text_runs = run_seq_of(text).run_count();
    for (const auto& r : reports) {
        CHECK(r.n == spec.length);
        CHECK(r.text_runs == text_runs);
        CHECK(r.matches >= 1);  // patterns sampled from the text
        if (r.algorithm == "rl-shift-and") CHECK(r.transitions == text_runs);
        if (r.algorithm == "shift-and") CHECK(r.transitions == spec.length);
    }
    // match counts agree per (text, pattern) block of 5
    for (std::size_t i = 0; i < reports.size(); i += 5)
        for (std::size_t j = 1; j < 5; ++j)
            CHECK(reports[i + j].matches == reports[i].matches);
}

TEST_CASE("report formats") {
    BenchReport r;
    r.algorithm = "rl-shift-and";
    r.n = 10;
    r.text_runs = 4;
    r.m = 3;
    r.rho = 2;
    r.search_seconds = 0.5;
    r.throughput_bps = 20.0;
    r.transitions = 4;
    r.matches = 1;

    std::ostringstream csv;
    print_report_csv(csv, {r});
    CHECK(csv.str().substr(0, 9) == "algorithm");
    CHECK(csv.str().find("rl-shift-and,10,4,3,2,") != std::string::npos);

    std::ostringstream table;
    print_report_table(table, {r});
    CHECK(table.str().find("rl-shift-and") != std::string::npos);
}
