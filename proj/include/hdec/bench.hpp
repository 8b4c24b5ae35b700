// Benchmark harness: seeded corpora of random instances, one engine run per
// (instance, algorithm), CSV rows merged deterministically by instance id.

#ifndef HDEC_BENCH_HPP
#define HDEC_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hdec/engine.hpp"

namespace hdec {

struct BenchConfig {
    std::vector<int> sizes;
    int count = 100;
    std::vector<Kind> kinds;
    Algorithm algorithm = Algorithm::IlpLs;
    std::uint64_t seed = 0;
    int attempt_limit = 10;
    long long time_limit_ms = 60000;
    int max_iterations = 1000;
    int jobs = 1;
};

struct BenchRow {
    Kind kind;
    int n;
    int instance_id;
    std::uint64_t seed;
    Algorithm algorithm;
    std::string outcome;  // solution | nosolution | budget
    int iterations;
    int cuts_added;
    double solver_ms;
    double ls_ms;
    double total_ms;
};

inline const char* csv_header() {
    return "kind,n,instance_id,seed,algorithm,outcome,iterations,cuts_added,"
           "solver_ms,ls_ms,total_ms";
}

std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string format_csv(const std::vector<BenchRow>& rows);

/// Per (kind, n) means of time and iterations split by outcome.
std::string format_summary(const std::vector<BenchRow>& rows);

}  // namespace hdec

#endif
