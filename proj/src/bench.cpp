#include "hdec/bench.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace hdec {

namespace {

const char* kind_name(Kind k) { return k == Kind::Directed ? "directed" : "undirected"; }
const char* alg_name(Algorithm a) { return a == Algorithm::Ilp ? "ilp" : "ilp-ls"; }

const char* outcome_name(Outcome::Status s) {
    switch (s) {
        case Outcome::Status::Decomposition: return "solution";
        case Outcome::Status::NonExistent: return "nosolution";
        case Outcome::Status::BudgetExceeded: return "budget";
    }
    return "budget";
}

struct Task {
    Kind kind;
    int n;
    int instance_id;
};

BenchRow run_task(const Task& task, const BenchConfig& config) {
    const std::uint64_t inst_seed = config.seed + static_cast<std::uint64_t>(task.instance_id);
    SplitMix64 rng(inst_seed);
    Instance inst = generate_instance(task.n, task.kind, rng);

    EngineConfig ec;
    ec.algorithm = config.algorithm;
    ec.time_limit_ms = config.time_limit_ms;
    ec.max_iterations = config.max_iterations;
    ec.attempt_limit = config.attempt_limit;
    ec.seed = inst_seed;
    Outcome out = run_engine(inst, ec);

    BenchRow row;
    row.kind = task.kind;
    row.n = task.n;
    row.instance_id = task.instance_id;
    row.seed = inst_seed;
    row.algorithm = config.algorithm;
    row.outcome = outcome_name(out.status);
    row.iterations = out.stats.iterations;
    row.cuts_added = out.stats.cuts_added;
    row.solver_ms = out.stats.solver_ms;
    row.ls_ms = out.stats.ls_ms;
    row.total_ms = out.stats.total_ms;
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<Task> tasks;
    for (Kind kind : config.kinds)
        for (int n : config.sizes)
            for (int id = 0; id < config.count; ++id) tasks.push_back({kind, n, id});

    std::vector<BenchRow> rows(tasks.size());
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = run_task(tasks[i], config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    rows[i] = run_task(tasks[i], config);
                }
            });
        }
        for (auto& t : workers) t.join();
    }
    return rows;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (const BenchRow& r : rows) {
        out << kind_name(r.kind) << ',' << r.n << ',' << r.instance_id << ',' << r.seed
            << ',' << alg_name(r.algorithm) << ',' << r.outcome << ',' << r.iterations
            << ',' << r.cuts_added << ',' << r.solver_ms << ',' << r.ls_ms << ','
            << r.total_ms << '\n';
    }
    return out.str();
}

std::string format_summary(const std::vector<BenchRow>& rows) {
    struct Acc {
        int count = 0;
        double time_ms = 0.0;
        long iterations = 0;
    };
    std::map<std::tuple<std::string, int, std::string>, Acc> groups;
    for (const BenchRow& r : rows) {
        Acc& acc = groups[{kind_name(r.kind), r.n, r.outcome}];
        ++acc.count;
        acc.time_ms += r.total_ms;
        acc.iterations += r.iterations;
    }
    std::ostringstream out;
    out << "kind n outcome N mean_time_ms mean_iterations\n";
    for (const auto& [key, acc] : groups) {
        const auto& [kind, n, outcome] = key;
        out << kind << ' ' << n << ' ' << outcome << ' ' << acc.count << ' '
            << acc.time_ms / acc.count << ' '
            << static_cast<double>(acc.iterations) / acc.count << '\n';
    }
    return out.str();
}

}  // namespace hdec
