// Command line: generate instances, solve them with either algorithm,
// verify certificates, query the brute-force oracle, and run benchmarks.
//
// Exit codes: 0 found/verified, 1 proven nonexistent, 2 budget exceeded,
// 3 usage or format error, 4 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hdec/bench.hpp"
#include "hdec/engine.hpp"
#include "hdec/oracle.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNonExistent = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;
constexpr int kExitVerifyFail = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

hdec::Kind parse_kind(const std::string& word) {
    if (word == "directed") return hdec::Kind::Directed;
    if (word == "undirected") return hdec::Kind::Undirected;
    throw CLI::ValidationError("--kind", "expected 'directed' or 'undirected'");
}

hdec::Algorithm parse_algorithm(const std::string& word) {
    if (word == "ilp") return hdec::Algorithm::Ilp;
    if (word == "ilp-ls") return hdec::Algorithm::IlpLs;
    throw CLI::ValidationError("--algorithm", "expected 'ilp' or 'ilp-ls'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian decomposition of the union of two Hamiltonian cycles"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a random instance file");
    int gen_n = 0;
    std::string gen_kind = "undirected", gen_out;
    std::uint64_t gen_seed = 0;
    gen->add_option("--n", gen_n, "vertex count (>= 3)")->required();
    gen->add_option("--kind", gen_kind, "directed|undirected");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output path")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "search for a decomposition");
    std::string solve_in, solve_cert, solve_alg = "ilp-ls";
    std::uint64_t solve_seed = 0;
    long long solve_time_ms = 60000;
    int solve_max_iter = 1000, solve_attempts = 10;
    solve_cmd->add_option("instance", solve_in, "instance file")->required();
    solve_cmd->add_option("--algorithm", solve_alg, "ilp|ilp-ls");
    solve_cmd->add_option("--certificate", solve_cert, "certificate output path");
    solve_cmd->add_option("--seed", solve_seed, "rng seed for the local search");
    solve_cmd->add_option("--time-limit-ms", solve_time_ms, "wall clock budget");
    solve_cmd->add_option("--max-iterations", solve_max_iter, "solver call cap");
    solve_cmd->add_option("--attempt-limit", solve_attempts, "repair attempts per move");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
    std::string verify_inst, verify_cert;
    verify_cmd->add_option("instance", verify_inst, "instance file")->required();
    verify_cmd->add_option("certificate", verify_cert, "certificate file")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force a small instance");
    std::string oracle_in;
    int oracle_witnesses = 4;
    oracle_cmd->add_option("instance", oracle_in, "instance file")->required();
    oracle_cmd->add_option("--witnesses", oracle_witnesses, "max witnesses to print");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "seeded benchmark corpus to CSV");
    std::string bench_sizes, bench_kind = "undirected", bench_alg = "ilp-ls", bench_csv;
    int bench_count = 100, bench_attempts = 10, bench_max_iter = 1000, bench_jobs = 1;
    long long bench_time_ms = 60000;
    std::uint64_t bench_seed = 0;
    bench_cmd->add_option("--sizes", bench_sizes, "comma list of n")->required();
    bench_cmd->add_option("--count", bench_count, "instances per size");
    bench_cmd->add_option("--kind", bench_kind, "directed|undirected|both");
    bench_cmd->add_option("--algorithm", bench_alg, "ilp|ilp-ls");
    bench_cmd->add_option("--seed", bench_seed, "base seed");
    bench_cmd->add_option("--csv", bench_csv, "CSV output path")->required();
    bench_cmd->add_option("--attempt-limit", bench_attempts, "repair attempts per move");
    bench_cmd->add_option("--time-limit-ms", bench_time_ms, "budget per instance");
    bench_cmd->add_option("--max-iterations", bench_max_iter, "solver call cap");
    bench_cmd->add_option("--jobs", bench_jobs, "parallel workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            if (gen_n < 3) {
                std::cerr << "error: --n must be at least 3\n";
                return kExitUsage;
            }
            hdec::SplitMix64 rng(gen_seed);
            hdec::Instance inst =
                hdec::generate_instance(gen_n, parse_kind(gen_kind), rng);
            write_file(gen_out, hdec::serialize_instance(inst));
            return kExitFound;
        }

        if (*solve_cmd) {
            hdec::Instance inst = hdec::parse_instance(read_file(solve_in));
            hdec::EngineConfig config;
            config.algorithm = parse_algorithm(solve_alg);
            config.seed = solve_seed;
            config.time_limit_ms = solve_time_ms;
            config.max_iterations = solve_max_iter;
            config.attempt_limit = solve_attempts;
            hdec::Outcome out = hdec::run_engine(inst, config);

            const char* word = out.status == hdec::Outcome::Status::Decomposition
                                   ? "solution"
                                   : out.status == hdec::Outcome::Status::NonExistent
                                         ? "nosolution"
                                         : "budget";
            std::cout << word << ' ' << out.stats.iterations << ' '
                      << out.stats.cuts_added << ' ' << out.stats.solver_ms << ' '
                      << out.stats.ls_ms << ' ' << out.stats.total_ms << '\n';
            if (out.status == hdec::Outcome::Status::Decomposition) {
                if (!solve_cert.empty())
                    write_file(solve_cert,
                               hdec::serialize_certificate(out.certificate));
                return kExitFound;
            }
            return out.status == hdec::Outcome::Status::NonExistent ? kExitNonExistent
                                                                    : kExitBudget;
        }

        if (*verify_cmd) {
            hdec::Instance inst = hdec::parse_instance(read_file(verify_inst));
            hdec::Certificate cert = hdec::parse_certificate(read_file(verify_cert));
            hdec::VerifyReport report =
                hdec::verify_certificate(inst.x, inst.y, inst.uni, cert);
            auto line = [](const char* name, bool ok) {
                std::cout << name << (ok ? " OK" : " FAIL") << '\n';
            };
            line("hamiltonian_z", report.hamiltonian_z);
            line("hamiltonian_w", report.hamiltonian_w);
            line("union_partition", report.union_partition);
            line("distinct_from_xy", report.distinct_from_xy);
            return report.pass() ? kExitFound : kExitVerifyFail;
        }

        if (*oracle_cmd) {
            hdec::Instance inst = hdec::parse_instance(read_file(oracle_in));
            hdec::OracleResult res;
            try {
                res = hdec::brute_force_decompose(inst, oracle_witnesses);
            } catch (const hdec::TooLarge& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;
            }
            std::cout << "exists " << (res.exists ? "true" : "false") << '\n';
            std::cout << "count_pairs " << res.count_pairs << '\n';
            for (const auto& w : res.witnesses)
                std::cout << hdec::serialize_certificate(w);
            return res.exists ? kExitFound : kExitNonExistent;
        }

        if (*bench_cmd) {
            hdec::BenchConfig config;
            std::istringstream sizes(bench_sizes);
            std::string tok;
            while (std::getline(sizes, tok, ','))
                if (!tok.empty()) config.sizes.push_back(std::stoi(tok));
            if (config.sizes.empty()) {
                std::cerr << "error: --sizes is empty\n";
                return kExitUsage;
            }
            if (bench_count < 0) {
                std::cerr << "error: --count must be nonnegative\n";
                return kExitUsage;
            }
            if (bench_kind == "both")
                config.kinds = {hdec::Kind::Undirected, hdec::Kind::Directed};
            else
                config.kinds = {parse_kind(bench_kind)};
            config.algorithm = parse_algorithm(bench_alg);
            config.count = bench_count;
            config.seed = bench_seed;
            config.attempt_limit = bench_attempts;
            config.time_limit_ms = bench_time_ms;
            config.max_iterations = bench_max_iter;
            config.jobs = bench_jobs;

            auto rows = hdec::run_bench(config);
            write_file(bench_csv, hdec::format_csv(rows));
            std::cout << hdec::format_summary(rows);
            return kExitFound;
        }
    } catch (const hdec::FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const hdec::InvalidCycle& e) {
        std::cerr << "invalid cycle: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
