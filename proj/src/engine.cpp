#include "hdec/engine.hpp"

#include <chrono>
#include <stdexcept>

namespace hdec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Run {
    const Instance& inst;
    const EngineConfig& config;
    Clock::time_point start = Clock::now();
    std::optional<Clock::time_point> deadline;
    RunStats stats;
    SplitMix64 rng;

    Run(const Instance& i, const EngineConfig& c) : inst(i), config(c), rng(c.seed) {
        if (c.time_limit_ms > 0)
            deadline = start + std::chrono::milliseconds(c.time_limit_ms);
    }

    bool out_of_time() const { return deadline && Clock::now() > *deadline; }

    Outcome finish(Outcome::Status status, Certificate cert = {}) {
        stats.total_ms = ms_since(start);
        Outcome out;
        out.status = status;
        out.certificate = std::move(cert);
        out.stats = stats;
        return out;
    }

    Outcome emit(const CoverPair& pair, FoundBy by) {
        stats.found_by = by;
        Certificate cert = certificate_from_cover(pair, inst.uni);
        auto report = verify_certificate(inst.x, inst.y, inst.uni, cert);
        if (!report.pass())
            throw std::logic_error("engine produced a certificate that fails verification");
        return finish(Outcome::Status::Decomposition, std::move(cert));
    }

    // One solver call against the current model, with time accounting and
    // an unconditional independent recheck of any feasible point.
    SolveOutcome solve_once(const Model& model) {
        SolveBudget budget;
        budget.max_decisions = config.max_decisions;
        budget.deadline = deadline;
        auto t0 = Clock::now();
        SolveOutcome result = solve(model, budget);
        stats.solver_ms += ms_since(t0);
        ++stats.iterations;
        if (result.status == SolveOutcome::Status::Feasible &&
            !check(result.assignment, model))
            throw std::logic_error("solver returned an assignment that fails recheck");
        return result;
    }

    CoverPair improve(const CoverPair& pair) {
        auto t0 = Clock::now();
        CoverPair improved =
            inst.kind == Kind::Directed
                ? local_search_directed(pair, inst.uni, rng)
                : local_search_undirected(pair, inst.uni,
                                          LsParams{config.attempt_limit}, rng);
        stats.ls_ms += ms_since(t0);
        return improved;
    }

    bool distinct_from_inputs(const CoverPair& pair) {
        auto zs = cover_side_edges(pair, inst.uni, true);
        auto xs = cycle_edge_set(inst.x);
        auto ys = cycle_edge_set(inst.y);
        return zs != xs && zs != ys;
    }

    Outcome loop(bool with_local_search) {
        Model model = build_base_model(inst);
        while (stats.iterations < config.max_iterations) {
            if (out_of_time()) return finish(Outcome::Status::BudgetExceeded);

            SolveOutcome point = solve_once(model);
            if (point.status == SolveOutcome::Status::Infeasible)
                return finish(Outcome::Status::NonExistent);
            if (point.status == SolveOutcome::Status::BudgetExceeded)
                return finish(Outcome::Status::BudgetExceeded);

            CoverPair pair{std::move(point.assignment)};
            auto subtours = extract_subtours(pair, inst.uni);
            if (subtours.empty()) return emit(pair, FoundBy::Solver);
            stats.cuts_added += add_subtour_cuts(model, pair, inst.uni);

            if (with_local_search) {
                CoverPair improved = improve(pair);
                auto [cz, cw] = count_components(improved, inst.uni);
                if (cz == 1 && cw == 1 && distinct_from_inputs(improved))
                    return emit(improved, FoundBy::LocalSearch);
                stats.cuts_added += add_subtour_cuts(model, improved, inst.uni);
            }
        }
        return finish(Outcome::Status::BudgetExceeded);
    }
};

}  // namespace

Outcome solve_iterative_ilp(const Instance& inst, const EngineConfig& config) {
    Run run(inst, config);
    return run.loop(false);
}

Outcome solve_iterative_ilp_ls(const Instance& inst, const EngineConfig& config) {
    Run run(inst, config);
    return run.loop(true);
}

Outcome run_engine(const Instance& inst, const EngineConfig& config) {
    return config.algorithm == Algorithm::Ilp ? solve_iterative_ilp(inst, config)
                                              : solve_iterative_ilp_ls(inst, config);
}

AdjacencyResult check_nonadjacency(const Instance& inst, const EngineConfig& config) {
    Outcome out = run_engine(inst, config);
    AdjacencyResult res;
    res.stats = out.stats;
    switch (out.status) {
        case Outcome::Status::Decomposition:
            res.verdict = Adjacency::NotAdjacent;
            res.certificate = std::move(out.certificate);
            break;
        case Outcome::Status::NonExistent:
            res.verdict = Adjacency::SufficientConditionFails;
            break;
        case Outcome::Status::BudgetExceeded:
            res.verdict = Adjacency::Unknown;
            break;
    }
    return res;
}

}  // namespace hdec
