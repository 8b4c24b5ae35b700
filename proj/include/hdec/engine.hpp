// Orchestration of the two iterative algorithms: solve the current model,
// cut every subtour of the point, optionally improve it by local search
// (cutting the local minimum too), and repeat until a decomposition is
// found or the model becomes infeasible.

#ifndef HDEC_ENGINE_HPP
#define HDEC_ENGINE_HPP

#include <cstdint>

#include "hdec/instances.hpp"
#include "hdec/local_search.hpp"
#include "hdec/model.hpp"
#include "hdec/solver.hpp"

namespace hdec {

enum class Algorithm { Ilp, IlpLs };

struct EngineConfig {
    Algorithm algorithm = Algorithm::IlpLs;
    long long max_decisions = -1;       // per run; < 0 unlimited
    long long time_limit_ms = 60000;    // per run; <= 0 unlimited
    int max_iterations = 1000;
    int attempt_limit = 10;
    std::uint64_t seed = 0;
};

enum class FoundBy { Solver, LocalSearch, None };

struct RunStats {
    int iterations = 0;  // solver calls
    int cuts_added = 0;
    double solver_ms = 0.0;
    double ls_ms = 0.0;
    double total_ms = 0.0;
    FoundBy found_by = FoundBy::None;
};

struct Outcome {
    enum class Status { Decomposition, NonExistent, BudgetExceeded };
    Status status = Status::BudgetExceeded;
    Certificate certificate;  // valid when Decomposition
    RunStats stats;
};

Outcome solve_iterative_ilp(const Instance& inst, const EngineConfig& config);
Outcome solve_iterative_ilp_ls(const Instance& inst, const EngineConfig& config);
Outcome run_engine(const Instance& inst, const EngineConfig& config);

enum class Adjacency { NotAdjacent, SufficientConditionFails, Unknown };

struct AdjacencyResult {
    Adjacency verdict = Adjacency::Unknown;
    Certificate certificate;  // valid when NotAdjacent
    RunStats stats;
};

/// Decomposition found => the polytope vertices are not adjacent. A proven
/// nonexistence only means the sufficient condition fails; adjacency is not
/// concluded.
AdjacencyResult check_nonadjacency(const Instance& inst, const EngineConfig& config);

}  // namespace hdec

#endif
