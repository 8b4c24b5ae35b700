// Exact feasibility search over binary variables under cardinality
// constraints: counter-based propagation to a fixed point, chronological
// backtracking, deterministic branching (lowest unassigned index, One first).

#ifndef HDEC_SOLVER_HPP
#define HDEC_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hdec/model.hpp"

namespace hdec {

struct SolveBudget {
    long long max_decisions = -1;  // < 0: unlimited
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static SolveBudget unlimited() { return {}; }
};

struct SolveStats {
    long long decisions = 0;
    long long propagations = 0;
    long long conflicts = 0;
};

struct SolveOutcome {
    enum class Status { Feasible, Infeasible, BudgetExceeded };
    Status status = Status::Infeasible;
    std::vector<std::uint8_t> assignment;  // filled when Feasible
    SolveStats stats;
};

SolveOutcome solve(const Model& model, const SolveBudget& budget);

/// Independent validation by direct recount; shares no state with solve().
bool check(const std::vector<std::uint8_t>& assignment, const Model& model);

// Exposed for unit tests.
namespace detail {

enum class Val : std::uint8_t { Unassigned, Zero, One };

struct PropResult {
    bool ok;
    int conflict_constraint;  // index into model.constraints when !ok
};

/// Search state plus the per-constraint counters and occurrence lists.
/// The trail records assignment order; decisions carry a flag so that
/// chronological backtracking can find the last open branch.
class Searcher {
public:
    explicit Searcher(const Model& model);

    void assign(int var, Val v, bool decision);
    void unassign_to(std::size_t trail_size);
    /// Fixed-point propagation of assignments made since trail index `from`.
    PropResult propagate(std::size_t from_trail, SolveStats& stats);

    Val value(int var) const { return values_[var]; }
    std::size_t trail_size() const { return trail_.size(); }
    int trail_var(std::size_t i) const { return trail_[i].var; }
    bool trail_decision(std::size_t i) const { return trail_[i].decision; }

    /// Counters rebuilt from scratch equal the incremental ones.
    bool counters_consistent() const;

    SolveOutcome search(const SolveBudget& budget);

private:
    const Model& model_;
    std::vector<Val> values_;
    struct TrailEntry {
        int var;
        bool decision;
    };
    std::vector<TrailEntry> trail_;
    std::vector<int> count_one_;
    std::vector<int> count_unassigned_;
    std::vector<std::vector<int>> occurs_;
};

}  // namespace detail

}  // namespace hdec

#endif
