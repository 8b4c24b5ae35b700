#include "hdec/solver.hpp"

#include <algorithm>

namespace hdec {
namespace detail {

Searcher::Searcher(const Model& model) : model_(model) {
    values_.assign(model.num_vars, Val::Unassigned);
    count_one_.assign(model.constraints.size(), 0);
    count_unassigned_.resize(model.constraints.size());
    occurs_.assign(model.num_vars, {});
    for (std::size_t ci = 0; ci < model.constraints.size(); ++ci) {
        const auto& c = model.constraints[ci];
        count_unassigned_[ci] = static_cast<int>(c.edge_ids.size());
        for (int var : c.edge_ids) occurs_[var].push_back(static_cast<int>(ci));
    }
}

void Searcher::assign(int var, Val v, bool decision) {
    values_[var] = v;
    trail_.push_back({var, decision});
    for (int ci : occurs_[var]) {
        --count_unassigned_[ci];
        if (v == Val::One) ++count_one_[ci];
    }
}

void Searcher::unassign_to(std::size_t trail_size) {
    while (trail_.size() > trail_size) {
        auto [var, decision] = trail_.back();
        trail_.pop_back();
        for (int ci : occurs_[var]) {
            ++count_unassigned_[ci];
            if (values_[var] == Val::One) --count_one_[ci];
        }
        values_[var] = Val::Unassigned;
    }
}

PropResult Searcher::propagate(std::size_t from_trail, SolveStats& stats) {
    // Worklist of constraints whose counters changed. Seeded with every
    // constraint when from_trail covers the whole (empty) trail, so the
    // root call also catches constraints unsatisfiable outright.
    std::vector<int> work;
    std::vector<char> queued(model_.constraints.size(), 0);
    auto enqueue = [&](int ci) {
        if (!queued[ci]) {
            queued[ci] = 1;
            work.push_back(ci);
        }
    };
    if (from_trail == 0 && trail_.empty()) {
        for (std::size_t ci = 0; ci < model_.constraints.size(); ++ci)
            enqueue(static_cast<int>(ci));
    }
    for (std::size_t t = from_trail; t < trail_.size(); ++t)
        for (int ci : occurs_[trail_[t].var]) enqueue(ci);

    for (std::size_t wi = 0; wi < work.size(); ++wi) {
        const int ci = work[wi];
        queued[ci] = 0;
        const auto& c = model_.constraints[ci];
        const int ones = count_one_[ci];
        const int open = count_unassigned_[ci];
        if (ones > c.upper || ones + open < c.lower) {
            ++stats.conflicts;
            return {false, ci};
        }
        if (open == 0) continue;
        if (ones == c.upper) {
            for (int var : c.edge_ids) {
                if (values_[var] != Val::Unassigned) continue;
                assign(var, Val::Zero, false);
                ++stats.propagations;
                for (int other : occurs_[var]) enqueue(other);
            }
        } else if (ones + open == c.lower) {
            for (int var : c.edge_ids) {
                if (values_[var] != Val::Unassigned) continue;
                assign(var, Val::One, false);
                ++stats.propagations;
                for (int other : occurs_[var]) enqueue(other);
            }
        }
    }
    return {true, -1};
}

bool Searcher::counters_consistent() const {
    for (std::size_t ci = 0; ci < model_.constraints.size(); ++ci) {
        int ones = 0, open = 0;
        for (int var : model_.constraints[ci].edge_ids) {
            if (values_[var] == Val::One) ++ones;
            if (values_[var] == Val::Unassigned) ++open;
        }
        if (ones != count_one_[ci] || open != count_unassigned_[ci]) return false;
    }
    return true;
}

SolveOutcome Searcher::search(const SolveBudget& budget) {
    SolveOutcome out;

    auto over_budget = [&]() {
        if (budget.max_decisions >= 0 && out.stats.decisions > budget.max_decisions)
            return true;
        return budget.deadline && std::chrono::steady_clock::now() > *budget.deadline;
    };

    if (!propagate(0, out.stats).ok) {
        out.status = SolveOutcome::Status::Infeasible;
        return out;
    }

    // Decision trail positions; each entry marks a One branch whose Zero
    // sibling is still open.
    std::vector<std::size_t> open_decisions;
    int next_var = 0;

    for (;;) {
        while (next_var < model_.num_vars && values_[next_var] != Val::Unassigned)
            ++next_var;
        if (next_var == model_.num_vars) {
            out.status = SolveOutcome::Status::Feasible;
            out.assignment.resize(model_.num_vars);
            for (int v = 0; v < model_.num_vars; ++v)
                out.assignment[v] = values_[v] == Val::One ? 1 : 0;
            return out;
        }

        ++out.stats.decisions;
        if ((out.stats.decisions & 1023) == 0 && over_budget()) {
            out.status = SolveOutcome::Status::BudgetExceeded;
            return out;
        }

        std::size_t mark = trail_.size();
        assign(next_var, Val::One, true);
        open_decisions.push_back(mark);

        while (!propagate(trail_.size() - 1, out.stats).ok) {
            // Chronological backtrack to the deepest One decision and try Zero.
            if (open_decisions.empty()) {
                out.status = SolveOutcome::Status::Infeasible;
                return out;
            }
            std::size_t dmark = open_decisions.back();
            open_decisions.pop_back();
            int dvar = trail_[dmark].var;
            unassign_to(dmark);
            assign(dvar, Val::Zero, false);
            next_var = 0;
        }
    }
}

}  // namespace detail

SolveOutcome solve(const Model& model, const SolveBudget& budget) {
    detail::Searcher searcher(model);
    return searcher.search(budget);
}

bool check(const std::vector<std::uint8_t>& assignment, const Model& model) {
    if (static_cast<int>(assignment.size()) != model.num_vars) return false;
    for (const auto& c : model.constraints) {
        int sum = 0;
        for (int var : c.edge_ids) sum += assignment[var] ? 1 : 0;
        if (sum < c.lower || sum > c.upper) return false;
    }
    return true;
}

}  // namespace hdec
