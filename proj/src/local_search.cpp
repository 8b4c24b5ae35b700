#include "hdec/local_search.hpp"

#include <algorithm>
#include <cassert>

namespace hdec {

LsState::LsState(const UnionMultigraph& graph, CoverPair p)
    : g(&graph), pair(std::move(p)) {
    const int m = graph.num_edges();
    fixed.assign(m, 0);
    checked.assign(m, 0);
    z_degree.assign(graph.n, 0);
    for (const Edge& e : graph.edges) {
        if (pair.assignment[e.id]) {
            ++z_degree[e.tail];
            ++z_degree[e.head];
        }
    }
    for (auto [xe, ye] : graph.shared_pairs) {
        fixed[xe] = 1;
        fixed[ye] = 1;
    }
}

namespace {

void set_value(LsState& st, int edge_id, std::uint8_t value) {
    std::uint8_t old = st.pair.assignment[edge_id];
    if (old == value) return;
    const Edge& e = st.g->edges[edge_id];
    int delta = value ? 1 : -1;
    st.z_degree[e.tail] += delta;
    st.z_degree[e.head] += delta;
    st.pair.assignment[edge_id] = value;
}

void fix_edge(LsState& st, int edge_id, Side side) {
    assert(!st.fixed[edge_id]);
    st.fix_trail.push_back({edge_id, st.pair.assignment[edge_id]});
    st.fixed[edge_id] = 1;
    st.checked[edge_id] = 1;
    ++st.fix_ops;
    set_value(st, edge_id, static_cast<std::uint8_t>(side));
}

Side opposite(Side s) { return s == Side::Z ? Side::W : Side::Z; }

}  // namespace

void LsState::rollback_to(std::size_t trail_size) {
    while (fix_trail.size() > trail_size) {
        auto [edge, old_value] = fix_trail.back();
        fix_trail.pop_back();
        set_value(*this, edge, old_value);
        fixed[edge] = 0;
    }
}

void LsState::commit() {
    fix_trail.clear();
    std::fill(fixed.begin(), fixed.end(), 0);
    for (auto [xe, ye] : g->shared_pairs) {
        fixed[xe] = 1;
        fixed[ye] = 1;
    }
}

void chain_fix_directed(LsState& st, int edge_id, Side side) {
    fix_edge(st, edge_id, side);
    const Edge& e = st.g->edges[edge_id];
    const auto& outs = st.g->out_arcs[e.tail];
    const int other_out = outs[0] == edge_id ? outs[1] : outs[0];
    const auto& ins = st.g->in_arcs[e.head];
    const int other_in = ins[0] == edge_id ? ins[1] : ins[0];
    if (!st.fixed[other_out]) chain_fix_directed(st, other_out, opposite(side));
    if (!st.fixed[other_in]) chain_fix_directed(st, other_in, opposite(side));
}

void chain_fix_undirected(LsState& st, int edge_id, Side side) {
    fix_edge(st, edge_id, side);
    const Edge& e = st.g->edges[edge_id];
    for (VertexId v : {e.tail, e.head}) {
        int fixed_on_side = 0;
        for (int eid : st.g->incident[v])
            if (st.fixed[eid] &&
                st.pair.assignment[eid] == static_cast<std::uint8_t>(side))
                ++fixed_on_side;
        if (fixed_on_side != 2) continue;
        for (int eid : st.g->incident[v])
            if (!st.fixed[eid]) chain_fix_undirected(st, eid, opposite(side));
    }
}

RepairResult repair_broken_vertices(LsState& st, SplitMix64& rng) {
    const UnionMultigraph& g = *st.g;
    const int move_limit = 4 * g.n;
    int moves = 0;
    for (;;) {
        int broken = -1;
        for (int v = 0; v < g.n; ++v) {
            if (st.z_degree[v] != 2) {
                broken = v;
                break;
            }
        }
        if (broken < 0) return RepairResult::Ok;
        if (moves >= move_limit) return RepairResult::Failed;

        // Missing z-edge: pull an unfixed w-edge in; extra z-edge: push one out.
        const bool need_z = st.z_degree[broken] < 2;
        const std::uint8_t from = need_z ? 0 : 1;
        int candidates[4];
        int num_candidates = 0;
        for (int eid : g.incident[broken])
            if (!st.fixed[eid] && st.pair.assignment[eid] == from)
                candidates[num_candidates++] = eid;
        if (num_candidates == 0) return RepairResult::Failed;
        int pick = candidates[rng.below(static_cast<std::uint64_t>(num_candidates))];
        chain_fix_undirected(st, pick, need_z ? Side::Z : Side::W);
        ++moves;
    }
}

namespace {

int total_components(const CoverPair& pair, const UnionMultigraph& g) {
    auto [cz, cw] = count_components(pair, g);
    return cz + cw;
}

// Shuffled list of the unfixed edges currently in z.
std::vector<int> z_candidates(const LsState& st, SplitMix64& rng) {
    std::vector<int> ids;
    for (int e = 0; e < st.g->num_edges(); ++e)
        if (st.pair.assignment[e] && !st.fixed[e]) ids.push_back(e);
    for (int i = static_cast<int>(ids.size()) - 1; i >= 1; --i) {
        auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(ids[i], ids[j]);
    }
    return ids;
}

}  // namespace

CoverPair local_search_directed(CoverPair pair, const UnionMultigraph& g,
                                SplitMix64& rng) {
    LsState st(g, std::move(pair));
    int best = total_components(st.pair, g);

    bool improved = true;
    while (improved && best > 2) {
        improved = false;
        std::fill(st.checked.begin(), st.checked.end(), 0);
        for (int e : z_candidates(st, rng)) {
            if (st.fixed[e] || st.checked[e] || !st.pair.assignment[e]) continue;
            std::size_t mark = st.fix_trail.size();
            st.fix_ops = 0;
            chain_fix_directed(st, e, Side::W);
            int cost = total_components(st.pair, g);
            if (cost < best) {
                best = cost;
                st.commit();
                improved = true;
                break;
            }
            st.rollback_to(mark);
        }
    }
    return st.pair;
}

CoverPair local_search_undirected(CoverPair pair, const UnionMultigraph& g,
                                  const LsParams& params, SplitMix64& rng) {
    LsState st(g, std::move(pair));
    int best = total_components(st.pair, g);

    bool improved = true;
    while (improved && best > 2) {
        improved = false;
        std::fill(st.checked.begin(), st.checked.end(), 0);
        for (int e : z_candidates(st, rng)) {
            if (st.fixed[e] || st.checked[e] || !st.pair.assignment[e]) continue;
            std::size_t mark = st.fix_trail.size();
            for (int attempt = 0; attempt < params.attempt_limit; ++attempt) {
                st.fix_ops = 0;
                chain_fix_undirected(st, e, Side::W);
                if (repair_broken_vertices(st, rng) == RepairResult::Ok) {
                    int cost = total_components(st.pair, g);
                    if (cost < best) {
                        best = cost;
                        st.commit();
                        improved = true;
                        break;
                    }
                }
                st.rollback_to(mark);
            }
            if (improved) break;
            st.checked[e] = 1;
        }
    }
    return st.pair;
}

}  // namespace hdec
