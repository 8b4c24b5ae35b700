// Local search over cover pairs minimizing the total component count:
// chain edge fixing as the move mechanism, a directed variant where the
// closure is fully forced, and an undirected variant with randomized repair
// of broken vertices.

#ifndef HDEC_LOCAL_SEARCH_HPP
#define HDEC_LOCAL_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "hdec/instances.hpp"
#include "hdec/multigraph.hpp"

namespace hdec {

struct LsParams {
    int attempt_limit = 10;
};

enum class Side : std::uint8_t { W = 0, Z = 1 };

/// Working state of one search. Shared-edge copies are fixed once at init
/// and never move; everything else is fixed only transiently, through the
/// trail, so a rollback restores the pre-move pair exactly.
struct LsState {
    const UnionMultigraph* g = nullptr;
    CoverPair pair;
    std::vector<std::uint8_t> fixed;
    std::vector<std::uint8_t> checked;
    std::vector<int> z_degree;  // undirected: incident 1-edges per vertex

    struct TrailEntry {
        int edge;
        std::uint8_t old_value;
    };
    std::vector<TrailEntry> fix_trail;

    int fix_ops = 0;  // fixes since the last reset; bounded by 2n per move

    LsState(const UnionMultigraph& graph, CoverPair p);

    void rollback_to(std::size_t trail_size);
    /// Drops the trail and unfixes everything except shared copies.
    void commit();
};

/// Fixes the edge to `side` (reassigning it there) and recursively forces
/// the mate arcs: fixing (i,j) on one side sends the other out-arc of i and
/// the other in-arc of j to the opposite side.
void chain_fix_directed(LsState& st, int edge_id, Side side);

/// Fixes the edge to `side`; whenever an endpoint accumulates two edges
/// fixed on one side, its remaining unfixed incident edges are forced to
/// the other side.
void chain_fix_undirected(LsState& st, int edge_id, Side side);

enum class RepairResult { Ok, Failed };

/// Restores z-degree 2 at every vertex by moving random unfixed incident
/// edges between the sides (lowest broken vertex first; randomness only in
/// the edge pick). Fails when a broken vertex has no unfixed incident edge
/// on the required side, or after 4n moves.
RepairResult repair_broken_vertices(LsState& st, SplitMix64& rng);

CoverPair local_search_directed(CoverPair pair, const UnionMultigraph& g,
                                SplitMix64& rng);

CoverPair local_search_undirected(CoverPair pair, const UnionMultigraph& g,
                                  const LsParams& params, SplitMix64& rng);

}  // namespace hdec

#endif
