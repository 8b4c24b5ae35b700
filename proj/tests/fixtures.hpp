// Shared fixture instances for the test suites. Vertex lists here are
// 0-based; the 1-based labels from the file format appear only in comments.

#ifndef HDEC_TESTS_FIXTURES_HPP
#define HDEC_TESTS_FIXTURES_HPP

#include <algorithm>
#include <vector>

#include "hdec/instances.hpp"
#include "hdec/multigraph.hpp"

namespace fixtures {

using namespace hdec;

// x = 1-2-3-4-5-6, y = 1-4-6-2-3-5 (shares edge 2-3); has the
// decomposition z = 1-4-5-3-2-6, w = 1-2-3-4-6-5.
inline Instance sample6() {
    HamCycle x{{0, 1, 2, 3, 4, 5}, Kind::Undirected};
    HamCycle y{{0, 3, 5, 1, 2, 4}, Kind::Undirected};
    return make_instance(x, y);
}

inline Certificate sample6_certificate() {
    Certificate cert;
    cert.z = HamCycle{{0, 3, 4, 2, 1, 5}, Kind::Undirected};  // 1-4-5-3-2-6
    cert.w = HamCycle{{0, 1, 2, 3, 5, 4}, Kind::Undirected};  // 1-2-3-4-6-5
    return cert;
}

// x = 1-2-3-4-5-6, y = 1-2-6-4-5-3 (shares 1-2 and 4-5); its union splits
// into the complementary triangle covers z = {1,2,6} + {3,4,5} and
// w = {1,2,3} + {4,5,6}.
inline Instance twin6() {
    HamCycle x{{0, 1, 2, 3, 4, 5}, Kind::Undirected};
    HamCycle y{{0, 1, 5, 3, 4, 2}, Kind::Undirected};
    return make_instance(x, y);
}

// Builds an assignment putting into z one edge per requested endpoint pair
// (canonical for undirected graphs), matched greedily in edge-id order.
inline CoverPair cover_from_z_pairs(const UnionMultigraph& g,
                                    std::vector<std::pair<VertexId, VertexId>> pairs) {
    CoverPair cover;
    cover.assignment.assign(g.num_edges(), 0);
    for (const Edge& e : g.edges) {
        auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(e.tail, e.head));
        if (it != pairs.end()) {
            cover.assignment[e.id] = 1;
            pairs.erase(it);
        }
    }
    return cover;
}

// The triangle cover of the twin6 union: z = {1,2,6} + {3,4,5}.
inline CoverPair twin6_triangle_cover(const UnionMultigraph& g) {
    return cover_from_z_pairs(
        g, {{0, 1}, {0, 5}, {1, 5}, {2, 3}, {2, 4}, {3, 4}});
}

// Directed 3-cycle and its reversal; the only decompositions of the union
// are {x, y} itself, so nothing distinct exists.
inline Instance reversed3() {
    HamCycle x{{0, 1, 2}, Kind::Directed};
    HamCycle y{{0, 2, 1}, Kind::Directed};
    return make_instance(x, y);
}

inline Instance identical(int n, Kind kind) {
    HamCycle c;
    c.kind = kind;
    for (int i = 0; i < n; ++i) c.order.push_back(i);
    return make_instance(c, c);
}

// z = the 6-cycle 1-2-3-4-5-6, w = triangles {1,3,5} + {2,4,6}; the union
// also decomposes into the Hamiltonian cycles x = 1-2-4-6-5-3 and
// y = 1-6-2-3-4-5.
inline Instance mixed_cover_instance() {
    HamCycle x{{0, 1, 3, 5, 4, 2}, Kind::Undirected};
    HamCycle y{{0, 5, 1, 2, 3, 4}, Kind::Undirected};
    return make_instance(x, y);
}

inline CoverPair mixed_cover(const UnionMultigraph& g) {
    return cover_from_z_pairs(
        g, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

}  // namespace fixtures

#endif
