// Core data model: union multigraph of two Hamiltonian cycles, cycle covers,
// component counting, subtour extraction and certificate verification.

#ifndef HDEC_MULTIGRAPH_HPP
#define HDEC_MULTIGRAPH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdec {

enum class Kind { Directed, Undirected };

using VertexId = int;

struct InvalidCycle : std::runtime_error {
    explicit InvalidCycle(const std::string& msg) : std::runtime_error(msg) {}
};

struct MismatchedInstances : std::runtime_error {
    explicit MismatchedInstances(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidCover : std::runtime_error {
    explicit InvalidCover(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Hamiltonian cycle given as a cyclic vertex order (0-based, dense ids).
struct HamCycle {
    std::vector<VertexId> order;
    Kind kind = Kind::Undirected;

    int n() const { return static_cast<int>(order.size()); }
};

/// Throws InvalidCycle unless `c` is a permutation of [0, n) with n >= 3.
void validate_cycle(const HamCycle& c);

enum class Origin : std::uint8_t { FromX, FromY };

/// One labeled edge of the union multigraph. Undirected edges are stored
/// canonically with tail <= head.
struct Edge {
    int id;
    VertexId tail;
    VertexId head;
    Origin origin;
};

/// The 4-regular multigraph x ∪ y. Edge ids [0, n) come from x, [n, 2n)
/// from y. shared_pairs lists the parallel copies realizing the edges
/// present in both cycles.
struct UnionMultigraph {
    int n = 0;
    Kind kind = Kind::Undirected;
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> shared_pairs;  // (x edge id, y edge id)

    // Incidence, built once. Undirected: 4 edge ids per vertex.
    // Directed: 2 out-arcs and 2 in-arcs per vertex; incident holds all 4.
    std::vector<std::array<int, 4>> incident;
    std::vector<std::array<int, 2>> out_arcs;
    std::vector<std::array<int, 2>> in_arcs;

    int num_edges() const { return 2 * n; }
};

UnionMultigraph build_union(const HamCycle& x, const HamCycle& y);

/// 0/1 assignment over the 2n edges: 1 puts the edge in cover z, 0 in w.
struct CoverPair {
    std::vector<std::uint8_t> assignment;
};

/// True iff both sides satisfy the degree discipline (2 per vertex
/// undirected; one in-arc and one out-arc per vertex directed).
bool cover_valid(const CoverPair& pair, const UnionMultigraph& g);

/// Number of simple cycles in z and in w. Throws InvalidCover.
std::pair<int, int> count_components(const CoverPair& pair, const UnionMultigraph& g);

/// Vertex sets of all cycles of length < n on either side, deduplicated,
/// each sorted ascending. Empty iff both sides are Hamiltonian.
std::vector<std::vector<VertexId>> extract_subtours(const CoverPair& pair,
                                                    const UnionMultigraph& g);

struct Certificate {
    HamCycle z;
    HamCycle w;
};

/// Reads the two Hamiltonian cycles off a (1,1)-component cover pair.
/// Precondition: count_components(pair) == (1, 1).
Certificate certificate_from_cover(const CoverPair& pair, const UnionMultigraph& g);

struct VerifyReport {
    bool hamiltonian_z = false;
    bool hamiltonian_w = false;
    bool union_partition = false;
    bool distinct_from_xy = false;

    bool pass() const {
        return hamiltonian_z && hamiltonian_w && union_partition && distinct_from_xy;
    }
};

/// Independent certificate checks: z and w Hamiltonian, z ⊎ w = E_x ⊎ E_y
/// as a multiset, and both distinct from x and y as edge sets (so equality
/// is invariant under rotation, and reflection in the undirected case).
VerifyReport verify_certificate(const HamCycle& x, const HamCycle& y,
                                const UnionMultigraph& g, const Certificate& cert);

/// Sorted endpoint-pair list of a cycle; ordered pairs for directed cycles,
/// (min, max) pairs otherwise. Two cycles are equal iff these compare equal.
std::vector<std::pair<VertexId, VertexId>> cycle_edge_set(const HamCycle& c);

/// Endpoint-pair multiset of one side of a cover, sorted.
std::vector<std::pair<VertexId, VertexId>> cover_side_edges(const CoverPair& pair,
                                                            const UnionMultigraph& g,
                                                            bool z_side);

}  // namespace hdec

#endif
