// Brute-force ground truth for small instances: exhaustive search over edge
// bipartitions with plain degree-count pruning, counting all unordered
// Hamiltonian pairs distinct from the inputs.

#ifndef HDEC_ORACLE_HPP
#define HDEC_ORACLE_HPP

#include "hdec/instances.hpp"
#include "hdec/multigraph.hpp"

namespace hdec {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleResult {
    bool exists = false;
    long count_pairs = 0;  // unordered {z, w} edge-multiset pairs, != {x, y}
    std::vector<Certificate> witnesses;
};

/// Guarded at n <= 12. Deliberately shares no inference code with the
/// solver: it only counts degrees while enumerating.
OracleResult brute_force_decompose(const Instance& inst, int max_witnesses = 4);

}  // namespace hdec

#endif
