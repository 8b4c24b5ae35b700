// The feasibility model: degree constraints, the x/y exclusion bounds,
// shared-copy fixing, and subtour elimination constraint pairs with a cut
// registry that blocks re-deriving cuts for already-seen vertex subsets.

#ifndef HDEC_MODEL_HPP
#define HDEC_MODEL_HPP

#include <set>
#include <vector>

#include "hdec/instances.hpp"
#include "hdec/multigraph.hpp"

namespace hdec {

struct EmptyCut : std::logic_error {
    explicit EmptyCut(const std::string& msg) : std::logic_error(msg) {}
};

enum class ConstraintTag {
    Degree,
    ForbidX,
    ForbidY,
    SharedSplit,
    SubtourUpper,
    SubtourLower,
    Infeasible,  // marker; carries lower > |edge_ids| so no assignment satisfies it
};

/// sum of the variables in edge_ids must lie in [lower, upper].
struct CardinalityConstraint {
    std::vector<int> edge_ids;
    int lower = 0;
    int upper = 0;
    ConstraintTag tag = ConstraintTag::Degree;
    std::vector<VertexId> subtour;  // the S of Subtour* constraints, sorted
};

struct Model {
    int num_vars = 0;
    std::vector<CardinalityConstraint> constraints;
    std::set<std::vector<VertexId>> cut_registry;
};

/// Degree constraints for every vertex, the exclusion bounds over
/// E_x \ E_y and E_y \ E_x, and one [1,1]/[0,0] singleton per shared pair
/// (x-copy into z, y-copy into w). A negative exclusion bound, which happens
/// exactly when x = y, becomes an Infeasible marker.
Model build_base_model(const Instance& inst);

/// The two subtour elimination constraints for a vertex set S:
/// sum over E_S <= |S|-1 and sum over E_S >= |E_S|-|S|+1 (clamped at 0).
std::pair<CardinalityConstraint, CardinalityConstraint> sec_for_subtour(
    const std::vector<VertexId>& subtour, const UnionMultigraph& g);

/// Adds both constraints for every subtour of the pair not yet in the
/// registry. Returns the number of constraints appended.
int add_subtour_cuts(Model& model, const CoverPair& pair, const UnionMultigraph& g);

}  // namespace hdec

#endif
