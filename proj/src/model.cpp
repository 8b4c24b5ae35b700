#include "hdec/model.hpp"

#include <algorithm>

namespace hdec {

Model build_base_model(const Instance& inst) {
    const UnionMultigraph& g = inst.uni;
    Model m;
    m.num_vars = g.num_edges();

    if (g.kind == Kind::Undirected) {
        for (int v = 0; v < g.n; ++v) {
            CardinalityConstraint c;
            c.edge_ids.assign(g.incident[v].begin(), g.incident[v].end());
            c.lower = c.upper = 2;
            c.tag = ConstraintTag::Degree;
            m.constraints.push_back(std::move(c));
        }
    } else {
        for (int v = 0; v < g.n; ++v) {
            CardinalityConstraint out;
            out.edge_ids.assign(g.out_arcs[v].begin(), g.out_arcs[v].end());
            out.lower = out.upper = 1;
            out.tag = ConstraintTag::Degree;
            m.constraints.push_back(std::move(out));
            CardinalityConstraint in;
            in.edge_ids.assign(g.in_arcs[v].begin(), g.in_arcs[v].end());
            in.lower = in.upper = 1;
            in.tag = ConstraintTag::Degree;
            m.constraints.push_back(std::move(in));
        }
    }

    std::vector<char> shared(g.num_edges(), 0);
    for (auto [xe, ye] : g.shared_pairs) shared[xe] = shared[ye] = 1;

    const int bound = g.n - static_cast<int>(g.shared_pairs.size()) - 2;
    if (bound < 0) {
        // Only happens for x = y: no decomposition distinct from the inputs.
        CardinalityConstraint marker;
        marker.edge_ids = {0};
        marker.lower = 2;
        marker.upper = 2;
        marker.tag = ConstraintTag::Infeasible;
        m.constraints.push_back(std::move(marker));
        return m;
    }

    auto exclusive = [&](Origin origin) {
        std::vector<int> ids;
        for (const Edge& e : g.edges)
            if (e.origin == origin && !shared[e.id]) ids.push_back(e.id);
        return ids;
    };
    CardinalityConstraint fx;
    fx.edge_ids = exclusive(Origin::FromX);
    fx.lower = 0;
    fx.upper = bound;
    fx.tag = ConstraintTag::ForbidX;
    if (!fx.edge_ids.empty()) m.constraints.push_back(std::move(fx));
    CardinalityConstraint fy;
    fy.edge_ids = exclusive(Origin::FromY);
    fy.lower = 0;
    fy.upper = bound;
    fy.tag = ConstraintTag::ForbidY;
    if (!fy.edge_ids.empty()) m.constraints.push_back(std::move(fy));

    for (auto [xe, ye] : g.shared_pairs) {
        CardinalityConstraint one;
        one.edge_ids = {xe};
        one.lower = one.upper = 1;
        one.tag = ConstraintTag::SharedSplit;
        m.constraints.push_back(std::move(one));
        CardinalityConstraint zero;
        zero.edge_ids = {ye};
        zero.lower = zero.upper = 0;
        zero.tag = ConstraintTag::SharedSplit;
        m.constraints.push_back(std::move(zero));
    }
    return m;
}

std::pair<CardinalityConstraint, CardinalityConstraint> sec_for_subtour(
    const std::vector<VertexId>& subtour, const UnionMultigraph& g) {
    std::vector<char> in_s(g.n, 0);
    for (VertexId v : subtour) in_s[v] = 1;

    std::vector<int> edge_set;
    for (const Edge& e : g.edges)
        if (in_s[e.tail] && in_s[e.head]) edge_set.push_back(e.id);
    if (edge_set.empty())
        throw EmptyCut("subtour induces no edges; caller passed a bogus vertex set");

    const int s = static_cast<int>(subtour.size());
    const int es = static_cast<int>(edge_set.size());

    std::vector<VertexId> key = subtour;
    std::sort(key.begin(), key.end());

    CardinalityConstraint up;
    up.edge_ids = edge_set;
    up.lower = 0;
    up.upper = s - 1;
    up.tag = ConstraintTag::SubtourUpper;
    up.subtour = key;

    CardinalityConstraint lo;
    lo.edge_ids = std::move(edge_set);
    lo.lower = std::max(0, es - s + 1);
    lo.upper = es;
    lo.tag = ConstraintTag::SubtourLower;
    lo.subtour = std::move(key);

    return {std::move(up), std::move(lo)};
}

int add_subtour_cuts(Model& model, const CoverPair& pair, const UnionMultigraph& g) {
    int added = 0;
    for (const auto& subtour : extract_subtours(pair, g)) {
        if (!model.cut_registry.insert(subtour).second) continue;
        auto [up, lo] = sec_for_subtour(subtour, g);
        model.constraints.push_back(std::move(up));
        model.constraints.push_back(std::move(lo));
        added += 2;
    }
    return added;
}

}  // namespace hdec
