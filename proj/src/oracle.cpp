#include "hdec/oracle.hpp"

#include <algorithm>
#include <set>

namespace hdec {

namespace {

using PairKey = std::pair<std::vector<std::pair<VertexId, VertexId>>,
                          std::vector<std::pair<VertexId, VertexId>>>;

struct Enumerator {
    const Instance& inst;
    const UnionMultigraph& g;
    int max_witnesses;

    std::vector<std::uint8_t> assignment;
    std::vector<char> preset;
    std::vector<int> ones_at;   // undirected z-degree; directed: out-arc count
    std::vector<int> zeros_at;  // same for the w side
    std::vector<int> in_ones;   // directed only
    std::vector<int> in_zeros;

    std::vector<std::pair<VertexId, VertexId>> x_edges, y_edges;
    std::set<PairKey> found;
    std::vector<Certificate> witnesses;

    explicit Enumerator(const Instance& instance, int k)
        : inst(instance), g(instance.uni), max_witnesses(k) {
        assignment.assign(g.num_edges(), 0);
        preset.assign(g.num_edges(), 0);
        ones_at.assign(g.n, 0);
        zeros_at.assign(g.n, 0);
        in_ones.assign(g.n, 0);
        in_zeros.assign(g.n, 0);
        x_edges = cycle_edge_set(inst.x);
        y_edges = cycle_edge_set(inst.y);
        // Copies of a shared edge can never share a side; splitting them up
        // front halves the space without losing any edge-multiset pair.
        for (auto [xe, ye] : g.shared_pairs) {
            preset[xe] = preset[ye] = 1;
            place(xe, 1);
            place(ye, 0);
        }
    }

    void place(int eid, std::uint8_t value) {
        assignment[eid] = value;
        const Edge& e = g.edges[eid];
        if (g.kind == Kind::Undirected) {
            if (value) {
                ++ones_at[e.tail];
                ++ones_at[e.head];
            } else {
                ++zeros_at[e.tail];
                ++zeros_at[e.head];
            }
        } else {
            if (value) {
                ++ones_at[e.tail];
                ++in_ones[e.head];
            } else {
                ++zeros_at[e.tail];
                ++in_zeros[e.head];
            }
        }
    }

    void unplace(int eid) {
        const Edge& e = g.edges[eid];
        if (g.kind == Kind::Undirected) {
            if (assignment[eid]) {
                --ones_at[e.tail];
                --ones_at[e.head];
            } else {
                --zeros_at[e.tail];
                --zeros_at[e.head];
            }
        } else {
            if (assignment[eid]) {
                --ones_at[e.tail];
                --in_ones[e.head];
            } else {
                --zeros_at[e.tail];
                --in_zeros[e.head];
            }
        }
    }

    bool fits(int eid, std::uint8_t value) const {
        const Edge& e = g.edges[eid];
        const int cap = g.kind == Kind::Undirected ? 2 : 1;
        if (g.kind == Kind::Undirected) {
            const auto& cnt = value ? ones_at : zeros_at;
            return cnt[e.tail] < cap && cnt[e.head] < cap;
        }
        const auto& out = value ? ones_at : zeros_at;
        const auto& in = value ? in_ones : in_zeros;
        return out[e.tail] < cap && in[e.head] < cap;
    }

    void leaf() {
        CoverPair pair{assignment};
        if (!cover_valid(pair, g)) return;
        auto [cz, cw] = count_components(pair, g);
        if (cz != 1 || cw != 1) return;
        auto zs = cover_side_edges(pair, g, true);
        if (zs == x_edges || zs == y_edges) return;
        auto ws = cover_side_edges(pair, g, false);
        PairKey key = zs < ws ? PairKey{zs, ws} : PairKey{ws, zs};
        if (!found.insert(std::move(key)).second) return;
        if (static_cast<int>(witnesses.size()) < max_witnesses)
            witnesses.push_back(certificate_from_cover(pair, g));
    }

    void recurse(int eid) {
        while (eid < g.num_edges() && preset[eid]) ++eid;
        if (eid == g.num_edges()) {
            leaf();
            return;
        }
        for (std::uint8_t value : {std::uint8_t{1}, std::uint8_t{0}}) {
            if (!fits(eid, value)) continue;
            place(eid, value);
            recurse(eid + 1);
            unplace(eid);
        }
    }
};

}  // namespace

OracleResult brute_force_decompose(const Instance& inst, int max_witnesses) {
    if (inst.n > 12) throw TooLarge("oracle is limited to n <= 12");
    Enumerator en(inst, max_witnesses);
    en.recurse(0);
    OracleResult res;
    res.count_pairs = static_cast<long>(en.found.size());
    res.exists = res.count_pairs >= 1;
    res.witnesses = std::move(en.witnesses);
    return res;
}

}  // namespace hdec
