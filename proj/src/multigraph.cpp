#include "hdec/multigraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hdec {

void validate_cycle(const HamCycle& c) {
    const int n = c.n();
    if (n < 3) throw InvalidCycle("cycle has fewer than 3 vertices");
    std::vector<char> seen(n, 0);
    for (VertexId v : c.order) {
        if (v < 0 || v >= n) throw InvalidCycle("vertex id out of range");
        if (seen[v]) throw InvalidCycle("repeated vertex in cycle");
        seen[v] = 1;
    }
}

namespace {

Edge make_edge(int id, VertexId a, VertexId b, Origin origin, Kind kind) {
    if (kind == Kind::Undirected && a > b) std::swap(a, b);
    return Edge{id, a, b, origin};
}

}  // namespace

UnionMultigraph build_union(const HamCycle& x, const HamCycle& y) {
    validate_cycle(x);
    validate_cycle(y);
    if (x.n() != y.n() || x.kind != y.kind)
        throw MismatchedInstances("cycles differ in size or kind");

    UnionMultigraph g;
    g.n = x.n();
    g.kind = x.kind;
    g.edges.reserve(2 * g.n);
    for (int i = 0; i < g.n; ++i) {
        VertexId a = x.order[i], b = x.order[(i + 1) % g.n];
        g.edges.push_back(make_edge(i, a, b, Origin::FromX, g.kind));
    }
    for (int i = 0; i < g.n; ++i) {
        VertexId a = y.order[i], b = y.order[(i + 1) % g.n];
        g.edges.push_back(make_edge(g.n + i, a, b, Origin::FromY, g.kind));
    }

    // Shared pairs: identical canonical (undirected) or ordered (directed)
    // endpoint pairs across the two origins.
    std::map<std::pair<VertexId, VertexId>, int> x_by_pair;
    for (int i = 0; i < g.n; ++i)
        x_by_pair[{g.edges[i].tail, g.edges[i].head}] = i;
    for (int i = g.n; i < 2 * g.n; ++i) {
        auto it = x_by_pair.find({g.edges[i].tail, g.edges[i].head});
        if (it != x_by_pair.end()) g.shared_pairs.emplace_back(it->second, i);
    }
    std::sort(g.shared_pairs.begin(), g.shared_pairs.end());

    std::vector<int> fill(g.n, 0);
    g.incident.assign(g.n, {-1, -1, -1, -1});
    for (const Edge& e : g.edges) {
        g.incident[e.tail][fill[e.tail]++] = e.id;
        if (e.tail != e.head) g.incident[e.head][fill[e.head]++] = e.id;
    }
    for (int v = 0; v < g.n; ++v)
        if (fill[v] != 4) throw InvalidCycle("vertex degree is not 4 in the union");

    if (g.kind == Kind::Directed) {
        std::vector<int> nout(g.n, 0), nin(g.n, 0);
        g.out_arcs.assign(g.n, {-1, -1});
        g.in_arcs.assign(g.n, {-1, -1});
        for (const Edge& e : g.edges) {
            g.out_arcs[e.tail][nout[e.tail]++] = e.id;
            g.in_arcs[e.head][nin[e.head]++] = e.id;
        }
        for (int v = 0; v < g.n; ++v)
            if (nout[v] != 2 || nin[v] != 2)
                throw InvalidCycle("vertex in/out-degree is not 2 in the union");
    }
    return g;
}

bool cover_valid(const CoverPair& pair, const UnionMultigraph& g) {
    if (static_cast<int>(pair.assignment.size()) != g.num_edges()) return false;
    if (g.kind == Kind::Undirected) {
        std::vector<int> deg1(g.n, 0);
        for (const Edge& e : g.edges) {
            if (pair.assignment[e.id]) {
                ++deg1[e.tail];
                ++deg1[e.head];
            }
        }
        for (int v = 0; v < g.n; ++v)
            if (deg1[v] != 2) return false;
    } else {
        std::vector<int> out1(g.n, 0), in1(g.n, 0);
        for (const Edge& e : g.edges) {
            if (pair.assignment[e.id]) {
                ++out1[e.tail];
                ++in1[e.head];
            }
        }
        for (int v = 0; v < g.n; ++v)
            if (out1[v] != 1 || in1[v] != 1) return false;
    }
    return true;
}

namespace {

// Decomposes one side of a valid cover into its cycles, as vertex lists in
// traversal order.
std::vector<std::vector<VertexId>> side_cycles(const CoverPair& pair,
                                               const UnionMultigraph& g, bool z_side) {
    const std::uint8_t want = z_side ? 1 : 0;
    std::vector<std::vector<VertexId>> cycles;
    std::vector<char> visited(g.n, 0);

    if (g.kind == Kind::Directed) {
        for (int start = 0; start < g.n; ++start) {
            if (visited[start]) continue;
            std::vector<VertexId> cyc;
            int v = start;
            while (!visited[v]) {
                visited[v] = 1;
                cyc.push_back(v);
                int next = -1;
                for (int eid : g.out_arcs[v])
                    if (pair.assignment[eid] == want) next = g.edges[eid].head;
                if (next < 0) throw InvalidCover("vertex without outgoing arc on a side");
                v = next;
            }
            cycles.push_back(std::move(cyc));
        }
    } else {
        std::vector<char> used_edge(g.num_edges(), 0);
        for (int start = 0; start < g.n; ++start) {
            if (visited[start]) continue;
            std::vector<VertexId> cyc;
            int v = start;
            int via = -1;
            while (!visited[v]) {
                visited[v] = 1;
                cyc.push_back(v);
                int next_edge = -1;
                for (int eid : g.incident[v])
                    if (pair.assignment[eid] == want && eid != via && !used_edge[eid])
                        next_edge = eid;
                if (next_edge < 0) throw InvalidCover("degree discipline violated on a side");
                used_edge[next_edge] = 1;
                const Edge& e = g.edges[next_edge];
                v = (e.tail == v) ? e.head : e.tail;
                via = next_edge;
            }
            cycles.push_back(std::move(cyc));
        }
    }
    return cycles;
}

}  // namespace

std::pair<int, int> count_components(const CoverPair& pair, const UnionMultigraph& g) {
    if (!cover_valid(pair, g)) throw InvalidCover("cover violates degree invariants");
    auto z = side_cycles(pair, g, true);
    auto w = side_cycles(pair, g, false);
    return {static_cast<int>(z.size()), static_cast<int>(w.size())};
}

std::vector<std::vector<VertexId>> extract_subtours(const CoverPair& pair,
                                                    const UnionMultigraph& g) {
    if (!cover_valid(pair, g)) throw InvalidCover("cover violates degree invariants");
    std::set<std::vector<VertexId>> dedup;
    for (bool side : {true, false}) {
        for (auto& cyc : side_cycles(pair, g, side)) {
            if (static_cast<int>(cyc.size()) == g.n) continue;
            std::sort(cyc.begin(), cyc.end());
            dedup.insert(std::move(cyc));
        }
    }
    return {dedup.begin(), dedup.end()};
}

Certificate certificate_from_cover(const CoverPair& pair, const UnionMultigraph& g) {
    auto z = side_cycles(pair, g, true);
    auto w = side_cycles(pair, g, false);
    if (z.size() != 1 || w.size() != 1)
        throw InvalidCover("cover is not a Hamiltonian decomposition");
    Certificate cert;
    cert.z = HamCycle{std::move(z.front()), g.kind};
    cert.w = HamCycle{std::move(w.front()), g.kind};
    return cert;
}

std::vector<std::pair<VertexId, VertexId>> cycle_edge_set(const HamCycle& c) {
    std::vector<std::pair<VertexId, VertexId>> out;
    const int n = c.n();
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        VertexId a = c.order[i], b = c.order[(i + 1) % n];
        if (c.kind == Kind::Undirected && a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<VertexId, VertexId>> cover_side_edges(const CoverPair& pair,
                                                            const UnionMultigraph& g,
                                                            bool z_side) {
    const std::uint8_t want = z_side ? 1 : 0;
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Edge& e : g.edges)
        if (pair.assignment[e.id] == want) out.emplace_back(e.tail, e.head);
    std::sort(out.begin(), out.end());
    return out;
}

VerifyReport verify_certificate(const HamCycle& x, const HamCycle& y,
                                const UnionMultigraph& g, const Certificate& in_cert) {
    VerifyReport r;

    // Certificate files carry no kind of their own; the instance decides how
    // the stored orders are read.
    Certificate cert = in_cert;
    cert.z.kind = g.kind;
    cert.w.kind = g.kind;

    auto is_ham = [&](const HamCycle& c) {
        if (c.n() != g.n) return false;
        try {
            validate_cycle(c);
        } catch (const InvalidCycle&) {
            return false;
        }
        return true;
    };
    r.hamiltonian_z = is_ham(cert.z);
    r.hamiltonian_w = is_ham(cert.w);

    if (r.hamiltonian_z && r.hamiltonian_w) {
        auto zs = cycle_edge_set(cert.z);
        auto ws = cycle_edge_set(cert.w);
        std::vector<std::pair<VertexId, VertexId>> cert_union;
        cert_union.reserve(zs.size() + ws.size());
        std::merge(zs.begin(), zs.end(), ws.begin(), ws.end(),
                   std::back_inserter(cert_union));

        std::vector<std::pair<VertexId, VertexId>> graph_union;
        graph_union.reserve(g.num_edges());
        for (const Edge& e : g.edges) graph_union.emplace_back(e.tail, e.head);
        std::sort(graph_union.begin(), graph_union.end());

        r.union_partition = cert_union == graph_union;

        auto xs = cycle_edge_set(x);
        auto ys = cycle_edge_set(y);
        r.distinct_from_xy = zs != xs && zs != ys && ws != xs && ws != ys;
    }
    return r;
}

}  // namespace hdec
