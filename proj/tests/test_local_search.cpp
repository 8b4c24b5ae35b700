#include <doctest.h>

#include "fixtures.hpp"
#include "hdec/local_search.hpp"
#include "hdec/model.hpp"
#include "hdec/solver.hpp"

using namespace hdec;

namespace {

CoverPair solver_point(const Instance& inst) {
    Model m = build_base_model(inst);
    auto out = solve(m, SolveBudget::unlimited());
    REQUIRE(out.status == SolveOutcome::Status::Feasible);
    return CoverPair{out.assignment};
}

int total_components(const CoverPair& pair, const UnionMultigraph& g) {
    auto [cz, cw] = count_components(pair, g);
    return cz + cw;
}

}  // namespace

TEST_CASE("directed chain fixing closes the reversed 3-cycle") {
    Instance inst = fixtures::reversed3();
    // Start from the valid cover z = y, w = x.
    CoverPair start;
    start.assignment.assign(6, 0);
    for (int e = 3; e < 6; ++e) start.assignment[e] = 1;
    REQUIRE(cover_valid(start, inst.uni));

    LsState st(inst.uni, start);
    // Fix arc 0->1 (edge id 0, from x) in z; closure must produce z = x.
    chain_fix_directed(st, 0, Side::Z);
    for (int e = 0; e < 3; ++e) CHECK(st.pair.assignment[e] == 1);
    for (int e = 3; e < 6; ++e) CHECK(st.pair.assignment[e] == 0);
    CHECK(cover_valid(st.pair, inst.uni));
    CHECK(st.fix_ops <= 2 * inst.n);
}

TEST_CASE("directed closure keeps covers valid and is linear") {
    SplitMix64 rng(67);
    Instance inst = generate_instance(50, Kind::Directed, rng);
    CoverPair pair = solver_point(inst);
    int moves_done = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        LsState st(inst.uni, pair);
        // Pick a random unfixed z-edge and move it to w.
        std::vector<int> zs;
        for (int e = 0; e < inst.uni.num_edges(); ++e)
            if (st.pair.assignment[e] && !st.fixed[e]) zs.push_back(e);
        REQUIRE(!zs.empty());
        int pick = zs[rng.below(zs.size())];
        st.fix_ops = 0;
        chain_fix_directed(st, pick, Side::W);
        CHECK(cover_valid(st.pair, inst.uni));
        CHECK(st.fix_ops <= 2 * inst.n);
        ++moves_done;
    }
    CHECK(moves_done == 1000);
}

TEST_CASE("fixing an edge twice is rejected by the state discipline") {
    Instance inst = fixtures::reversed3();
    CoverPair start;
    start.assignment.assign(6, 0);
    for (int e = 0; e < 3; ++e) start.assignment[e] = 1;
    LsState st(inst.uni, start);
    chain_fix_directed(st, 0, Side::Z);
    // Closure fixed everything; nothing is left to move.
    for (int e = 0; e < 6; ++e) CHECK(st.fixed[e]);
}

TEST_CASE("undirected chain fixing forces the complement at a saturated vertex") {
    Instance inst = fixtures::sample6();
    CoverPair pair = solver_point(inst);
    LsState st(inst.uni, pair);
    // Fix two z-side edges at some vertex, then watch the other two flip to w.
    int v = -1;
    std::array<int, 2> picked{-1, -1};
    for (int cand = 0; cand < inst.n && v < 0; ++cand) {
        int found = 0;
        std::array<int, 2> tmp{-1, -1};
        for (int e : inst.uni.incident[cand])
            if (st.pair.assignment[e] && !st.fixed[e] && found < 2) tmp[found++] = e;
        if (found == 2) {
            v = cand;
            picked = tmp;
        }
    }
    REQUIRE(v >= 0);
    chain_fix_undirected(st, picked[0], Side::Z);
    if (!st.fixed[picked[1]]) chain_fix_undirected(st, picked[1], Side::Z);
    for (int e : inst.uni.incident[v]) CHECK((st.fixed[e] || st.pair.assignment[e] == 0));
}

TEST_CASE("moving the shared copy is impossible by construction") {
    Instance inst = fixtures::sample6();
    CoverPair pair = solver_point(inst);
    LsState st(inst.uni, pair);
    auto [xe, ye] = inst.uni.shared_pairs[0];
    CHECK(st.fixed[xe]);
    CHECK(st.fixed[ye]);
    CHECK(st.pair.assignment[xe] == 1);
    CHECK(st.pair.assignment[ye] == 0);
}

TEST_CASE("repair is a no-op without broken vertices") {
    Instance inst = fixtures::sample6();
    CoverPair pair = solver_point(inst);
    LsState st(inst.uni, pair);
    SplitMix64 rng(1);
    auto before = st.pair.assignment;
    CHECK(repair_broken_vertices(st, rng) == RepairResult::Ok);
    CHECK(st.pair.assignment == before);
}

TEST_CASE("repair restores the degree discipline after a move") {
    SplitMix64 rng(71);
    int repaired = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = generate_instance(12, Kind::Undirected, rng);
        CoverPair pair = solver_point(inst);
        LsState st(inst.uni, pair);
        std::vector<int> zs;
        for (int e = 0; e < inst.uni.num_edges(); ++e)
            if (st.pair.assignment[e] && !st.fixed[e]) zs.push_back(e);
        if (zs.empty()) continue;
        chain_fix_undirected(st, zs[rng.below(zs.size())], Side::W);
        if (repair_broken_vertices(st, rng) == RepairResult::Ok) {
            CHECK(cover_valid(st.pair, inst.uni));
            ++repaired;
        }
    }
    CHECK(repaired > 0);
}

TEST_CASE("repair fails when a broken vertex has only fixed edges") {
    Instance inst = fixtures::sample6();
    CoverPair pair = solver_point(inst);
    LsState st(inst.uni, pair);
    // Break a vertex, then fix all its incident edges so no repair is legal.
    int victim = -1, moved = -1;
    for (int v = 0; v < inst.n && victim < 0; ++v) {
        for (int e : inst.uni.incident[v]) {
            if (st.pair.assignment[e] && !st.fixed[e]) {
                victim = v;
                moved = e;
                break;
            }
        }
    }
    REQUIRE(victim >= 0);
    st.fix_trail.push_back({moved, st.pair.assignment[moved]});
    st.fixed[moved] = 1;
    st.pair.assignment[moved] = 0;
    const Edge& me = inst.uni.edges[moved];
    --st.z_degree[me.tail];
    --st.z_degree[me.head];
    for (int e : inst.uni.incident[victim]) st.fixed[e] = 1;
    for (int e : inst.uni.incident[me.tail == victim ? me.head : me.tail])
        st.fixed[e] = 1;
    SplitMix64 rng(2);
    CHECK(repair_broken_vertices(st, rng) == RepairResult::Failed);
}

TEST_CASE("local search leaves Hamiltonian pairs unchanged") {
    Instance inst = fixtures::sample6();
    CoverPair ham = fixtures::cover_from_z_pairs(
        inst.uni, cycle_edge_set(fixtures::sample6_certificate().z));
    SplitMix64 rng(3);
    CoverPair out = local_search_undirected(ham, inst.uni, LsParams{10}, rng);
    CHECK(out.assignment == ham.assignment);

    Instance dir = fixtures::reversed3();
    CoverPair dham;
    dham.assignment.assign(6, 0);
    for (int e = 0; e < 3; ++e) dham.assignment[e] = 1;
    CoverPair dout = local_search_directed(dham, dir.uni, rng);
    CHECK(dout.assignment == dham.assignment);
}

TEST_CASE("local search never increases the total component count") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 8 + static_cast<int>(rng.below(24));
        Kind kind = rng.below(2) ? Kind::Directed : Kind::Undirected;
        Instance inst = generate_instance(n, kind, rng);
        Model m = build_base_model(inst);
        auto solved = solve(m, SolveBudget::unlimited());
        if (solved.status != SolveOutcome::Status::Feasible) continue;
        CoverPair start{solved.assignment};
        int before = total_components(start, inst.uni);
        CoverPair out = kind == Kind::Directed
                            ? local_search_directed(start, inst.uni, rng)
                            : local_search_undirected(start, inst.uni, LsParams{5}, rng);
        CHECK(cover_valid(out, inst.uni));
        CHECK(total_components(out, inst.uni) <= before);
    }
}

TEST_CASE("a rejected move rolls back bit for bit") {
    SplitMix64 rng(79);
    Instance inst = generate_instance(20, Kind::Undirected, rng);
    CoverPair pair = solver_point(inst);
    LsState st(inst.uni, pair);
    auto before_assignment = st.pair.assignment;
    auto before_fixed = st.fixed;
    std::vector<int> zs;
    for (int e = 0; e < inst.uni.num_edges(); ++e)
        if (st.pair.assignment[e] && !st.fixed[e]) zs.push_back(e);
    REQUIRE(!zs.empty());
    std::size_t mark = st.fix_trail.size();
    chain_fix_undirected(st, zs[0], Side::W);
    repair_broken_vertices(st, rng);
    st.rollback_to(mark);
    CHECK(st.pair.assignment == before_assignment);
    CHECK(st.fixed == before_fixed);
}

TEST_CASE("the triangle cover of twin6 can reach a Hamiltonian pair") {
    Instance inst = fixtures::twin6();
    CoverPair cover = fixtures::twin6_triangle_cover(inst.uni);
    REQUIRE(total_components(cover, inst.uni) == 4);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SplitMix64 rng(seed);
        CoverPair out = local_search_undirected(cover, inst.uni, LsParams{10}, rng);
        int total = total_components(out, inst.uni);
        CHECK(total <= 4);
        if (total == 2) ++successes;
    }
    CHECK(successes >= 1);
}

TEST_CASE("higher attempt limits never hurt on a fixed corpus") {
    int success1 = 0, success10 = 0;
    SplitMix64 gen(83);
    for (int i = 0; i < 100; ++i) {
        Instance inst = generate_instance(16, Kind::Undirected, gen);
        CoverPair start = solver_point(inst);
        SplitMix64 r1(1000 + i), r10(1000 + i);
        if (total_components(local_search_undirected(start, inst.uni, LsParams{1}, r1),
                             inst.uni) == 2)
            ++success1;
        if (total_components(local_search_undirected(start, inst.uni, LsParams{10}, r10),
                             inst.uni) == 2)
            ++success10;
    }
    CHECK(success10 >= success1);
}
