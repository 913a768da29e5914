#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "sge/exact.hpp"
#include "sge/formulas.hpp"

using namespace sge;

namespace {

Graph path_graph(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("hand-checked values on small non-grid graphs") {
    // A path needs only its two endpoints.
    ExactCoreResult p5 = exact_sge(path_graph(5), {});
    CHECK(p5.solved);
    CHECK(p5.value == 2);
    REQUIRE(p5.witness.has_value());
    CHECK(p5.witness->s.size() == 2);
    CHECK(p5.witness->assignments.size() == 1);

    // Star with three leaves: any two-leaf geodesic misses the third edge,
    // and pairs through the hub cover one edge each.
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    ExactCoreResult st = exact_sge(star, {});
    CHECK(st.value == 3);
    CHECK(st.infeasibility_checked_at == 2);

    // Four-cycle: three vertices can route one pair the long way around.
    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK(exact_sge(c4, {}).value == 3);

    // Complete graph: every geodesic is a single edge, so S must be all of V.
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    ExactCoreResult k = exact_sge(k4, {});
    CHECK(k.value == 4);
    CHECK(k.infeasibility_checked_at == 3);

    // No edges: the empty set covers them all.
    CHECK(exact_sge(Graph(3), {}).value == 0);
}

TEST_CASE("grid values with contiguous infeasibility checks and witnesses") {
    const struct {
        int n, m;
        long value;
    } rows[] = {{2, 2, 3}, {4, 3, 5}, {2, 4, 4}, {3, 4, 5}};
    for (const auto& r : rows) {
        CAPTURE(r.n);
        CAPTURE(r.m);
        ExactResult res = exact_sge(GridSpec(r.n, r.m));
        CHECK(res.solved);
        CHECK(res.value == r.value);
        CHECK(res.infeasibility_checked_at == r.value - 1);
        CHECK(res.upper_bound == r.value);
        REQUIRE(res.witness.has_value());
        CHECK(verify(*res.witness).valid);
        CHECK(res.witness->s.size() == static_cast<std::size_t>(r.value));
    }
}

TEST_CASE("parallel and serial scans agree on the value") {
    SearchBudget serial;
    serial.parallel = false;
    for (auto [n, m] : {std::pair{4, 3}, {4, 4}}) {
        ExactResult a = exact_sge(GridSpec(n, m));
        ExactResult b = exact_sge(GridSpec(n, m), serial);
        CHECK(a.solved);
        CHECK(b.solved);
        CHECK(a.value == b.value);
        CHECK(a.infeasibility_checked_at == b.infeasibility_checked_at);
    }
}

TEST_CASE("search hints narrow the scan without inventing claims") {
    // Starting above 2 skips sizes, so no infeasibility below is claimed.
    ExactResult hinted = exact_sge(GridSpec(4, 3), {}, 5, 5);
    CHECK(hinted.solved);
    CHECK(hinted.value == 5);
    CHECK(hinted.infeasibility_checked_at == 1);

    // Capping below the true value yields "unsolved" plus a checked range.
    ExactResult capped = exact_sge(GridSpec(4, 3), {}, 2, 3);
    CHECK(!capped.solved);
    CHECK(capped.value == -1);
    CHECK(capped.infeasibility_checked_at == 3);
}

TEST_CASE("node budget exhaustion is reported, not guessed around") {
    SearchBudget tiny;
    tiny.max_nodes = 64;
    ExactResult res = exact_sge(GridSpec(4, 4), tiny);
    CHECK(!res.solved);
    CHECK(res.value == -1);
    CHECK(res.infeasibility_checked_at == 1);  // nothing beyond the trivial sizes
    CHECK(res.upper_bound == 5);               // closed form still known
}

TEST_CASE("geodesic cap truncation turns infeasible into inconclusive") {
    const GridSpec spec(3, 3);
    const std::vector<Vertex> diag{{1, 1}, {3, 3}};
    SearchBudget tight;
    tight.max_geodesics_per_pair = 2;
    CHECK(feasible_cover(spec, diag, tight).status == Feasibility::inconclusive);
    // With the full catalog the same set is provably infeasible.
    CHECK(feasible_cover(spec, diag).status == Feasibility::infeasible);
}

TEST_CASE("cover feasibility on hand-sized sets") {
    const GridSpec spec(2, 2);
    GridCoverResult good = feasible_cover(spec, {{1, 1}, {2, 1}, {1, 2}});
    REQUIRE(good.status == Feasibility::feasible);
    REQUIRE(good.witness.has_value());
    CHECK(verify(*good.witness).valid);
    CHECK(good.witness->s == std::vector<Vertex>{{1, 1}, {1, 2}, {2, 1}});  // sorted

    CHECK(feasible_cover(spec, {{1, 1}, {2, 2}}).status == Feasibility::infeasible);
    CHECK(feasible_cover(spec, {{1, 1}, {2, 1}}).status == Feasibility::infeasible);

    Graph g = grid_graph(spec);
    CHECK_THROWS_AS(feasible_cover(g, {0}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_cover(g, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_cover(g, {0, 99}), std::invalid_argument);
}

TEST_CASE("exhaustive verdicts for a fixed subset size") {
    NonexistenceResult no2 = nonexistence_check(2, 2, 2);
    CHECK(no2.outcome == NonexistenceOutcome::proven_infeasible);
    NonexistenceResult yes3 = nonexistence_check(2, 2, 3);
    REQUIRE(yes3.outcome == NonexistenceOutcome::feasible_witness);
    REQUIRE(yes3.witness.has_value());
    CHECK(verify(*yes3.witness).valid);

    CHECK(nonexistence_check(3, 3, 3).outcome == NonexistenceOutcome::proven_infeasible);
    CHECK(nonexistence_check(3, 3, 4).outcome == NonexistenceOutcome::feasible_witness);
    CHECK_THROWS_AS(nonexistence_check(2, 2, 9), std::invalid_argument);
}

TEST_CASE("grid automorphisms preserve adjacency") {
    for (auto [n, m, order] : {std::tuple{3, 2, 4}, {3, 3, 8}, {5, 4, 4}}) {
        GridSpec spec(n, m);
        Graph g = grid_graph(spec);
        auto autos = grid_automorphisms(spec);
        CHECK(autos.size() == static_cast<std::size_t>(order));
        std::set<std::vector<int>> distinct(autos.begin(), autos.end());
        CHECK(distinct.size() == autos.size());
        for (const auto& pi : autos) {
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v : g.neighbors(u))
                    CHECK(g.adjacent(pi[static_cast<std::size_t>(u)],
                                     pi[static_cast<std::size_t>(v)]));
        }
    }
}

TEST_CASE("minimum column traversals over all coverings") {
    const GridSpec spec(2, 2);
    const std::vector<Vertex> s{{1, 1}, {2, 1}, {1, 2}};
    // The only valid covering routes (1,2)-(2,1) through (2,2), so each
    // column's single vertical edge is traversed exactly once.
    CHECK(min_column_vertical_traversals(spec, s, 1) == 1);
    CHECK(min_column_vertical_traversals(spec, s, 2) == 1);
    // Infeasible sets have no covering to minimize over.
    CHECK(min_column_vertical_traversals(spec, {{1, 1}, {2, 2}}, 1) == std::nullopt);
    CHECK_THROWS_AS(min_column_vertical_traversals(spec, s, 3), std::invalid_argument);

    SearchBudget tight;
    tight.max_geodesics_per_pair = 2;
    CHECK_THROWS_AS(
        min_column_vertical_traversals(GridSpec(3, 3), {{1, 1}, {3, 3}, {1, 3}}, 1, tight),
        std::runtime_error);
}

namespace {

// All minimum-size covering sets of the n-by-4 grid, by direct enumeration.
std::vector<std::vector<Vertex>> minimal_covering_sets(int n) {
    const GridSpec spec(n, 4);
    const int v_count = spec.vertex_count();
    const auto size = static_cast<std::size_t>(sge_p4(n));
    std::vector<std::vector<Vertex>> out;
    std::vector<int> comb(size);
    for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<int>(i);
    while (true) {
        std::vector<Vertex> vs;
        vs.reserve(size);
        for (int id : comb) vs.push_back(spec.vertex_at(id));
        if (feasible_cover(spec, vs).status == Feasibility::feasible) out.push_back(vs);
        // next lexicographic combination
        int i = static_cast<int>(size) - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] ==
                             v_count - static_cast<int>(size) + i)
            --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (auto j = static_cast<std::size_t>(i) + 1; j < size; ++j)
            comb[j] = comb[j - 1] + 1;
    }
    return out;
}

// The boundary-column floors are statements about coverings in which every
// pair of S carries a geodesic (the redundancy sum runs over all pairs).
// This DFS minimizes the column-x vertical traversal total over exactly
// those coverings: one geodesic per pair, chosen freely, union covering E.
struct StrictAssignmentScan {
    std::vector<std::vector<std::pair<long, std::uint32_t>>> options;  // per pair
    std::vector<std::uint32_t> suffix_possible;
    std::vector<long> suffix_min_cost;
    std::uint32_t full = 0;
    long best = LONG_MAX;
    std::uint64_t nodes = 0;

    void dfs(std::size_t i, std::uint32_t covered, long cost) {
        ++nodes;
        if (cost + suffix_min_cost[i] >= best) return;
        if ((full & ~(covered | suffix_possible[i])) != 0) return;
        if (i == options.size()) {
            if (covered == full) best = cost;
            return;
        }
        for (auto [c, mask] : options[i]) dfs(i + 1, covered | mask, cost + c);
    }
};

// Minimum number of column-x vertical edges traversed, with multiplicity,
// over every all-pairs covering for S; LONG_MAX when S admits none.
long min_strict_column_traversals(const GridSpec& spec, const std::vector<Vertex>& s, int x) {
    const Graph g = grid_graph(spec);
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<bool> col_edge;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                const Vertex a = spec.vertex_at(u), b = spec.vertex_at(v);
                edge_id[{u, v}] = static_cast<int>(col_edge.size());
                col_edge.push_back(a.x == x && b.x == x);
            }
    REQUIRE(col_edge.size() <= 32);

    StrictAssignmentScan scan;
    scan.full = (col_edge.size() == 32) ? ~0u : ((1u << col_edge.size()) - 1u);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            auto geos =
                enumerate_geodesics(g, spec.index_of(s[i]), spec.index_of(s[j]), 1u << 20);
            REQUIRE(!geos.truncated);
            std::vector<std::pair<long, std::uint32_t>> opts;
            for (const auto& path : geos.paths) {
                long cost = 0;
                std::uint32_t mask = 0;
                for (std::size_t t = 0; t + 1 < path.size(); ++t) {
                    int e = edge_id.at(std::minmax(path[t], path[t + 1]));
                    mask |= 1u << e;
                    cost += col_edge[static_cast<std::size_t>(e)];
                }
                opts.emplace_back(cost, mask);
            }
            std::sort(opts.begin(), opts.end());
            scan.options.push_back(std::move(opts));
        }
    // Assign expensive, low-choice pairs first so the bound bites early.
    std::sort(scan.options.begin(), scan.options.end(),
              [](const auto& a, const auto& b) {
                  return std::pair(-a.front().first, a.size()) <
                         std::pair(-b.front().first, b.size());
              });
    scan.suffix_possible.assign(scan.options.size() + 1, 0);
    scan.suffix_min_cost.assign(scan.options.size() + 1, 0);
    for (std::size_t i = scan.options.size(); i-- > 0;) {
        std::uint32_t all = 0;
        for (auto [c, mask] : scan.options[i]) all |= mask;
        scan.suffix_possible[i] = scan.suffix_possible[i + 1] | all;
        scan.suffix_min_cost[i] = scan.suffix_min_cost[i + 1] + scan.options[i].front().first;
    }
    scan.dfs(0, 0, 0);
    REQUIRE(scan.nodes < 100'000'000);  // exhaustive, not heuristic
    return scan.best;
}

}  // namespace

TEST_CASE("boundary-column redundancy floors hold across all minimal coverings") {
    // Coverings that assign a geodesic to every pair of S pay a typed price
    // at column 1: the column's three vertical edges are traversed at least
    // 3 + floor(type) times, however the geodesics are chosen.
    std::map<char, long> observed_floor;
    for (int n : {2, 3, 4}) {
        const GridSpec spec(n, 4);
        for (const auto& vs : minimal_covering_sets(n)) {
            const Certificate shell{spec, vs, {}};
            const ColumnType type = classify_column(shell, 1);
            if (type == ColumnType::untyped) continue;
            const long traversals = min_strict_column_traversals(spec, vs, 1);
            REQUIRE(traversals != LONG_MAX);
            const long extra = traversals - 3;
            CHECK(extra >= min_redundancy_of_type(type));
            auto [it, fresh] = observed_floor.try_emplace(column_type_name(type), extra);
            if (!fresh) it->second = std::min(it->second, extra);
        }
    }
    // Every type except the full column arises in some minimum covering of
    // these grids, and each floor is attained exactly — including C's floor
    // of 4, the sharper of the two candidate values for that type.
    const std::map<char, long> expected{{'B', 2}, {'C', 4}, {'D', 1}, {'E', 1},
                                        {'F', 2}, {'G', 0}, {'H', 3}, {'I', 1}};
    CHECK(observed_floor == expected);
}
