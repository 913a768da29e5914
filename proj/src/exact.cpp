#include "sge/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <climits>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <variant>

#include "sge/formulas.hpp"

namespace sge {

namespace {

// Internal control flow for "stop searching, answer is inconclusive".
struct budget_exhausted {};

using Clock = std::chrono::steady_clock;

struct Ticker {
    const SearchBudget* budget = nullptr;
    std::atomic<std::uint64_t>* nodes = nullptr;
    Clock::time_point start;

    void tick() {
        std::uint64_t n = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > budget->max_nodes) throw budget_exhausted{};
        if (budget->time_limit_seconds > 0 && (n & 0xfffu) == 0) {
            double s = std::chrono::duration<double>(Clock::now() - start).count();
            if (s > budget->time_limit_seconds) throw budget_exhausted{};
        }
    }
};

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- Edge indexing and bit masks -----------------------------------------

using Mask = std::vector<std::uint64_t>;

int mask_words(int bits) { return (bits + 63) / 64; }
void mask_set(Mask& m, int i) { m[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
bool mask_test(const Mask& m, int i) {
    return (m[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}
int mask_count_and(const Mask& a, const Mask& b) {
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

struct EdgeTable {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::int64_t> keys;          // u * V + v, parallel to edges

    int id_of(int u, int v) const {
        if (u > v) std::swap(u, v);
        std::int64_t key = static_cast<std::int64_t>(u) * vertex_count + v;
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        assert(it != keys.end() && *it == key);
        return static_cast<int>(it - keys.begin());
    }
};

EdgeTable make_edge_table(const Graph& g) {
    EdgeTable et;
    et.vertex_count = g.vertex_count();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int w : g.neighbors(u))
            if (w > u) {
                et.edges.emplace_back(u, w);
                et.keys.push_back(static_cast<std::int64_t>(u) * et.vertex_count + w);
            }
    return et;
}

Mask path_mask(const EdgeTable& et, const std::vector<int>& path) {
    Mask m(static_cast<std::size_t>(mask_words(static_cast<int>(et.edges.size()))), 0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        mask_set(m, et.id_of(path[i], path[i + 1]));
    return m;
}

// --- Geodesic catalog ------------------------------------------------------

// Geodesics depend only on the endpoint pair, so they are enumerated once
// per pair and shared across every subset the scan visits.
struct PairGeodesics {
    std::vector<std::vector<int>> paths;
    std::vector<Mask> masks;
    bool truncated = false;
};

struct Catalog {
    const Graph* g = nullptr;
    const EdgeTable* et = nullptr;
    std::size_t limit = 0;
    std::map<std::pair<int, int>, PairGeodesics> store;
    std::mutex mu;

    const PairGeodesics& get(int u, int v) {
        assert(u < v);
        std::lock_guard<std::mutex> lock(mu);
        auto it = store.find({u, v});
        if (it != store.end()) return it->second;
        GeodesicEnumeration e = enumerate_geodesics(*g, u, v, limit);
        PairGeodesics pg;
        pg.truncated = e.truncated;
        pg.paths = std::move(e.paths);
        pg.masks.reserve(pg.paths.size());
        for (const auto& p : pg.paths) pg.masks.push_back(path_mask(*et, p));
        return store.emplace(std::make_pair(u, v), std::move(pg)).first->second;
    }
};

// --- Per-subset search -----------------------------------------------------

struct SubsetSearch {
    int edge_count = 0;
    std::vector<std::pair<int, int>> pair_vertices;   // per pair index, u < v
    std::vector<const PairGeodesics*> pair_geos;      // per pair index
    std::vector<std::vector<std::pair<int, int>>> incidence;  // edge -> (pair, geo)
    bool truncated = false;

    Mask uncovered;
    int uncovered_count = 0;
    std::vector<char> used;
    std::vector<std::pair<int, int>> chosen;
    Ticker* ticker = nullptr;

    // Every assignment set covering E must route some (pair, geodesic)
    // through any fixed uncovered edge, so branching over all live options
    // at one such edge loses no solution.  Picking the edge with the fewest
    // options keeps the tree narrow and detects dead ends immediately.
    bool search() {
        ticker->tick();
        if (uncovered_count == 0) return true;
        int best_edge = -1;
        int best_options = INT_MAX;
        for (int e = 0; e < edge_count && best_options > 0; ++e) {
            if (!mask_test(uncovered, e)) continue;
            int options = 0;
            for (const auto& [p, gi] : incidence[static_cast<std::size_t>(e)])
                if (!used[static_cast<std::size_t>(p)]) ++options;
            if (options < best_options) {
                best_options = options;
                best_edge = e;
            }
        }
        if (best_options == 0) return false;
        for (const auto& [p, gi] : incidence[static_cast<std::size_t>(best_edge)]) {
            if (used[static_cast<std::size_t>(p)]) continue;
            const Mask& mk = pair_geos[static_cast<std::size_t>(p)]->masks[static_cast<std::size_t>(gi)];
            Mask delta(uncovered.size());
            int newly = 0;
            for (std::size_t w = 0; w < uncovered.size(); ++w) {
                delta[w] = mk[w] & uncovered[w];
                uncovered[w] &= ~mk[w];
                newly += std::popcount(delta[w]);
            }
            used[static_cast<std::size_t>(p)] = 1;
            uncovered_count -= newly;
            chosen.emplace_back(p, gi);
            if (search()) return true;
            chosen.pop_back();
            uncovered_count += newly;
            used[static_cast<std::size_t>(p)] = 0;
            for (std::size_t w = 0; w < uncovered.size(); ++w) uncovered[w] |= delta[w];
        }
        return false;
    }
};

SubsetSearch make_subset_search(const EdgeTable& et, Catalog& cat,
                                const std::vector<int>& s, Ticker& ticker) {
    SubsetSearch ss;
    ss.edge_count = static_cast<int>(et.edges.size());
    ss.incidence.resize(et.edges.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const PairGeodesics& pg = cat.get(s[i], s[j]);
            int p = static_cast<int>(ss.pair_geos.size());
            ss.pair_vertices.emplace_back(s[i], s[j]);
            ss.pair_geos.push_back(&pg);
            ss.truncated = ss.truncated || pg.truncated;
            for (std::size_t gi = 0; gi < pg.masks.size(); ++gi)
                for (int e = 0; e < ss.edge_count; ++e)
                    if (mask_test(pg.masks[gi], e))
                        ss.incidence[static_cast<std::size_t>(e)].emplace_back(
                            p, static_cast<int>(gi));
        }
    ss.uncovered.assign(static_cast<std::size_t>(mask_words(ss.edge_count)), 0);
    for (int e = 0; e < ss.edge_count; ++e) mask_set(ss.uncovered, e);
    ss.uncovered_count = ss.edge_count;
    ss.used.assign(ss.pair_geos.size(), 0);
    ss.ticker = &ticker;
    return ss;
}

IdCover chosen_to_cover(const SubsetSearch& ss, const std::vector<int>& s) {
    IdCover cover;
    cover.s = s;
    for (const auto& [p, gi] : ss.chosen) {
        const auto& [u, v] = ss.pair_vertices[static_cast<std::size_t>(p)];
        cover.assignments.push_back(
            {u, v, ss.pair_geos[static_cast<std::size_t>(p)]->paths[static_cast<std::size_t>(gi)]});
    }
    return cover;
}

std::vector<int> checked_sorted_ids(const Graph& g, std::vector<int> s) {
    if (s.size() < 2) throw std::invalid_argument("need at least two vertices");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("duplicate vertex in S");
    if (s.front() < 0 || s.back() >= g.vertex_count())
        throw std::invalid_argument("vertex id out of range");
    return s;
}

// --- Subset enumeration ----------------------------------------------------

// Saturating Pascal triangle; anything at or above the cap behaves as
// "too many to unrank", which forces the serial scan path.
constexpr std::uint64_t kBinomCap = 1ull << 62;

std::vector<std::vector<std::uint64_t>> binom_table(int n) {
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) {
            std::uint64_t v = c[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] +
                              c[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                std::min(v, kBinomCap);
        }
    }
    return c;
}

std::uint64_t binom_at(const std::vector<std::vector<std::uint64_t>>& c, int n, int k) {
    if (k < 0 || k > n) return 0;
    return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Lexicographic combination of rank r out of C(n, k).
void unrank_combination(const std::vector<std::vector<std::uint64_t>>& c, int n, int k,
                        std::uint64_t r, std::vector<int>& out) {
    out.clear();
    int a = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binom_at(c, n - 1 - a, k - 1 - i);
            if (r < block) break;
            r -= block;
            ++a;
        }
        out.push_back(a);
        ++a;
    }
}

bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < n - k + i) {
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
            return true;
        }
    }
    return false;
}

// True when `subset` (sorted) is the lexicographically smallest member of
// its orbit under the given vertex permutations.
bool orbit_minimal(const std::vector<int>& subset,
                   const std::vector<std::vector<int>>& automorphisms) {
    std::vector<int> image(subset.size());
    for (const auto& pi : automorphisms) {
        for (std::size_t i = 0; i < subset.size(); ++i)
            image[i] = pi[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])];
        std::sort(image.begin(), image.end());
        if (std::lexicographical_compare(image.begin(), image.end(), subset.begin(),
                                         subset.end()))
            return false;
    }
    return true;
}

struct SizeScan {
    bool found = false;
    bool inconclusive = false;  // truncation or exhausted budget
    IdCover cover;
    std::uint64_t subsets_tested = 0;
};

// Tests every orbit-minimal subset of the given size for feasibility.
SizeScan scan_size(const EdgeTable& et, Catalog& cat,
                   const std::vector<std::vector<int>>& automorphisms, int n, int size,
                   const SearchBudget& budget, Ticker& ticker) {
    SizeScan out;
    const auto binom = binom_table(n);
    const std::uint64_t total = binom_at(binom, n, size);
    std::atomic<bool> found{false};
    std::atomic<bool> stop{false};
    std::atomic<bool> inconclusive{false};
    std::atomic<std::uint64_t> tested{0};
    std::mutex result_mu;

    auto test_subset = [&](const std::vector<int>& comb) {
        ticker.tick();
        if (!orbit_minimal(comb, automorphisms)) return;
        SubsetSearch ss = make_subset_search(et, cat, comb, ticker);
        tested.fetch_add(1, std::memory_order_relaxed);
        if (ss.search()) {
            std::lock_guard<std::mutex> lock(result_mu);
            if (!found.load()) {
                out.cover = chosen_to_cover(ss, comb);
                found.store(true);
            }
            stop.store(true);
        } else if (ss.truncated) {
            // A cover might hide among the geodesics beyond the cap.
            inconclusive.store(true);
        }
    };

    if (budget.parallel && total < kBinomCap) {
        const std::int64_t n_ranks = static_cast<std::int64_t>(total);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (std::int64_t r = 0; r < n_ranks; ++r) {
            if (stop.load(std::memory_order_relaxed)) continue;
            std::vector<int> comb;
            unrank_combination(binom, n, size, static_cast<std::uint64_t>(r), comb);
            try {
                test_subset(comb);
            } catch (const budget_exhausted&) {
                inconclusive.store(true);
                stop.store(true);
            }
        }
    } else {
        std::vector<int> comb(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
        try {
            do {
                if (stop.load()) break;
                test_subset(comb);
            } while (next_combination(comb, n));
        } catch (const budget_exhausted&) {
            inconclusive.store(true);
        }
    }

    out.found = found.load();
    out.inconclusive = !out.found && inconclusive.load();
    out.subsets_tested = tested.load();
    return out;
}

Certificate cover_to_certificate(const GridSpec& spec, const IdCover& cover) {
    Certificate cert{spec, {}, {}};
    for (int id : cover.s) cert.s.push_back(spec.vertex_at(id));
    std::sort(cert.s.begin(), cert.s.end());
    for (const IdAssignment& ia : cover.assignments) {
        Path p;
        p.vertices.reserve(ia.path.size());
        for (int id : ia.path) p.vertices.push_back(spec.vertex_at(id));
        const Vertex u = spec.vertex_at(ia.u), v = spec.vertex_at(ia.v);
        cert.paths.push_back({std::min(u, v), std::max(u, v), std::move(p)});
    }
    return cert;
}

}  // namespace

CoverSearchResult feasible_cover(const Graph& g, std::vector<int> s,
                                 const SearchBudget& budget) {
    s = checked_sorted_ids(g, std::move(s));
    CoverSearchResult res;
    auto start = Clock::now();
    std::atomic<std::uint64_t> nodes{0};
    Ticker ticker{&budget, &nodes, start};
    EdgeTable et = make_edge_table(g);
    Catalog cat{&g, &et, static_cast<std::size_t>(budget.max_geodesics_per_pair), {}, {}};
    res.stats.subsets_tested = 1;
    try {
        SubsetSearch ss = make_subset_search(et, cat, s, ticker);
        if (ss.search()) {
            res.status = Feasibility::feasible;
            res.witness = chosen_to_cover(ss, s);
        } else {
            res.status = ss.truncated ? Feasibility::inconclusive : Feasibility::infeasible;
        }
    } catch (const budget_exhausted&) {
        res.status = Feasibility::inconclusive;
    }
    res.stats.nodes = nodes.load();
    res.stats.seconds = elapsed_seconds(start);
    return res;
}

GridCoverResult feasible_cover(const GridSpec& spec, const std::vector<Vertex>& s,
                               const SearchBudget& budget) {
    Graph g = grid_graph(spec);
    std::vector<int> ids;
    ids.reserve(s.size());
    for (Vertex v : s) ids.push_back(spec.index_of(v));
    CoverSearchResult core = feasible_cover(g, std::move(ids), budget);
    GridCoverResult res;
    res.status = core.status;
    res.stats = core.stats;
    if (core.witness) res.witness = cover_to_certificate(spec, *core.witness);
    return res;
}

ExactCoreResult exact_sge(const Graph& g,
                          const std::vector<std::vector<int>>& automorphisms,
                          const SearchBudget& budget, long lower_hint, long upper_hint) {
    const int v_count = g.vertex_count();
    const long lower = std::max(2l, lower_hint);
    const long upper =
        upper_hint > 0 ? std::min<long>(upper_hint, v_count) : v_count;

    ExactCoreResult res;
    auto start = Clock::now();
    std::atomic<std::uint64_t> nodes{0};
    Ticker ticker{&budget, &nodes, start};

    if (g.edge_count() == 0) {
        res.solved = true;
        res.value = 0;
        res.witness = IdCover{};
        res.stats.seconds = elapsed_seconds(start);
        return res;
    }

    EdgeTable et = make_edge_table(g);
    Catalog cat{&g, &et, static_cast<std::size_t>(budget.max_geodesics_per_pair), {}, {}};
    std::vector<std::vector<int>> autos = automorphisms;
    if (autos.empty()) {
        std::vector<int> identity(static_cast<std::size_t>(v_count));
        for (int i = 0; i < v_count; ++i) identity[static_cast<std::size_t>(i)] = i;
        autos.push_back(std::move(identity));
    }

    // Sizes 0 and 1 admit no vertex pair, hence cover nothing.
    long checked = 1;
    for (long size = lower; size <= upper; ++size) {
        SizeScan scan = scan_size(et, cat, autos, v_count, static_cast<int>(size),
                                  budget, ticker);
        res.stats.subsets_tested += scan.subsets_tested;
        if (scan.found) {
            res.solved = true;
            res.value = size;
            res.witness = std::move(scan.cover);
            break;
        }
        if (scan.inconclusive) break;  // larger sizes cannot restore certainty
        if (size == checked + 1) checked = size;
    }
    res.infeasibility_checked_at = checked;
    res.stats.nodes = nodes.load();
    res.stats.seconds = elapsed_seconds(start);
    return res;
}

ExactResult exact_sge(const GridSpec& spec, const SearchBudget& budget, long lower_hint,
                      long upper_hint) {
    Graph g = grid_graph(spec);
    long upper = upper_hint;
    if (upper <= 0) {
        auto bound = sge_grid(spec.n, spec.m);
        upper = std::holds_alternative<long>(bound)
                    ? std::get<long>(bound)
                    : std::get<BoundBracket>(bound).upper;
    }
    ExactCoreResult core =
        exact_sge(g, grid_automorphisms(spec), budget, lower_hint, upper);
    ExactResult res;
    res.solved = core.solved;
    res.value = core.value;
    res.infeasibility_checked_at = core.infeasibility_checked_at;
    res.upper_bound = core.solved ? core.value : upper;
    res.stats = core.stats;
    if (core.witness) res.witness = cover_to_certificate(spec, *core.witness);
    return res;
}

NonexistenceResult nonexistence_check(int n, int m, int size,
                                      const SearchBudget& budget) {
    GridSpec spec(n, m);
    if (size < 0 || size > spec.vertex_count())
        throw std::invalid_argument("subset size out of range");
    NonexistenceResult res;
    auto start = Clock::now();
    if (size < 2) {
        // No pair exists, so nothing is covered and the grid has edges.
        res.outcome = spec.edge_count() == 0 ? NonexistenceOutcome::feasible_witness
                                             : NonexistenceOutcome::proven_infeasible;
        if (res.outcome == NonexistenceOutcome::feasible_witness)
            res.witness = Certificate{spec, {}, {}};
        res.stats.seconds = elapsed_seconds(start);
        return res;
    }
    Graph g = grid_graph(spec);
    std::atomic<std::uint64_t> nodes{0};
    Ticker ticker{&budget, &nodes, start};
    EdgeTable et = make_edge_table(g);
    Catalog cat{&g, &et, static_cast<std::size_t>(budget.max_geodesics_per_pair), {}, {}};
    SizeScan scan = scan_size(et, cat, grid_automorphisms(spec), g.vertex_count(), size,
                              budget, ticker);
    res.stats.subsets_tested = scan.subsets_tested;
    res.stats.nodes = nodes.load();
    res.stats.seconds = elapsed_seconds(start);
    if (scan.found) {
        res.outcome = NonexistenceOutcome::feasible_witness;
        res.witness = cover_to_certificate(spec, scan.cover);
    } else {
        res.outcome = scan.inconclusive ? NonexistenceOutcome::inconclusive
                                        : NonexistenceOutcome::proven_infeasible;
    }
    return res;
}

std::vector<std::vector<int>> grid_automorphisms(const GridSpec& spec) {
    const int n = spec.n, m = spec.m;
    std::vector<std::vector<int>> out;
    auto add = [&](auto f) {
        std::vector<int> pi(static_cast<std::size_t>(spec.vertex_count()));
        for (int id = 0; id < spec.vertex_count(); ++id)
            pi[static_cast<std::size_t>(id)] = spec.index_of(f(spec.vertex_at(id)));
        out.push_back(std::move(pi));
    };
    add([&](Vertex v) { return v; });
    add([&](Vertex v) { return Vertex{n + 1 - v.x, v.y}; });
    add([&](Vertex v) { return Vertex{v.x, m + 1 - v.y}; });
    add([&](Vertex v) { return Vertex{n + 1 - v.x, m + 1 - v.y}; });
    if (n == m) {
        add([&](Vertex v) { return Vertex{v.y, v.x}; });
        add([&](Vertex v) { return Vertex{n + 1 - v.y, v.x}; });
        add([&](Vertex v) { return Vertex{v.y, m + 1 - v.x}; });
        add([&](Vertex v) { return Vertex{n + 1 - v.y, m + 1 - v.x}; });
    }
    return out;
}

std::optional<long> min_column_vertical_traversals(const GridSpec& spec,
                                                   const std::vector<Vertex>& s, int x,
                                                   const SearchBudget& budget) {
    if (x < 1 || x > spec.n) throw std::invalid_argument("column out of range");
    Graph g = grid_graph(spec);
    std::vector<int> ids;
    ids.reserve(s.size());
    for (Vertex v : s) ids.push_back(spec.index_of(v));
    ids = checked_sorted_ids(g, std::move(ids));

    auto start = Clock::now();
    std::atomic<std::uint64_t> nodes{0};
    Ticker ticker{&budget, &nodes, start};
    EdgeTable et = make_edge_table(g);
    Catalog cat{&g, &et, static_cast<std::size_t>(budget.max_geodesics_per_pair), {}, {}};

    try {
        SubsetSearch ss = make_subset_search(et, cat, ids, ticker);
        if (ss.truncated)
            throw std::runtime_error(
                "geodesic enumeration exceeded max_geodesics_per_pair; the minimum "
                "would not be trustworthy");

        // Traversal count of column x per (pair, geodesic).
        Mask colx(ss.uncovered.size(), 0);
        for (std::size_t e = 0; e < et.edges.size(); ++e) {
            Vertex a = spec.vertex_at(et.edges[e].first);
            Vertex b = spec.vertex_at(et.edges[e].second);
            if (a.x == x && b.x == x) mask_set(colx, static_cast<int>(e));
        }
        std::vector<std::vector<long>> cost(ss.pair_geos.size());
        for (std::size_t p = 0; p < ss.pair_geos.size(); ++p)
            for (const Mask& mk : ss.pair_geos[p]->masks)
                cost[p].push_back(mask_count_and(mk, colx));

        long best = LONG_MAX;
        // Same edge-driven branching as the feasibility search, but explores
        // every cover; each still-uncovered vertical edge of column x needs
        // at least one traversal, which gives the bound for pruning.
        auto dfs = [&](auto&& self, long acc) -> void {
            ticker.tick();
            if (ss.uncovered_count == 0) {
                best = std::min(best, acc);
                return;
            }
            if (acc + mask_count_and(ss.uncovered, colx) >= best) return;
            int best_edge = -1;
            int best_options = INT_MAX;
            for (int e = 0; e < ss.edge_count && best_options > 0; ++e) {
                if (!mask_test(ss.uncovered, e)) continue;
                int options = 0;
                for (const auto& [p, gi] : ss.incidence[static_cast<std::size_t>(e)])
                    if (!ss.used[static_cast<std::size_t>(p)]) ++options;
                if (options < best_options) {
                    best_options = options;
                    best_edge = e;
                }
            }
            if (best_options == 0) return;
            for (const auto& [p, gi] : ss.incidence[static_cast<std::size_t>(best_edge)]) {
                if (ss.used[static_cast<std::size_t>(p)]) continue;
                const Mask& mk =
                    ss.pair_geos[static_cast<std::size_t>(p)]->masks[static_cast<std::size_t>(gi)];
                Mask delta(ss.uncovered.size());
                int newly = 0;
                for (std::size_t w = 0; w < ss.uncovered.size(); ++w) {
                    delta[w] = mk[w] & ss.uncovered[w];
                    ss.uncovered[w] &= ~mk[w];
                    newly += std::popcount(delta[w]);
                }
                ss.used[static_cast<std::size_t>(p)] = 1;
                ss.uncovered_count -= newly;
                self(self, acc + cost[static_cast<std::size_t>(p)][static_cast<std::size_t>(gi)]);
                ss.uncovered_count += newly;
                ss.used[static_cast<std::size_t>(p)] = 0;
                for (std::size_t w = 0; w < ss.uncovered.size(); ++w)
                    ss.uncovered[w] |= delta[w];
            }
        };
        dfs(dfs, 0);
        if (best == LONG_MAX) return std::nullopt;
        return best;
    } catch (const budget_exhausted&) {
        throw std::runtime_error("search budget exhausted");
    }
}

}  // namespace sge
