#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sge/certificate.hpp"
#include "sge/graph.hpp"

namespace sge {

// Limits for the brute-force search.  Exceeding any limit yields an
// "inconclusive" outcome, never a wrong answer.
struct SearchBudget {
    std::uint64_t max_geodesics_per_pair = 1u << 20;
    std::uint64_t max_nodes = 512u << 20;
    double time_limit_seconds = 0;  // 0 disables the wall clock
    bool parallel = true;           // subset scan; searches stay serial inside
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t subsets_tested = 0;
    double seconds = 0;
};

enum class Feasibility { feasible, infeasible, inconclusive };

// Cover description over graph vertex ids, for generic (non-grid) hosts.
struct IdAssignment {
    int u = 0, v = 0;
    std::vector<int> path;

    bool operator==(const IdAssignment&) const = default;
};
struct IdCover {
    std::vector<int> s;
    std::vector<IdAssignment> assignments;
};

struct CoverSearchResult {
    Feasibility status = Feasibility::inconclusive;
    std::optional<IdCover> witness;  // present iff feasible
    SearchStats stats;
};

// Decides whether S admits an assignment of at most one geodesic per
// unordered pair whose edges cover all of E(g).  Branches on an uncovered
// edge with the fewest (unused pair, geodesic through it) extensions and
// prunes branches where some edge has none.  Requires |S| >= 2, distinct
// in-range ids.
CoverSearchResult feasible_cover(const Graph& g, std::vector<int> s,
                                 const SearchBudget& budget = {});

struct GridCoverResult {
    Feasibility status = Feasibility::inconclusive;
    std::optional<Certificate> witness;
    SearchStats stats;
};

// Grid-flavored wrapper; the witness comes back as a Certificate (and always
// passes verify()).
GridCoverResult feasible_cover(const GridSpec& spec, const std::vector<Vertex>& s,
                               const SearchBudget& budget = {});

struct ExactResult {
    bool solved = false;
    long value = -1;                    // meaningful when solved
    long infeasibility_checked_at = 0;  // all sizes <= this proven infeasible
    long upper_bound = -1;              // bracket top when not solved
    std::optional<Certificate> witness;
    SearchStats stats;
};

// Smallest s in [lower_hint, upper_hint] such that some s-subset of V is
// feasible, by ascending exhaustive subset search with grid-automorphism
// symmetry reduction.  lower_hint < 2 is raised to 2; upper_hint <= 0 means
// "no limit" (vertex count).  Requires a connected grid.  The value is
// schedule-independent; the witness need not be.
ExactResult exact_sge(const GridSpec& spec, const SearchBudget& budget = {},
                      long lower_hint = 2, long upper_hint = 0);

struct ExactCoreResult {
    bool solved = false;
    long value = -1;
    long infeasibility_checked_at = 0;
    long upper_bound = -1;
    std::optional<IdCover> witness;
    SearchStats stats;
};

// Generic-graph core of exact_sge.  `automorphisms` are vertex permutations
// of g used to skip subsets that are not the lexicographic minimum of their
// orbit; pass {} for no reduction.
ExactCoreResult exact_sge(const Graph& g,
                          const std::vector<std::vector<int>>& automorphisms,
                          const SearchBudget& budget = {}, long lower_hint = 2,
                          long upper_hint = 0);

enum class NonexistenceOutcome { proven_infeasible, feasible_witness, inconclusive };

struct NonexistenceResult {
    NonexistenceOutcome outcome = NonexistenceOutcome::inconclusive;
    std::optional<Certificate> witness;  // present iff feasible_witness
    SearchStats stats;
};

// Exhaustive verdict on whether any size-`size` subset of the n-by-m grid is
// a strong edge geodetic set.
NonexistenceResult nonexistence_check(int n, int m, int size,
                                      const SearchBudget& budget = {});

// The automorphisms of the n-by-m grid as vertex-id permutations: identity,
// horizontal and vertical reflections, their composition, and the transposes
// when n = m (group of order 4, or 8 on square grids).
std::vector<std::vector<int>> grid_automorphisms(const GridSpec& spec);

// Minimum over all valid coverings for S of the number of vertical edges of
// column x traversed (with multiplicity), via exhaustive branch and bound;
// nullopt when S is infeasible.  Subtracting m-1 gives the minimum
// redundancy at that column.  Throws on budget exhaustion.
std::optional<long> min_column_vertical_traversals(const GridSpec& spec,
                                                   const std::vector<Vertex>& s,
                                                   int x,
                                                   const SearchBudget& budget = {});

}  // namespace sge
