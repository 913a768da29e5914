#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sge/grid.hpp"

namespace sge {

// One geodesic assigned to an unordered pair {a,b} of certificate vertices.
// The path's vertex sequence runs from a to b or from b to a.
struct Assignment {
    Vertex a, b;
    Path path;

    bool operator==(const Assignment&) const = default;
};

// A candidate strong edge geodetic covering: a vertex set S together with at
// most one assigned geodesic per unordered pair of S.  The certificate is
// valid when the assigned paths are geodesics with endpoints in S, no pair
// appears twice, and the path edges together cover every grid edge.
struct Certificate {
    GridSpec grid{1, 1};
    std::vector<Vertex> s;
    std::vector<Assignment> paths;

    bool operator==(const Certificate&) const = default;
};

struct VerifyReport {
    bool valid = false;
    // Grid edges covered by no counted assignment, canonically ordered.
    std::vector<Edge> uncovered_edges;
    // Indices into Certificate::paths whose path is not a geodesic between
    // its own pair (broken adjacency, repeated or out-of-grid vertex, wrong
    // endpoints, or longer than the distance).
    std::vector<std::size_t> non_geodesic_paths;
    // Indices whose pair has an endpoint outside S.
    std::vector<std::size_t> foreign_endpoints;
    // Pairs assigned more than one path (listed once each).
    std::vector<std::pair<Vertex, Vertex>> duplicate_pairs;

    std::size_t covered_edge_count = 0;
    // Entry x-1 is the total number of vertical edges of column x covered by
    // the assignments, counted with multiplicity across paths.
    std::vector<long> column_vertical_coverage;
};

// True iff p is a geodesic of the grid: in bounds, consecutive vertices
// adjacent, no repeats, length equal to the Manhattan distance of its ends.
bool is_geodesic(const GridSpec& g, const Path& p);

// Checks a certificate against the covering definition.  Edges are counted
// as covered only by assignments that are valid geodesics, have both
// endpoints in S, and are the first occurrence of their pair; defective
// assignments are reported instead.  Never throws: every problem is a
// reported defect.
VerifyReport verify(const Certificate& c);

// The vertical edges of column x that lie on p, canonically ordered.
std::vector<Edge> column_vertical_edges(const Path& p, int x);

// Sum over all assignments of the number of vertical edges of column x they
// cover, minus (m - 1).  A covering that uses column x's vertical edges only
// once has redundancy 0 there; an untouched column gives -(m-1).
long redundancy(const Certificate& c, int x);

// Reflection of the certificate across the main diagonal: swaps rows with
// columns, turning an n-by-m certificate into an m-by-n one.
Certificate transposed(const Certificate& c);

}  // namespace sge
