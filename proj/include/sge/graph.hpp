#pragma once

#include <cstddef>
#include <vector>

#include "sge/grid.hpp"

namespace sge {

// Simple undirected graph on vertex ids 0..vertex_count()-1.
class Graph {
public:
    explicit Graph(int vertex_count);

    // Rejects loops, out-of-range endpoints and duplicate edges.
    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }
    bool adjacent(int u, int v) const;
    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::vector<int>> adj_;
};

Graph grid_graph(const GridSpec& spec);

// BFS distance; returns -1 when v is unreachable from u.
int distance(const Graph& g, int u, int v);

struct GeodesicEnumeration {
    // Vertex-id sequences from u to v, in lexicographic order by sequence.
    std::vector<std::vector<int>> paths;
    // True when more geodesics exist beyond `limit`.
    bool truncated = false;
};

// Enumerates shortest u,v-paths, at most `limit` of them.  On a grid the
// total count for endpoints dx columns and dy rows apart is C(dx+dy, dx).
GeodesicEnumeration enumerate_geodesics(const Graph& g, int u, int v, std::size_t limit);

// True iff `path` is a shortest path in g: consecutive vertices adjacent, no
// vertex repeated, and its length equals the endpoint distance.  Throws on
// out-of-range ids or an empty sequence.
bool is_geodesic(const Graph& g, const std::vector<int>& path);

}  // namespace sge
