#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sge {

// 1-based grid coordinate: x is the column (1..n), y is the row (1..m).
struct Vertex {
    int x = 0;
    int y = 0;
    auto operator<=>(const Vertex&) const = default;
};

std::string to_string(Vertex v);

// Undirected grid edge; endpoints are stored in canonical (lexicographic)
// order so edges compare and hash consistently.
struct Edge {
    Vertex u, v;

    Edge(Vertex a, Vertex b);

    bool vertical() const { return u.x == v.x; }
    bool horizontal() const { return u.y == v.y; }
    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// The n-by-m grid graph: n columns times m rows, vertices (x,y) with
// 1 <= x <= n and 1 <= y <= m, edges between vertices at distance one.
struct GridSpec {
    int n = 1;  // columns
    int m = 1;  // rows

    GridSpec(int columns, int rows);

    int vertex_count() const { return n * m; }
    long edge_count() const;
    bool contains(Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;

    // Row-major vertex id: (1,1) -> 0, (2,1) -> 1, ..., (1,2) -> n, ...
    int index_of(Vertex v) const;
    Vertex vertex_at(int id) const;

    bool operator==(const GridSpec&) const = default;
};

// Shortest-path distance in the grid.
int manhattan(Vertex a, Vertex b);

// A walk given by its full vertex sequence.  Valid paths have consecutive
// vertices adjacent and no repeated vertex.
struct Path {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    std::vector<Edge> edges() const;
    bool operator==(const Path&) const = default;
};

// Monotone geodesic from `from` to `to` that runs along the source row to
// turn_column, traverses the whole vertical segment there, then runs along
// the destination row.  When the endpoints lie in rows 1 and m it covers
// every vertical edge of turn_column.  Requires turn_column to lie between
// the endpoint columns (inclusive).
Path staircase_geodesic(const GridSpec& g, Vertex from, Vertex to, int turn_column);

// Transposed twin of staircase_geodesic: down/up the source column to
// travel_row, along that row, then up/down the destination column.  Requires
// travel_row to lie between the endpoint rows (inclusive).
Path row_geodesic(const GridSpec& g, Vertex from, Vertex to, int travel_row);

}  // namespace sge
