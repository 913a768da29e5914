#include "sge/grid.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace sge {

std::string to_string(Vertex v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

Edge::Edge(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    if (b < a) std::swap(a, b);
    u = a;
    v = b;
}

std::string to_string(const Edge& e) {
    return to_string(e.u) + "-" + to_string(e.v);
}

GridSpec::GridSpec(int columns, int rows) : n(columns), m(rows) {
    if (columns < 1 || rows < 1)
        throw std::invalid_argument("grid needs at least one column and one row");
}

long GridSpec::edge_count() const {
    return static_cast<long>(n - 1) * m + static_cast<long>(m - 1) * n;
}

bool GridSpec::contains(Vertex v) const {
    return v.x >= 1 && v.x <= n && v.y >= 1 && v.y <= m;
}

bool GridSpec::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

int GridSpec::index_of(Vertex v) const {
    if (!contains(v)) throw std::out_of_range("vertex " + to_string(v) + " outside grid");
    return (v.y - 1) * n + (v.x - 1);
}

Vertex GridSpec::vertex_at(int id) const {
    if (id < 0 || id >= vertex_count()) throw std::out_of_range("vertex id outside grid");
    return {id % n + 1, id / n + 1};
}

int manhattan(Vertex a, Vertex b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

std::vector<Edge> Path::edges() const {
    std::vector<Edge> out;
    out.reserve(vertices.size() > 0 ? vertices.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        out.emplace_back(vertices[i], vertices[i + 1]);
    return out;
}

namespace {

int step(int from, int to) { return from < to ? 1 : (from > to ? -1 : 0); }

}  // namespace

Path staircase_geodesic(const GridSpec& g, Vertex from, Vertex to, int turn_column) {
    if (!g.contains(from) || !g.contains(to))
        throw std::invalid_argument("staircase endpoints must lie in the grid");
    const int lo = std::min(from.x, to.x), hi = std::max(from.x, to.x);
    if (turn_column < lo || turn_column > hi)
        throw std::invalid_argument("turn column " + std::to_string(turn_column) +
                                    " outside the endpoint column span [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    Path p;
    p.vertices.push_back(from);
    for (int x = from.x; x != turn_column;) {
        x += step(from.x, to.x);
        p.vertices.push_back({x, from.y});
    }
    for (int y = from.y; y != to.y;) {
        y += step(from.y, to.y);
        p.vertices.push_back({turn_column, y});
    }
    for (int x = turn_column; x != to.x;) {
        x += step(from.x, to.x);
        p.vertices.push_back({x, to.y});
    }
    assert(p.length() == manhattan(from, to));
    return p;
}

Path row_geodesic(const GridSpec& g, Vertex from, Vertex to, int travel_row) {
    if (!g.contains(from) || !g.contains(to))
        throw std::invalid_argument("path endpoints must lie in the grid");
    const int lo = std::min(from.y, to.y), hi = std::max(from.y, to.y);
    if (travel_row < lo || travel_row > hi)
        throw std::invalid_argument("travel row " + std::to_string(travel_row) +
                                    " outside the endpoint row span [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    Path p;
    p.vertices.push_back(from);
    for (int y = from.y; y != travel_row;) {
        y += step(from.y, to.y);
        p.vertices.push_back({from.x, y});
    }
    for (int x = from.x; x != to.x;) {
        x += step(from.x, to.x);
        p.vertices.push_back({x, travel_row});
    }
    for (int y = travel_row; y != to.y;) {
        y += step(from.y, to.y);
        p.vertices.push_back({to.x, y});
    }
    assert(p.length() == manhattan(from, to));
    return p;
}

}  // namespace sge
