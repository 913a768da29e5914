#include "sge/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sge {

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
    if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops not allowed");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) throw std::invalid_argument("duplicate edge");
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

Graph grid_graph(const GridSpec& spec) {
    Graph g(spec.vertex_count());
    for (int y = 1; y <= spec.m; ++y)
        for (int x = 1; x <= spec.n; ++x) {
            if (x < spec.n) g.add_edge(spec.index_of({x, y}), spec.index_of({x + 1, y}));
            if (y < spec.m) g.add_edge(spec.index_of({x, y}), spec.index_of({x, y + 1}));
        }
    return g;
}

namespace {

// Distances from src to every vertex; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

int distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::out_of_range("vertex id out of range");
    return bfs_distances(g, u)[v];
}

GeodesicEnumeration enumerate_geodesics(const Graph& g, int u, int v, std::size_t limit) {
    GeodesicEnumeration out;
    if (u == v) {
        if (limit > 0)
            out.paths.push_back({u});
        else
            out.truncated = true;
        return out;
    }
    auto dist_to_v = bfs_distances(g, v);
    if (dist_to_v[u] < 0) return out;  // unreachable: zero geodesics

    // Depth-first walk of the shortest-path DAG toward v.  Neighbor lists are
    // sorted, so paths come out in lexicographic order of their id sequences.
    std::vector<int> cur{u};
    auto walk = [&](auto&& self, int at) -> bool {
        if (at == v) {
            if (out.paths.size() == limit) {
                out.truncated = true;
                return false;
            }
            out.paths.push_back(cur);
            return true;
        }
        for (int w : g.neighbors(at)) {
            if (dist_to_v[w] != dist_to_v[at] - 1) continue;
            cur.push_back(w);
            bool keep_going = self(self, w);
            cur.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    walk(walk, u);
    return out;
}

bool is_geodesic(const Graph& g, const std::vector<int>& path) {
    if (path.empty()) throw std::invalid_argument("empty vertex sequence");
    for (int v : path)
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("path vertex id out of range");
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : path) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) return false;
    return static_cast<int>(path.size()) - 1 == distance(g, path.front(), path.back());
}

}  // namespace sge
