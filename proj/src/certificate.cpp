#include "sge/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sge {

bool is_geodesic(const GridSpec& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::set<Vertex> seen;
    for (Vertex v : p.vertices) {
        if (!g.contains(v)) return false;
        if (!seen.insert(v).second) return false;
    }
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
    return p.length() == manhattan(p.vertices.front(), p.vertices.back());
}

namespace {

// Grid edge id: horizontal edges first, row-major, then vertical edges.
long edge_id(const GridSpec& g, const Edge& e) {
    if (e.horizontal()) return static_cast<long>(e.u.y - 1) * (g.n - 1) + (e.u.x - 1);
    long horizontal_total = static_cast<long>(g.n - 1) * g.m;
    return horizontal_total + static_cast<long>(e.u.x - 1) * (g.m - 1) + (e.u.y - 1);
}

Edge edge_at(const GridSpec& g, long id) {
    long horizontal_total = static_cast<long>(g.n - 1) * g.m;
    if (id < horizontal_total) {
        int y = static_cast<int>(id / (g.n - 1)) + 1;
        int x = static_cast<int>(id % (g.n - 1)) + 1;
        return {{x, y}, {x + 1, y}};
    }
    id -= horizontal_total;
    int x = static_cast<int>(id / (g.m - 1)) + 1;
    int y = static_cast<int>(id % (g.m - 1)) + 1;
    return {{x, y}, {x, y + 1}};
}

}  // namespace

VerifyReport verify(const Certificate& c) {
    const GridSpec& g = c.grid;
    VerifyReport report;
    report.column_vertical_coverage.assign(g.n, 0);

    std::set<Vertex> s_set(c.s.begin(), c.s.end());
    std::vector<char> covered(g.edge_count(), 0);
    std::map<std::pair<Vertex, Vertex>, int> pair_uses;
    std::set<std::pair<Vertex, Vertex>> duplicates_reported;

    for (std::size_t idx = 0; idx < c.paths.size(); ++idx) {
        const Assignment& asg = c.paths[idx];
        auto key = std::minmax(asg.a, asg.b);

        bool geodesic_ok = is_geodesic(g, asg.path);
        if (geodesic_ok) {
            // The path must run between its own pair's endpoints.
            auto ends = std::minmax(asg.path.vertices.front(), asg.path.vertices.back());
            geodesic_ok = ends == key && asg.a != asg.b;
        }
        if (!geodesic_ok) report.non_geodesic_paths.push_back(idx);

        bool endpoints_ok = s_set.count(asg.a) && s_set.count(asg.b);
        if (!endpoints_ok) report.foreign_endpoints.push_back(idx);

        int uses = ++pair_uses[key];
        if (uses == 2 && duplicates_reported.insert(key).second)
            report.duplicate_pairs.push_back(key);

        if (geodesic_ok)
            for (const Edge& e : asg.path.edges()) {
                if (e.vertical()) ++report.column_vertical_coverage[e.u.x - 1];
                // Only defect-free first assignments of a pair contribute to
                // coverage; the covering definition admits nothing else.
                if (endpoints_ok && uses == 1) covered[edge_id(g, e)] = 1;
            }
    }

    for (long id = 0; id < g.edge_count(); ++id) {
        if (covered[id])
            ++report.covered_edge_count;
        else
            report.uncovered_edges.push_back(edge_at(g, id));
    }
    std::sort(report.uncovered_edges.begin(), report.uncovered_edges.end());

    report.valid = report.uncovered_edges.empty() && report.non_geodesic_paths.empty() &&
                   report.foreign_endpoints.empty() && report.duplicate_pairs.empty();
    return report;
}

std::vector<Edge> column_vertical_edges(const Path& p, int x) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        Edge e{p.vertices[i], p.vertices[i + 1]};
        if (e.vertical() && e.u.x == x) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long redundancy(const Certificate& c, int x) {
    long total = 0;
    for (const Assignment& asg : c.paths)
        total += static_cast<long>(column_vertical_edges(asg.path, x).size());
    return total - (c.grid.m - 1);
}

Certificate transposed(const Certificate& c) {
    Certificate t;
    t.grid = GridSpec(c.grid.m, c.grid.n);
    auto flip = [](Vertex v) { return Vertex{v.y, v.x}; };
    t.s.reserve(c.s.size());
    for (Vertex v : c.s) t.s.push_back(flip(v));
    std::sort(t.s.begin(), t.s.end());
    t.paths.reserve(c.paths.size());
    for (const Assignment& asg : c.paths) {
        Assignment out;
        const Vertex fa = flip(asg.a), fb = flip(asg.b);
        out.a = std::min(fa, fb);
        out.b = std::max(fa, fb);
        out.path.vertices.reserve(asg.path.vertices.size());
        for (Vertex v : asg.path.vertices) out.path.vertices.push_back(flip(v));
        t.paths.push_back(std::move(out));
    }
    return t;
}

}  // namespace sge
