#include "sge/construct.hpp"

#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "sge/formulas.hpp"

namespace sge {

namespace {

// Incremental certificate assembly.  Pairs are tracked so a second
// assignment to the same pair, or a reroute of a missing one, is a bug in
// the builder, not a malformed output.
struct Builder {
    GridSpec g;
    std::set<Vertex> s;
    std::vector<Assignment> assignments;
    std::map<std::pair<Vertex, Vertex>, std::size_t> by_pair;

    explicit Builder(GridSpec grid) : g(grid) {}

    static std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return std::minmax(a, b); }

    void vertex(Vertex v) {
        assert(g.contains(v));
        s.insert(v);
    }

    void add(Vertex a, Vertex b, Path p) {
        assert(a != b);
        assert((p.vertices.front() == a && p.vertices.back() == b) ||
               (p.vertices.front() == b && p.vertices.back() == a));
        auto k = key(a, b);
        if (by_pair.count(k))
            throw std::logic_error("pair assigned twice: " + to_string(k.first) + "-" +
                                   to_string(k.second));
        vertex(a);
        vertex(b);
        by_pair.emplace(k, assignments.size());
        assignments.push_back({k.first, k.second, std::move(p)});
    }

    void drop(Vertex a, Vertex b) {
        auto it = by_pair.find(key(a, b));
        if (it == by_pair.end())
            throw std::logic_error("pair not assigned: " + to_string(a) + "-" +
                                   to_string(b));
        assignments.erase(assignments.begin() + static_cast<long>(it->second));
        by_pair.clear();
        for (std::size_t i = 0; i < assignments.size(); ++i)
            by_pair.emplace(key(assignments[i].a, assignments[i].b), i);
    }

    void reroute(Vertex a, Vertex b, Path p) {
        drop(a, b);
        add(a, b, std::move(p));
    }

    void remove_vertex(Vertex v) {
        for (const Assignment& asg : assignments)
            if (asg.a == v || asg.b == v)
                throw std::logic_error("removing a vertex still in use");
        s.erase(v);
    }

    Certificate take() && {
        return Certificate{g, {s.begin(), s.end()}, std::move(assignments)};
    }
};

Path hpath(const GridSpec& g, Vertex from, Vertex to) {
    assert(from.y == to.y);
    return staircase_geodesic(g, from, to, to.x);
}

// Anchors plus the assembled vertical coverage.  as[i-1] is the i-th bottom
// anchor, bs[i-1] the i-th top one; the tail anchors (when present) sit at
// the back.
struct VerticalPass {
    Builder b;
    std::vector<Vertex> as, bs;
    long k = 0, h = 0;

    Vertex a(long i) const { return as.at(static_cast<std::size_t>(i) - 1); }
    Vertex bv(long i) const { return bs.at(static_cast<std::size_t>(i) - 1); }
};

// Covers every vertical edge: anchors in rows 1 and m at the square columns,
// staircase per column.  a_i-b_j turns at column (i-1)^2+j, a_j-b_i at
// i(i-1)+j, a_i-b_i at i^2; the tail pairs handle columns k^2+1..n.  With
// corner_variant and 1 <= h <= k, a_k moves to (n,1); its staircases keep
// the same turn columns, so the covered set is unchanged.
VerticalPass vertical_pass(int n, int m, bool corner_variant) {
    if (n < 1 || m < 2)
        throw std::invalid_argument("vertical cover needs n >= 1, m >= 2");
    if (corner_variant && n < 3)
        throw std::invalid_argument(
            "corner variant needs n >= 3: below that ceil(2*sqrt(n)) anchors "
            "cannot include all four corners");
    auto [k, h] = decompose(n);

    VerticalPass vp{Builder{GridSpec(n, m)}, {}, {}, k, h};
    for (long i = 1; i <= k; ++i) {
        vp.as.push_back({static_cast<int>(i * i), 1});
        vp.bs.push_back({static_cast<int>(i * i), m});
    }
    if (corner_variant && h >= 1 && h <= k) vp.as.back() = {n, 1};
    if (h >= 1) vp.bs.push_back({n, m});      // b_{k+1}
    if (h >= k + 1) vp.as.push_back({n, 1});  // a_{k+1}

    Builder& b = vp.b;
    const GridSpec& g = b.g;
    for (long i = 1; i <= k; ++i) {
        for (long j = 1; j < i; ++j) {
            b.add(vp.a(i), vp.bv(j),
                  staircase_geodesic(g, vp.a(i), vp.bv(j), static_cast<int>((i - 1) * (i - 1) + j)));
            b.add(vp.a(j), vp.bv(i),
                  staircase_geodesic(g, vp.a(j), vp.bv(i), static_cast<int>(i * (i - 1) + j)));
        }
        b.add(vp.a(i), vp.bv(i),
              staircase_geodesic(g, vp.a(i), vp.bv(i), static_cast<int>(i * i)));
    }
    if (h >= 1 && h <= k) {
        for (long j = 1; j <= h; ++j)
            b.add(vp.a(j), vp.bv(k + 1),
                  staircase_geodesic(g, vp.a(j), vp.bv(k + 1), static_cast<int>(k * k + j)));
    } else if (h >= k + 1) {
        for (long j = 1; j <= k; ++j)
            b.add(vp.a(j), vp.bv(k + 1),
                  staircase_geodesic(g, vp.a(j), vp.bv(k + 1), static_cast<int>(k * k + j)));
        for (long j = 1; j <= h - k; ++j)
            b.add(vp.a(k + 1), vp.bv(j),
                  staircase_geodesic(g, vp.a(k + 1), vp.bv(j), static_cast<int>(k * (k + 1) + j)));
    }
    return vp;
}

// Closes rows 1 and m once the vertical pass is in place.  Relies on the
// tail staircase through column n covering row 1 from column h^2 on (and row
// m needing only the span up to the last top anchor).
void close_outer_rows(VerticalPass& vp) {
    Builder& b = vp.b;
    const GridSpec& g = b.g;
    const long k = vp.k, h = vp.h;
    if (h == 0) {
        // n = k^2 >= 2 forces k >= 2 here.
        b.add(vp.a(1), vp.a(k), hpath(g, vp.a(1), vp.a(k)));
        b.add(vp.bv(1), vp.bv(k), hpath(g, vp.bv(1), vp.bv(k)));
    } else if (h <= k) {
        // Row 1 beyond column k^2 rides the a_h-b_{k+1} staircase (or, for
        // h = 1 in the height-3 rewiring, the replacement a_k-b_{k+1} path).
        if (k >= 2) b.add(vp.a(1), vp.a(k), hpath(g, vp.a(1), vp.a(k)));
        b.add(vp.bv(1), vp.bv(k + 1), hpath(g, vp.bv(1), vp.bv(k + 1)));
    } else {
        b.add(vp.a(1), vp.a(k + 1), hpath(g, vp.a(1), vp.a(k + 1)));
        b.add(vp.bv(1), vp.bv(k + 1), hpath(g, vp.bv(1), vp.bv(k + 1)));
    }
}

// Embeds a certificate for the (m-2)-by-n grid into rows 2..m-1 of the
// n-by-m grid, rotating so its vertical edges land on the band's horizontal
// edges: (x', y') -> (y', x'+1).
void merge_band(Builder& b, const Certificate& band) {
    assert(band.grid.n == b.g.m - 2 && band.grid.m == b.g.n);
    auto map = [](Vertex v) { return Vertex{v.y, v.x + 1}; };
    for (const Assignment& asg : band.paths) {
        Path p;
        p.vertices.reserve(asg.path.vertices.size());
        for (Vertex v : asg.path.vertices) p.vertices.push_back(map(v));
        b.add(map(asg.a), map(asg.b), std::move(p));
    }
    for (Vertex v : band.s) b.vertex(map(v));
}

}  // namespace

Certificate vertical_cover(int n, int m) { return std::move(vertical_pass(n, m, false).b).take(); }

Certificate vertical_cover_corners(int n, int m) {
    return std::move(vertical_pass(n, m, true).b).take();
}

Certificate construct_p2(int n) {
    if (n < 2) throw std::invalid_argument("construct_p2 needs n >= 2");
    auto vp = vertical_pass(n, 2, false);
    close_outer_rows(vp);
    return std::move(vp.b).take();
}

Certificate construct_p3(int n) {
    if (n < 2) throw std::invalid_argument("construct_p3 needs n >= 2");
    const int m = 3;
    auto vp = vertical_pass(n, m, false);
    Builder& b = vp.b;
    const GridSpec& g = b.g;
    const long k = vp.k, h = vp.h;

    if (h == 0 || h == k) {
        // One extra vertex (n,2); its geodesic from (1,1) sweeps row 2.
        close_outer_rows(vp);
        Vertex mid{n, 2};
        b.add(vp.a(1), mid, row_geodesic(g, vp.a(1), mid, 2));
    } else if (h <= k - 1) {
        // Column k^2+1 moves to the fresh pair a_k-b_{k+1}, freeing
        // a_1-b_{k+1} for the middle row.
        b.add(vp.a(k), vp.bv(k + 1),
              staircase_geodesic(g, vp.a(k), vp.bv(k + 1), static_cast<int>(k * k + 1)));
        b.reroute(vp.a(1), vp.bv(k + 1), row_geodesic(g, vp.a(1), vp.bv(k + 1), 2));
        close_outer_rows(vp);
    } else {
        // k+1 <= h <= 2k: the new corner pair takes column n, the freed
        // a_{k+1}-b_{h-k} takes column k^2+1, and a_1-b_{k+1} sweeps row 2.
        b.add(vp.a(k + 1), vp.bv(k + 1),
              staircase_geodesic(g, vp.a(k + 1), vp.bv(k + 1), n));
        b.reroute(vp.a(k + 1), vp.bv(h - k),
                  staircase_geodesic(g, vp.a(k + 1), vp.bv(h - k), static_cast<int>(k * k + 1)));
        b.reroute(vp.a(1), vp.bv(k + 1), row_geodesic(g, vp.a(1), vp.bv(k + 1), 2));
        close_outer_rows(vp);
    }
    return std::move(vp.b).take();
}

Certificate construct_p4(int n) {
    if (n < 2) throw std::invalid_argument("construct_p4 needs n >= 2");
    const int m = 4;
    auto vp = vertical_pass(n, m, false);
    Builder& b = vp.b;
    const GridSpec& g = b.g;
    const long k = vp.k, h = vp.h;

    if (h == 0 || h == k || h == 2 * k) {
        // One extra vertex (n,2); rows 2 and 3 ride its geodesics from the
        // two left corners.
        close_outer_rows(vp);
        Vertex mid{n, 2};
        b.add(vp.a(1), mid, row_geodesic(g, vp.a(1), mid, 2));
        b.add(vp.bv(1), mid, row_geodesic(g, vp.bv(1), mid, 3));
    } else if (h <= k - 1) {
        // Tail columns are re-covered from c=(n,3): per column the a-side
        // staircase takes the two lower vertical edges and the b-side one
        // the top edge.  b_{k+1} and its pairs go away; rows 2 and 3 ride
        // the geodesics from (1,1) and (1,4) to c.
        Vertex c{n, 3};
        for (long j = 1; j <= h; ++j) b.drop(vp.a(j), vp.bv(k + 1));
        b.remove_vertex(vp.bv(k + 1));
        for (long j = 1; j <= h; ++j) {
            b.add(vp.a(j + 1), c,
                  staircase_geodesic(g, vp.a(j + 1), c, static_cast<int>(k * k + j)));
            b.add(vp.bv(j + 1), c,
                  staircase_geodesic(g, vp.bv(j + 1), c, static_cast<int>(k * k + j)));
        }
        b.add(vp.a(1), c, row_geodesic(g, vp.a(1), c, 2));
        b.add(vp.bv(1), c, row_geodesic(g, vp.bv(1), c, 3));
        // Rows 1 and 4 beyond the square columns ride the j = h staircases.
        b.add(vp.a(1), vp.a(k), hpath(g, vp.a(1), vp.a(k)));
        b.add(vp.bv(1), vp.bv(k), hpath(g, vp.bv(1), vp.bv(k)));
    } else {
        // k+1 <= h <= 2k-1: corner pair takes column n, freed tail pairs
        // take columns k(k+1)+1 and the rows; a_{k+1}-b_k takes k^2+1.
        b.add(vp.a(k + 1), vp.bv(k + 1),
              staircase_geodesic(g, vp.a(k + 1), vp.bv(k + 1), n));
        if (h - k >= 2)
            b.reroute(vp.a(k + 1), vp.bv(h - k),
                      staircase_geodesic(g, vp.a(k + 1), vp.bv(h - k),
                                         static_cast<int>(k * (k + 1) + 1)));
        b.reroute(vp.a(k + 1), vp.bv(1), row_geodesic(g, vp.bv(1), vp.a(k + 1), 3));
        b.add(vp.a(k + 1), vp.bv(k),
              staircase_geodesic(g, vp.a(k + 1), vp.bv(k), static_cast<int>(k * k + 1)));
        b.reroute(vp.a(1), vp.bv(k + 1), row_geodesic(g, vp.a(1), vp.bv(k + 1), 2));
        close_outer_rows(vp);
    }
    return std::move(vp.b).take();
}

Certificate construct_general(int n, int m) {
    if (n < 2 || m < 2) throw std::invalid_argument("construct_general needs n, m >= 2");
    if (m == 2) return construct_p2(n);
    auto vp = vertical_pass(n, m, false);
    close_outer_rows(vp);
    merge_band(vp.b, vertical_cover(m - 2, n));
    return std::move(vp.b).take();
}

namespace {

// Vertical pass whose vertex set contains all four corners while the two
// corner-corner pairs stay unused, so a transposed pass over the rows can
// spend them.  Size stays at ceil(2*sqrt(n+2)): at most one vertex beyond
// the plain pass, and only where the ceiling steps up.
VerticalPass corner_free_vertical_pass(int n, int m) {
    auto [k, h] = decompose(n);

    if (k == 1) {
        // n = 3 (n = 2 has no room for four corners plus coverage at this
        // size).  Hand-rolled: c = (2,m) covers the middle column and both
        // diagonals stay free.
        assert(n == 3);
        VerticalPass vp{Builder{GridSpec(n, m)}, {}, {}, k, h};
        Vertex a1{1, 1}, a2{3, 1}, b1{1, m}, b2{3, m}, c{2, m};
        vp.as = {a1, a2};
        vp.bs = {b1, b2};
        Builder& b = vp.b;
        b.add(a1, b1, staircase_geodesic(b.g, a1, b1, 1));
        b.add(a1, c, staircase_geodesic(b.g, a1, c, 2));
        b.add(a2, b2, staircase_geodesic(b.g, a2, b2, 3));
        return vp;
    }

    const Vertex c{static_cast<int>((k - 1) * (k - 1) + k), m};
    if (h == 0) {
        auto vp = vertical_pass(n, m, false);
        Builder& b = vp.b;
        b.drop(vp.a(1), vp.bv(k));  // was column k(k-1)+1
        b.drop(vp.a(k), vp.bv(1));  // was column (k-1)^2+1
        b.add(vp.a(1), c,
              staircase_geodesic(b.g, vp.a(1), c, static_cast<int>((k - 1) * (k - 1) + 1)));
        b.add(vp.a(k), c,
              staircase_geodesic(b.g, vp.a(k), c, static_cast<int>(k * (k - 1) + 1)));
        return vp;
    }
    if (h == k - 1 || h == k) {
        auto vp = vertical_pass(n, m, true);  // a_k at (n,1)
        Builder& b = vp.b;
        b.drop(vp.a(1), vp.bv(k + 1));  // was column k^2+1
        b.drop(vp.a(k), vp.bv(1));      // was column (k-1)^2+1
        b.add(vp.a(1), c,
              staircase_geodesic(b.g, vp.a(1), c, static_cast<int>((k - 1) * (k - 1) + 1)));
        b.add(vp.a(k), c,
              staircase_geodesic(b.g, vp.a(k), c, static_cast<int>(k * k + 1)));
        return vp;
    }
    if (h <= k - 2) {
        // 1 <= h <= k-2 (so k >= 3): no c needed; the new corner pair
        // a_k-b_{k+1} takes column n and a_{k-1}-b_{k+1} takes over the
        // column freed by dropping a_k-b_1.
        auto vp = vertical_pass(n, m, true);
        Builder& b = vp.b;
        b.add(vp.a(k), vp.bv(k + 1), staircase_geodesic(b.g, vp.a(k), vp.bv(k + 1), n));
        if (h >= 2)
            b.reroute(vp.a(h), vp.bv(k + 1),
                      staircase_geodesic(b.g, vp.a(h), vp.bv(k + 1),
                                         static_cast<int>(k * k + 1)));
        b.drop(vp.a(1), vp.bv(k + 1));
        b.add(vp.a(k - 1), vp.bv(k + 1),
              staircase_geodesic(b.g, vp.a(k - 1), vp.bv(k + 1),
                                 static_cast<int>((k - 1) * (k - 1) + 1)));
        b.drop(vp.a(k), vp.bv(1));
        return vp;
    }
    if (h <= 2 * k - 1) {
        // k+1 <= h <= 2k-1: same rewiring as the height-4 tail case.
        auto vp = vertical_pass(n, m, false);
        Builder& b = vp.b;
        b.add(vp.a(k + 1), vp.bv(k + 1),
              staircase_geodesic(b.g, vp.a(k + 1), vp.bv(k + 1), n));
        if (h - k >= 2)
            b.reroute(vp.a(k + 1), vp.bv(h - k),
                      staircase_geodesic(b.g, vp.a(k + 1), vp.bv(h - k),
                                         static_cast<int>(k * (k + 1) + 1)));
        b.add(vp.a(k + 1), vp.bv(k),
              staircase_geodesic(b.g, vp.a(k + 1), vp.bv(k), static_cast<int>(k * k + 1)));
        b.drop(vp.a(1), vp.bv(k + 1));
        b.drop(vp.a(k + 1), vp.bv(1));
        return vp;
    }
    // h == 2k: both tails exist; c takes over column k^2+1 so that both
    // diagonals can be dropped.
    auto vp = vertical_pass(n, m, false);
    Builder& b = vp.b;
    b.add(vp.a(k + 1), vp.bv(k + 1), staircase_geodesic(b.g, vp.a(k + 1), vp.bv(k + 1), n));
    b.reroute(vp.a(k + 1), vp.bv(k),
              staircase_geodesic(b.g, vp.a(k + 1), vp.bv(k),
                                 static_cast<int>(k * (k + 1) + 1)));
    b.add(vp.a(k + 1), c,
          staircase_geodesic(b.g, vp.a(k + 1), c, static_cast<int>(k * k + 1)));
    b.drop(vp.a(1), vp.bv(k + 1));
    b.drop(vp.a(k + 1), vp.bv(1));
    return vp;
}

}  // namespace

Certificate construct_general_corners(int n, int m) {
    if (n < 3 || m < 3)
        throw std::invalid_argument("construct_general_corners needs n, m >= 3");
    auto vp = corner_free_vertical_pass(n, m);
    // The transposed corner pass covers all horizontal edges; its pairs run
    // between columns 1 and n, so only the corner diagonals could collide
    // with pass 1, and those were left free.
    Certificate rows = transposed(vertical_cover_corners(m, n));
    for (const Assignment& asg : rows.paths) vp.b.add(asg.a, asg.b, asg.path);
    for (Vertex v : rows.s) vp.b.vertex(v);
    return std::move(vp.b).take();
}

}  // namespace sge
