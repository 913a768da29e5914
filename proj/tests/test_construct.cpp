#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sge/certificate_io.hpp"
#include "sge/construct.hpp"
#include "sge/formulas.hpp"

using namespace sge;

namespace {

std::vector<Vertex> vertices(std::initializer_list<Vertex> vs) { return {vs.begin(), vs.end()}; }

}  // namespace

TEST_CASE("vertical pass covers each column's vertical edges exactly once") {
    for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {10, 2}, {18, 5}, {26, 4}, {37, 7}}) {
        const Certificate c = vertical_cover(n, m);
        const VerifyReport r = verify(c);
        CHECK(c.s.size() == static_cast<std::size_t>(ceil_two_sqrt(n)));
        CHECK(r.non_geodesic_paths.empty());
        CHECK(r.foreign_endpoints.empty());
        CHECK(r.duplicate_pairs.empty());
        REQUIRE(r.column_vertical_coverage.size() == static_cast<std::size_t>(n));
        for (long cover : r.column_vertical_coverage) CHECK(cover == m - 1);
        // Only horizontal edges may be missing.
        for (const Edge& e : r.uncovered_edges) CHECK(e.horizontal());
    }
}

TEST_CASE("corner-anchored pass keeps size and coverage, gains the corners") {
    const Certificate plain = vertical_cover(18, 5);
    const Certificate star = vertical_cover_corners(18, 5);
    CHECK(plain.s.size() == 9);
    CHECK(star.s.size() == 9);
    // 18 = 16 + 2, so the plain pass anchors row 1 at columns 1, 4, 9, 16
    // and has no row-1 vertex in the last column; the variant moves that
    // anchor to the corner.
    CHECK(std::count(plain.s.begin(), plain.s.end(), Vertex{16, 1}) == 1);
    CHECK(std::count(plain.s.begin(), plain.s.end(), Vertex{18, 1}) == 0);
    CHECK(std::count(star.s.begin(), star.s.end(), Vertex{16, 1}) == 0);
    CHECK(std::count(star.s.begin(), star.s.end(), Vertex{18, 1}) == 1);

    for (int n = 3; n <= 20; ++n) {
        const Certificate c = vertical_cover_corners(n, 5);
        CHECK(c.s.size() == static_cast<std::size_t>(ceil_two_sqrt(n)));
        for (Vertex corner : {Vertex{1, 1}, {n, 1}, {1, 5}, {n, 5}})
            CHECK(std::count(c.s.begin(), c.s.end(), corner) == 1);
        const VerifyReport r = verify(c);
        for (long cover : r.column_vertical_coverage) CHECK(cover == 4);
        for (const Edge& e : r.uncovered_edges) CHECK(e.horizontal());
    }
}

TEST_CASE("height-2 covering at frozen anchor sets") {
    CHECK(construct_p2(16).s ==
          vertices({{1, 1}, {1, 2}, {4, 1}, {4, 2}, {9, 1}, {9, 2}, {16, 1}, {16, 2}}));
    CHECK(construct_p2(20).s == vertices({{1, 1},
                                          {1, 2},
                                          {4, 1},
                                          {4, 2},
                                          {9, 1},
                                          {9, 2},
                                          {16, 1},
                                          {16, 2},
                                          {20, 2}}));
    CHECK(construct_p2(24).s == vertices({{1, 1},
                                          {1, 2},
                                          {4, 1},
                                          {4, 2},
                                          {9, 1},
                                          {9, 2},
                                          {16, 1},
                                          {16, 2},
                                          {24, 1},
                                          {24, 2}}));
}

TEST_CASE("height-3 covering at frozen anchor sets") {
    CHECK(construct_p3(11).s ==
          vertices({{1, 1}, {1, 3}, {4, 1}, {4, 3}, {9, 1}, {9, 3}, {11, 3}}));
    CHECK(construct_p3(9).s ==
          vertices({{1, 1}, {1, 3}, {4, 1}, {4, 3}, {9, 1}, {9, 2}, {9, 3}}));
    CHECK(construct_p3(15).s ==
          vertices({{1, 1}, {1, 3}, {4, 1}, {4, 3}, {9, 1}, {9, 3}, {15, 1}, {15, 3}}));
}

TEST_CASE("height-4 covering at frozen anchor sets") {
    // 11 = 9 + 2 uses the shared extra vertex at (n, 3) instead of tails.
    CHECK(construct_p4(11).s ==
          vertices({{1, 1}, {1, 4}, {4, 1}, {4, 4}, {9, 1}, {9, 4}, {11, 3}}));
    CHECK(construct_p4(14).s ==
          vertices({{1, 1}, {1, 4}, {4, 1}, {4, 4}, {9, 1}, {9, 4}, {14, 1}, {14, 4}}));
    CHECK(construct_p4(15).s == vertices({{1, 1},
                                          {1, 4},
                                          {4, 1},
                                          {4, 4},
                                          {9, 1},
                                          {9, 4},
                                          {15, 1},
                                          {15, 2},
                                          {15, 4}}));
}

TEST_CASE("fixed-height coverings are valid and match the closed forms") {
    for (int n = 2; n <= 60; ++n) {
        CAPTURE(n);
        const Certificate c2 = construct_p2(n);
        CHECK(verify(c2).valid);
        CHECK(c2.s.size() == static_cast<std::size_t>(sge_p2(n)));
        const Certificate c3 = construct_p3(n);
        CHECK(verify(c3).valid);
        CHECK(c3.s.size() == static_cast<std::size_t>(sge_p3(n)));
        const Certificate c4 = construct_p4(n);
        CHECK(verify(c4).valid);
        CHECK(c4.s.size() == static_cast<std::size_t>(sge_p4(n)));
    }
}

TEST_CASE("two-pass covering is valid and within its size bound") {
    for (int n = 2; n <= 14; ++n)
        for (int m = 2; m <= 14; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const Certificate c = construct_general(n, m);
            CHECK(c.grid == GridSpec(n, m));
            CHECK(verify(c).valid);
            CHECK(c.s.size() ==
                  static_cast<std::size_t>(ceil_two_sqrt(n) + ceil_two_sqrt(m - 2)));
        }
}

TEST_CASE("corner-sharing two-pass covering is valid and within its size bound") {
    for (int n = 3; n <= 14; ++n)
        for (int m = 3; m <= 14; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const Certificate c = construct_general_corners(n, m);
            CHECK(c.grid == GridSpec(n, m));
            CHECK(verify(c).valid);
            CHECK(c.s.size() ==
                  static_cast<std::size_t>(ceil_two_sqrt(n + 2) + ceil_two_sqrt(m) - 4));
        }
}

TEST_CASE("corner sharing beats the plain two passes on balanced grids") {
    // e.g. 10x5: plain passes need 7 + 4 = 11 vertices, corner sharing 8.
    CHECK(construct_general(10, 5).s.size() == 11);
    CHECK(construct_general_corners(10, 5).s.size() == 8);
    CHECK(construct_general_corners(40, 40).s.size() == 22);
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(construct_p2(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_p3(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_p4(0), std::invalid_argument);
    CHECK_THROWS_AS(vertical_cover(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(vertical_cover(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(vertical_cover_corners(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(construct_general(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(construct_general_corners(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(construct_general_corners(5, 2), std::invalid_argument);
}

TEST_CASE("builders are deterministic") {
    CHECK(to_json(construct_general_corners(10, 5)) == to_json(construct_general_corners(10, 5)));
    CHECK(to_json(construct_p4(23)) == to_json(construct_p4(23)));
}
