#pragma once

#include "sge/certificate.hpp"

namespace sge {

// Covers every vertical edge of the n-by-m grid with ceil(2*sqrt(n))
// vertices anchored at column j*j for j = 1..k on rows 1 and m, plus up to
// two extra anchors in column n depending on h = n - k*k.  Each column's
// vertical edges are covered by exactly one designated pair's staircase.
// The result is partial: horizontal edges off the staircases stay uncovered.
// Requires n >= 1, m >= 2.
Certificate vertical_cover(int n, int m);

// Variant of vertical_cover with the same size and coverage whose vertex set
// contains all four grid corners.  Requires n >= 3 (below that, 2*sqrt(n)
// rounds to less than the four corners needed).  For h = 0 and h > k it
// already equals vertical_cover; for 1 <= h <= k the last row-1 anchor moves
// from (k*k, 1) to (n, 1) and its staircases bend accordingly.
Certificate vertical_cover_corners(int n, int m);

// Optimal strong edge geodetic coverings for heights 2, 3 and 4; sizes match
// sge_p2 / sge_p3 / sge_p4.  Require n >= 2.
Certificate construct_p2(int n);
Certificate construct_p3(int n);
Certificate construct_p4(int n);

// Two-pass covering of the n-by-m grid: vertical_cover(n, m) plus closures
// for rows 1 and m, then a transposed vertical_cover(m-2, n) embedded in
// rows 2..m-1 to cover the inner horizontal edges.  Size is at most
// ceil(2*sqrt(n)) + ceil(2*sqrt(m-2)).  Requires n, m >= 2.
Certificate construct_general(int n, int m);

// Corner-sharing two-pass covering: a corner-anchored vertical pass that
// leaves the two diagonal corner pairs unused, plus a transposed
// corner-anchored pass over the rows that spends exactly those pairs.  Size
// is at most ceil(2*sqrt(n+2)) + ceil(2*sqrt(m)) - 4.  Requires n, m >= 3.
Certificate construct_general_corners(int n, int m);

}  // namespace sge
