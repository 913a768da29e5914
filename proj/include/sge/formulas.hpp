#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "sge/certificate.hpp"

namespace sge {

// Exact floor of sqrt(n), integer arithmetic only.
std::uint64_t isqrt(std::uint64_t n);

// Exact ceil(2*sqrt(n)) without floating point: with n = k^2 + h,
// 0 <= h <= 2k, the value is 2k, 2k+1 or 2k+2 for h = 0, 1 <= h <= k,
// k+1 <= h <= 2k respectively.
long ceil_two_sqrt(long n);

// n = k*k + h with k = floor(sqrt(n)) and 0 <= h <= 2k.  Requires n >= 1.
struct Decomposition {
    long k = 0;
    long h = 0;
};
Decomposition decompose(long n);

// Lower bound ceil(2*sqrt(max(n,m))) for the strong edge geodetic number of
// the n-by-m grid.  The cut between two consecutive rows is a convex cut of
// max(n,m) edges in the better orientation; a geodesic crosses it at most
// once, only pairs straddling it cross at all, and s vertices straddle it
// with at most floor(s^2/4) pairs.  Requires n, m >= 2.
long convex_cut_lower_bound(long n, long m);

enum class BoundSource {
    formula,          // closed form, exact
    convex_cut,       // cut-counting lower bound
    band_two_pass,    // columns pass + inner-band rows pass
    corner_two_pass,  // corner-sharing columns pass + rows pass
};

struct BoundBracket {
    long lower = 0;
    long upper = 0;
    BoundSource lower_source = BoundSource::convex_cut;
    BoundSource upper_source = BoundSource::band_two_pass;
};

// Strong edge geodetic number of the n-by-m grid.  Exact closed forms exist
// when min(n,m) <= 4; larger grids get a bracket.  Requires n, m >= 2.
// Symmetric in its arguments.
std::variant<long, BoundBracket> sge_grid(long n, long m);

// Closed forms for fixed height, n >= 2.
long sge_p2(long n);  // ceil(2*sqrt(n))
long sge_p3(long n);  // ceil(2*sqrt(n+1))
long sge_p4(long n);  // 2k+1 / 2k+2 / 2k+3 for h <= k-1 / k <= h <= 2k-1 / h = 2k

// Maximum number of vertical edge slots coverable by single geodesics among
// a + b + c vertices split over the left boundary, middle, and right
// boundary sections of a height-3 grid: counts pairs weighted by how many
// cut columns their geodesics can cross (sections one apart cross once,
// outer-to-outer crosses twice).
long f3(long a, long b, long c);

// Height-4 analogue over four sections: adjacent sections weight 1, distance
// two weight 2, outer-to-outer weight 3.
long f4(long a, long b, long c, long d);

struct MaxF3 {
    long value = 0;
    std::array<long, 3> argmax{};
};
// Maximum of f3 over nonnegative integer a+b+c = s with b >= min_b.
// The real-valued maxima are s^2/2 and, with b >= 1, (s^2-1)/2.
MaxF3 max_f3(long s, long min_b = 0);

struct F4Constraints {
    long min_b = 0;
    long min_c = 0;
    long min_bc_sum = 0;  // lower bound on b + c
};
struct MaxF4 {
    long value = 0;
    std::array<long, 4> argmax{};
};
// Maximum of f4 over nonnegative integer a+b+c+d = s subject to the
// constraints.  The real-valued maxima are 3s^2/4 (unconstrained),
// (9s^2-8)/12 (b >= 1), (3s^2-8)/4 (b+c >= 2) and (3s^2-18)/4 (b+c >= 3).
MaxF4 max_f4(long s, F4Constraints cons = {});

// Boundary-column classification for height-4 grids by which of rows 1..4
// the column contributes to S.  Classes are closed under the vertical
// reflection y -> 5-y; the empty column is untyped.
enum class ColumnType { A, B, C, D, E, F, G, H, I, untyped };

// rows_mask bit i-1 set means (x, i) is in S for the column in question.
ColumnType classify_column_type(unsigned rows_mask);

// Convenience: classification of column x of a height-4 certificate.
ColumnType classify_column(const Certificate& c, int x);

// Minimum redundancy any valid covering can have at a boundary column of
// the given type (more vertical edges of that column traversed than the
// three needed): A:7 B:2 C:4 D:1 E:1 F:2 G:0 H:3 I:1.
int min_redundancy_of_type(ColumnType t);

char column_type_name(ColumnType t);

}  // namespace sge
