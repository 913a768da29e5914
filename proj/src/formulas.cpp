#include "sge/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace sge {

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    // Newton iteration on integers converges to floor(sqrt(n)).
    std::uint64_t x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

long ceil_two_sqrt(long n) {
    if (n < 0) throw std::invalid_argument("ceil_two_sqrt needs n >= 0");
    auto k = static_cast<long>(isqrt(static_cast<std::uint64_t>(n)));
    long h = n - k * k;
    if (h == 0) return 2 * k;
    if (h <= k) return 2 * k + 1;
    return 2 * k + 2;
}

Decomposition decompose(long n) {
    if (n < 1) throw std::invalid_argument("decompose needs n >= 1");
    Decomposition d;
    d.k = static_cast<long>(isqrt(static_cast<std::uint64_t>(n)));
    d.h = n - d.k * d.k;
    return d;
}

namespace {

void check_grid_args(long n, long m) {
    if (n < 2 || m < 2)
        throw std::invalid_argument("grid formulas need n, m >= 2");
}

}  // namespace

long convex_cut_lower_bound(long n, long m) {
    check_grid_args(n, m);
    return ceil_two_sqrt(std::max(n, m));
}

long sge_p2(long n) {
    if (n < 2) throw std::invalid_argument("sge_p2 needs n >= 2");
    return ceil_two_sqrt(n);
}

long sge_p3(long n) {
    if (n < 2) throw std::invalid_argument("sge_p3 needs n >= 2");
    return ceil_two_sqrt(n + 1);
}

long sge_p4(long n) {
    if (n < 2) throw std::invalid_argument("sge_p4 needs n >= 2");
    auto [k, h] = decompose(n);
    if (h <= k - 1) return 2 * k + 1;
    if (h <= 2 * k - 1) return 2 * k + 2;
    return 2 * k + 3;  // h == 2k
}

std::variant<long, BoundBracket> sge_grid(long n, long m) {
    check_grid_args(n, m);
    if (m > n) std::swap(n, m);
    switch (m) {
        case 2: return sge_p2(n);
        case 3: return sge_p3(n);
        case 4: return sge_p4(n);
        default: break;
    }
    BoundBracket b;
    b.lower = ceil_two_sqrt(n);  // n >= m, and ceil_two_sqrt is nondecreasing
    b.lower_source = BoundSource::convex_cut;
    // With n >= m both two-pass bounds are weakly better in this orientation
    // than transposed, since the increments of ceil_two_sqrt shrink.
    long band = ceil_two_sqrt(n) + ceil_two_sqrt(m - 2);
    long corner = ceil_two_sqrt(n + 2) + ceil_two_sqrt(m) - 4;
    if (band <= corner) {
        b.upper = band;
        b.upper_source = BoundSource::band_two_pass;
    } else {
        b.upper = corner;
        b.upper_source = BoundSource::corner_two_pass;
    }
    return b;
}

long f3(long a, long b, long c) { return a * b + b * c + 2 * a * c; }

long f4(long a, long b, long c, long d) {
    return a * b + b * c + c * d + 2 * a * c + 2 * b * d + 3 * a * d;
}

MaxF3 max_f3(long s, long min_b) {
    if (s < 0 || min_b < 0) throw std::invalid_argument("max_f3 needs s, min_b >= 0");
    if (min_b > s) throw std::invalid_argument("max_f3 constraint infeasible: min_b > s");
    MaxF3 best{-1, {}};
    for (long a = 0; a <= s; ++a)
        for (long b = min_b; a + b <= s; ++b) {
            long c = s - a - b;
            long value = f3(a, b, c);
            if (value > best.value) best = {value, {a, b, c}};
        }
    return best;
}

MaxF4 max_f4(long s, F4Constraints cons) {
    if (s < 0 || cons.min_b < 0 || cons.min_c < 0 || cons.min_bc_sum < 0)
        throw std::invalid_argument("max_f4 needs nonnegative arguments");
    if (std::max(cons.min_bc_sum, cons.min_b + cons.min_c) > s)
        throw std::invalid_argument("max_f4 constraints infeasible");
    MaxF4 best{-1, {}};
    for (long a = 0; a <= s; ++a)
        for (long b = cons.min_b; a + b <= s; ++b)
            for (long c = cons.min_c; a + b + c <= s; ++c) {
                if (b + c < cons.min_bc_sum) continue;
                long d = s - a - b - c;
                long value = f4(a, b, c, d);
                if (value > best.value) best = {value, {a, b, c, d}};
            }
    return best;
}

ColumnType classify_column_type(unsigned rows_mask) {
    switch (rows_mask & 0xfu) {
        case 0b1111: return ColumnType::A;
        case 0b0111:            // {1,2,3}
        case 0b1110: return ColumnType::B;  // {2,3,4}
        case 0b1011:            // {1,2,4}
        case 0b1101: return ColumnType::C;  // {1,3,4}
        case 0b0011:            // {1,2}
        case 0b1100: return ColumnType::D;  // {3,4}
        case 0b0101:            // {1,3}
        case 0b1010: return ColumnType::E;  // {2,4}
        case 0b1001: return ColumnType::F;  // {1,4}
        case 0b0110: return ColumnType::G;  // {2,3}
        case 0b0001:            // {1}
        case 0b1000: return ColumnType::H;  // {4}
        case 0b0010:            // {2}
        case 0b0100: return ColumnType::I;  // {3}
        default: return ColumnType::untyped;
    }
}

ColumnType classify_column(const Certificate& c, int x) {
    if (c.grid.m != 4)
        throw std::invalid_argument("column types are defined for height-4 grids");
    if (x < 1 || x > c.grid.n) throw std::out_of_range("column out of range");
    unsigned mask = 0;
    for (Vertex v : c.s)
        if (v.x == x) mask |= 1u << (v.y - 1);
    return classify_column_type(mask);
}

int min_redundancy_of_type(ColumnType t) {
    switch (t) {
        case ColumnType::A: return 7;
        case ColumnType::B: return 2;
        case ColumnType::C: return 4;
        case ColumnType::D: return 1;
        case ColumnType::E: return 1;
        case ColumnType::F: return 2;
        case ColumnType::G: return 0;
        case ColumnType::H: return 3;
        case ColumnType::I: return 1;
        case ColumnType::untyped: break;
    }
    throw std::invalid_argument("untyped column has no redundancy bound");
}

char column_type_name(ColumnType t) {
    switch (t) {
        case ColumnType::A: return 'A';
        case ColumnType::B: return 'B';
        case ColumnType::C: return 'C';
        case ColumnType::D: return 'D';
        case ColumnType::E: return 'E';
        case ColumnType::F: return 'F';
        case ColumnType::G: return 'G';
        case ColumnType::H: return 'H';
        case ColumnType::I: return 'I';
        case ColumnType::untyped: return '-';
    }
    return '?';
}

}  // namespace sge
