#pragma once

namespace meandist::polygon2d {

// Distance moments in regular n-gons of circumradius `scale` (default 1).
// p is an integer >= -1 throughout.

struct PolygonQuery {
    int n;                        // >= 3
    int p = 1;                    // >= -1; ignored when limit_p_minus2 is set
    bool limit_p_minus2 = false;  // request lim (2+p) L^(p) as p -> -2+
    double scale = 1.0;           // circumradius
};
double polygon_moment(const PolygonQuery& query);

// Antiderivative-based integral of csc^m over [a, b] in (0, pi), m >= 1.
double csc_power_integral(int m, double a, double b);

// P_{E_i V_0}: edge i against vertex 0, 1 <= i <= n-2 (0 by definition at the ends).
double edge_vertex_moment(int n, int i, int p);

// P_{E_i dE_0} via the limit redefinition; i = n/2 uses the parallel-edge
// overlap closed form with separation 2 cos(pi/n).
double edge_dedge_moment(int n, int i, int p);

// Full moment L^(p)_22; dispatches on the parity of n.
double polygon_moment(int n, int p, double scale = 1.0);

// Unified path valid for both parities (limit redefinition); used to
// cross-check the parity dispatch.
double polygon_moment_unified(int n, int p, double scale = 1.0);

// Closed cosine-polynomial forms for even p in {2,...,14} with the
// Kronecker-delta corrections.
double even_moment_closed(int n, int p);

// Disk moment P_22d(p) for the unit disk.
double disk_moment(int p);

struct LimitReport {
    double p_minus2_limit;     // lim (2+p) L^(p)_22 = 4 pi / (n sin(2 pi / n))
    double disk_p1;            // P_22d(1) = 128/(45 pi)
    double asymptotic_p1;      // leading-order prediction for L^(1)_22
};
LimitReport polygon_limit_checks(int n);

}  // namespace meandist::polygon2d
