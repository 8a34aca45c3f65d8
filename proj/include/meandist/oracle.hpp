#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "meandist/geom.hpp"

namespace meandist::oracle {

// Counter-based generator: output is a pure function of (seed, stream, counter),
// so parallel streams reproduce bit-identically under any scheduling.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    uint64_t next_u64() {
        uint64_t x = seed_ ^ mix(stream_ * 0x9E3779B97F4A7C15ull + 0x61C8864680B583EBull);
        x += counter_++ * 0x9E3779B97F4A7C15ull;
        return mix(mix(x));
    }
    // Uniform in [0, 1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

  private:
    uint64_t seed_, stream_;
    uint64_t counter_ = 0;
};

// Uniform sampler over a flat polytope.  Convex solids and polygons use fan
// decomposition from the vertex centroid; nonconvex solids fall back to
// bounding-box rejection with a ray-parity inside test.
class UniformSampler {
  public:
    explicit UniformSampler(const Polytope& P);
    Vec3 sample(CounterRng& rng) const;

  private:
    struct Cell {
        Vec3 a, b, c, d;  // simplex corners (triangles repeat d = c)
        int dim;
        double cum;       // cumulative measure fraction
    };
    Polytope P_;
    std::vector<Cell> cells_;
    bool rejection_ = false;
    Vec3 lo_, hi_;
    // in-plane data for nonconvex polygons
    bool planar_rejection_ = false;
    Vec3 plane_origin_, plane_e1_, plane_e2_;
    std::vector<Vec2> poly2_;
    Vec2 lo2_, hi2_;
    bool inside(Vec3 x) const;
};

struct McEstimate {
    double mean;
    double stderr_;
    uint64_t n_samples;
    uint64_t seed;
};

// Mean of |X - Y|^p over independent uniform pairs; deterministic given
// (seed, n_samples) irrespective of thread count (fixed stream partition,
// partial sums combined in stream order).  Thread cap: MEANDIST_MAX_THREADS.
McEstimate estimate_moment(const Polytope& A, const Polytope& B, int p, uint64_t n_samples,
                           uint64_t seed);

// Adaptive 2D quadrature with an embedded Gauss pair on rectangles;
// deterministic refinement.  Throws TOLERANCE_NOT_MET past max depth.
double quad2d_rect(const std::function<double(double, double)>& f, double x0, double x1,
                   double y0, double y1, double abs_tol);

// Triangle domain via Duffy transform onto the unit square.
double quad2d_tri(const std::function<double(double, double)>& f, Vec2 a, Vec2 b, Vec2 c,
                  double abs_tol);

}  // namespace meandist::oracle
