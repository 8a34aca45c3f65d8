#include "meandist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <thread>

namespace meandist::oracle {

namespace {

bool solid_is_convex(const Polytope& P) {
    const double tol = 1e-9 * diameter(P);
    for (size_t k = 0; k < P.faces.size(); ++k) {
        Vec3 n = side_normal(P, int(k));
        Vec3 x0 = P.vertices[P.faces[k][0]];
        for (const auto& v : P.vertices)
            if (dot(v - x0, n) > tol) return false;
    }
    return true;
}

double tetra_vol(Vec3 a, Vec3 b, Vec3 c, Vec3 d) {
    return std::abs(dot(b - a, cross(c - a, d - a))) / 6.0;
}

}  // namespace

UniformSampler::UniformSampler(const Polytope& P) : P_(P) {
    if (measure(P) <= 0) throw Error(ErrorCode::ZERO_MEASURE, "sampler needs positive measure");
    Vec3 c = vertex_centroid(P);

    if (P.dim_intrinsic == 1) {
        cells_.push_back({P.vertices[0], P.vertices[1], P.vertices[1], P.vertices[1], 1, 1.0});
        return;
    }
    if (P.dim_intrinsic == 2) {
        if (!polygon_is_convex(P)) {
            planar_rejection_ = true;
            Vec3 n = polygon_normal(P);
            plane_origin_ = P.vertices[0];
            plane_e1_ = normalized(P.vertices[1] - P.vertices[0] -
                                   dot(P.vertices[1] - P.vertices[0], n) * n);
            plane_e2_ = cross(n, plane_e1_);
            for (const auto& v : P.vertices)
                poly2_.push_back({dot(v - plane_origin_, plane_e1_),
                                  dot(v - plane_origin_, plane_e2_)});
            lo2_ = hi2_ = poly2_[0];
            for (auto q : poly2_) {
                lo2_ = {std::min(lo2_.x, q.x), std::min(lo2_.y, q.y)};
                hi2_ = {std::max(hi2_.x, q.x), std::max(hi2_.y, q.y)};
            }
            return;
        }
        double total = 0;
        for (size_t i = 0; i < P.vertices.size(); ++i) {
            Vec3 a = P.vertices[i], b = P.vertices[(i + 1) % P.vertices.size()];
            double area = 0.5 * norm(cross(a - c, b - c));
            if (area <= 0) continue;
            total += area;
            cells_.push_back({c, a, b, b, 2, total});
        }
        for (auto& cell : cells_) cell.cum /= total;
        return;
    }
    if (solid_is_convex(P)) {
        // Fan tetrahedralization from the centroid; validated by positive
        // orientation of every fan cell.
        double total = 0;
        for (size_t k = 0; k < P.faces.size(); ++k) {
            const auto& f = P.faces[k];
            for (size_t i = 1; i + 1 < f.size(); ++i) {
                Vec3 a = P.vertices[f[0]], b = P.vertices[f[i]], d = P.vertices[f[i + 1]];
                double o = dot(a - c, cross(b - c, d - c));
                if (o <= 0) throw Error(ErrorCode::BAD_INPUT, "fan cell with bad orientation");
                double vol = tetra_vol(c, a, b, d);
                total += vol;
                cells_.push_back({c, a, b, d, 3, total});
            }
        }
        for (auto& cell : cells_) cell.cum /= total;
        return;
    }
    rejection_ = true;
    lo_ = hi_ = P.vertices.front();
    for (const auto& v : P.vertices) {
        lo_ = {std::min(lo_.x, v.x), std::min(lo_.y, v.y), std::min(lo_.z, v.z)};
        hi_ = {std::max(hi_.x, v.x), std::max(hi_.y, v.y), std::max(hi_.z, v.z)};
    }
}

bool UniformSampler::inside(Vec3 x) const {
    // Ray parity along +x with a tiny direction jitter baked in to dodge
    // edge-grazing rays on axis-aligned fixtures.
    const Vec3 dir = normalized(Vec3{1.0, 1.735e-7, 2.931e-7});
    int hits = 0;
    for (size_t k = 0; k < P_.faces.size(); ++k) {
        const auto& f = P_.faces[k];
        Vec3 n = side_normal(P_, int(k));
        double denom = dot(n, dir);
        if (std::abs(denom) < 1e-15) continue;
        double t = dot(P_.vertices[f[0]] - x, n) / denom;
        if (t <= 0) continue;
        Vec3 hit = x + t * dir;
        // point-in-face via winding in the face plane
        int cross_count = 0;
        Vec3 u = normalized(P_.vertices[f[1]] - P_.vertices[f[0]]);
        Vec3 v = cross(n, u);
        double hx = dot(hit - P_.vertices[f[0]], u), hy = dot(hit - P_.vertices[f[0]], v);
        for (size_t i = 0; i < f.size(); ++i) {
            Vec3 A = P_.vertices[f[i]] - P_.vertices[f[0]];
            Vec3 B = P_.vertices[f[(i + 1) % f.size()]] - P_.vertices[f[0]];
            double ax = dot(A, u) - hx, ay = dot(A, v) - hy;
            double bx = dot(B, u) - hx, by = dot(B, v) - hy;
            if ((ay > 0) != (by > 0)) {
                double xi = ax + ay * (bx - ax) / (ay - by);
                if (xi > 0) ++cross_count;
            }
        }
        if (cross_count % 2 == 1) ++hits;
    }
    return hits % 2 == 1;
}

Vec3 UniformSampler::sample(CounterRng& rng) const {
    if (planar_rejection_) {
        for (int it = 0; it < 100000; ++it) {
            Vec2 k{lo2_.x + (hi2_.x - lo2_.x) * rng.next_double(),
                   lo2_.y + (hi2_.y - lo2_.y) * rng.next_double()};
            int crossings = 0;
            for (size_t i = 0; i < poly2_.size(); ++i) {
                Vec2 a = poly2_[i] - k, b = poly2_[(i + 1) % poly2_.size()] - k;
                if ((a.y > 0) != (b.y > 0)) {
                    double xi = a.x + a.y * (b.x - a.x) / (a.y - b.y);
                    if (xi > 0) ++crossings;
                }
            }
            if (crossings % 2 == 1)
                return plane_origin_ + k.x * plane_e1_ + k.y * plane_e2_;
        }
        throw Error(ErrorCode::ZERO_MEASURE, "rejection sampler starved");
    }
    if (rejection_) {
        for (int it = 0; it < 100000; ++it) {
            Vec3 x{lo_.x + (hi_.x - lo_.x) * rng.next_double(),
                   lo_.y + (hi_.y - lo_.y) * rng.next_double(),
                   lo_.z + (hi_.z - lo_.z) * rng.next_double()};
            if (inside(x)) return x;
        }
        throw Error(ErrorCode::ZERO_MEASURE, "rejection sampler starved");
    }
    if (P_.dim_intrinsic == 0) return P_.vertices[0];

    double u = rng.next_double();
    auto it = std::lower_bound(cells_.begin(), cells_.end(), u,
                               [](const Cell& c, double val) { return c.cum < val; });
    if (it == cells_.end()) it = std::prev(cells_.end());
    const Cell& c = *it;

    if (c.dim == 1) {
        double t = rng.next_double();
        return c.a + t * (c.b - c.a);
    }
    if (c.dim == 2) {
        double r1 = rng.next_double(), r2 = rng.next_double();
        if (r1 + r2 > 1) {
            r1 = 1 - r1;
            r2 = 1 - r2;
        }
        return c.a + r1 * (c.b - c.a) + r2 * (c.c - c.a);
    }
    // Uniform barycentric weights on a tetrahedron via sorted spacings.
    double t[3] = {rng.next_double(), rng.next_double(), rng.next_double()};
    std::sort(t, t + 3);
    double w0 = t[0], w1 = t[1] - t[0], w2 = t[2] - t[1], w3 = 1 - t[2];
    return w0 * c.a + w1 * c.b + w2 * c.c + w3 * c.d;
}

namespace {

struct StreamStat {
    double sum = 0, sumsq = 0;
};

constexpr uint64_t kStreamLen = 1 << 16;

int max_threads() {
    if (const char* env = std::getenv("MEANDIST_MAX_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

}  // namespace

McEstimate estimate_moment(const Polytope& A, const Polytope& B, int p, uint64_t n_samples,
                           uint64_t seed) {
    UniformSampler sa(A);
    UniformSampler sb(B);
    const uint64_t n_streams = (n_samples + kStreamLen - 1) / kStreamLen;
    std::vector<StreamStat> stats(n_streams);

    auto run = [&](uint64_t s0, uint64_t s1) {
        for (uint64_t s = s0; s < s1; ++s) {
            CounterRng rng(seed, s);
            uint64_t count = std::min(kStreamLen, n_samples - s * kStreamLen);
            double sum = 0, sumsq = 0;
            for (uint64_t i = 0; i < count; ++i) {
                Vec3 x = sa.sample(rng);
                Vec3 y = sb.sample(rng);
                double d2 = dot(x - y, x - y);
                double v;
                switch (p) {
                    case 0: v = 1.0; break;
                    case 1: v = std::sqrt(d2); break;
                    case 2: v = d2; break;
                    case -1: v = 1.0 / std::sqrt(d2); break;
                    case 3: v = d2 * std::sqrt(d2); break;
                    case 4: v = d2 * d2; break;
                    default: v = std::pow(d2, p / 2.0); break;
                }
                sum += v;
                sumsq += v * v;
            }
            stats[s] = {sum, sumsq};
        }
    };

    int nt = std::min<int>(max_threads(), int(n_streams));
    if (nt <= 1) {
        run(0, n_streams);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (n_streams + nt - 1) / nt;
        for (int t = 0; t < nt; ++t) {
            uint64_t s0 = t * chunk, s1 = std::min<uint64_t>(n_streams, s0 + chunk);
            if (s0 < s1) pool.emplace_back(run, s0, s1);
        }
        for (auto& th : pool) th.join();
    }

    double sum = 0, sumsq = 0;  // combined in stream-index order
    for (const auto& st : stats) {
        sum += st.sum;
        sumsq += st.sumsq;
    }
    double mean = sum / double(n_samples);
    double var = std::max(0.0, sumsq / double(n_samples) - mean * mean);
    double sd = std::sqrt(var / double(n_samples));
    return {mean, sd, n_samples, seed};
}

namespace {

// 5-point Gauss-Legendre nodes/weights on [0,1].
constexpr double kGx[5] = {0.046910077030668004, 0.23076534494715845, 0.5,
                           0.76923465505284155, 0.95308992296933200};
constexpr double kGw[5] = {0.11846344252809454, 0.23931433524968324, 0.28444444444444444,
                           0.23931433524968324, 0.11846344252809454};
// 3-point rule for the embedded error estimate.
constexpr double kG3x[3] = {0.11270166537925831, 0.5, 0.88729833462074169};
constexpr double kG3w[3] = {5.0 / 18, 8.0 / 18, 5.0 / 18};

struct QuadCell {
    double x0, x1, y0, y1;
    double value, err;
    int depth;
    long order;  // deterministic tie-break in the refinement heap
};

struct CellCmp {
    bool operator()(const QuadCell& a, const QuadCell& b) const {
        if (a.err != b.err) return a.err < b.err;
        return a.order > b.order;
    }
};

}  // namespace

// Globally adaptive: always refine the cell with the largest embedded-pair
// error estimate, so line kinks do not force uniform deep refinement.
double quad2d_rect(const std::function<double(double, double)>& f, double x0, double x1,
                   double y0, double y1, double abs_tol) {
    auto eval = [&](double a0, double a1, double b0, double b1, int depth, long order) {
        double hx = a1 - a0, hy = b1 - b0;
        double s7 = 0, s3 = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                s7 += kGw[i] * kGw[j] * f(a0 + hx * kGx[i], b0 + hy * kGx[j]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s3 += kG3w[i] * kG3w[j] * f(a0 + hx * kG3x[i], b0 + hy * kG3x[j]);
        return QuadCell{a0, a1, b0, b1, s7 * hx * hy, std::abs(s7 - s3) * hx * hy, depth, order};
    };

    long counter = 0;
    constexpr long kMaxCells = 2000000;
    constexpr int kMaxDepth = 40;
    std::priority_queue<QuadCell, std::vector<QuadCell>, CellCmp> heap;
    QuadCell root = eval(x0, x1, y0, y1, 0, counter++);
    double total = root.value, toterr = root.err;
    heap.push(root);

    while (toterr > abs_tol && counter < kMaxCells) {
        QuadCell c = heap.top();
        heap.pop();
        if (c.depth >= kMaxDepth || c.err <= 0) break;  // cannot improve further
        total -= c.value;
        toterr -= c.err;
        double xm = 0.5 * (c.x0 + c.x1), ym = 0.5 * (c.y0 + c.y1);
        for (auto [a0, a1, b0, b1] :
             {std::array<double, 4>{c.x0, xm, c.y0, ym}, {xm, c.x1, c.y0, ym},
              {c.x0, xm, ym, c.y1}, {xm, c.x1, ym, c.y1}}) {
            QuadCell child = eval(a0, a1, b0, b1, c.depth + 1, counter++);
            total += child.value;
            toterr += child.err;
            heap.push(child);
        }
    }
    if (toterr > 8 * abs_tol)
        throw Error(ErrorCode::TOLERANCE_NOT_MET, "estimated error " + std::to_string(toterr));
    return total;
}

double quad2d_tri(const std::function<double(double, double)>& f, Vec2 a, Vec2 b, Vec2 c,
                  double abs_tol) {
    // Duffy map: (u,v) in [0,1]^2 -> a + u(b-a) + uv(c-b), Jacobian 2*Area*u.
    double area2 = cross(b - a, c - a);  // signed, twice the area
    auto g = [&](double u, double v) {
        Vec2 P = a + u * (b - a) + (u * v) * (c - b);
        return f(P.x, P.y) * u * area2;
    };
    return quad2d_rect(g, 0, 1, 0, 1, abs_tol);
}

}  // namespace meandist::oracle
