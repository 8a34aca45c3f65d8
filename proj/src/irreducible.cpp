#include "meandist/irreducible.hpp"

#include <algorithm>
#include <cmath>

#include "meandist/auxint.hpp"
#include "meandist/oracle.hpp"

namespace meandist::irreducible {

namespace {

struct PlaneFrame {
    Vec3 origin, e1, e2, n;
    Vec2 to2(Vec3 v) const { return {dot(v - origin, e1), dot(v - origin, e2)}; }
};

PlaneFrame frame_of(const Polytope& A) {
    Vec3 n = polygon_normal(A);
    Vec3 e1 = A.vertices[1] - A.vertices[0];
    e1 = normalized(e1 - dot(e1, n) * n);
    return {A.vertices[0], e1, cross(n, e1), n};
}

}  // namespace

double point_polygon_moment(const Polytope& A, Vec3 B, int p) {
    if (A.dim_intrinsic != 2) throw Error(ErrorCode::DEGENERATE_POLYGON, "A must be a polygon");
    const double vol = measure(A);
    auto [foot, h] = project_point(A, B);
    if (h <= 1e-12 * std::max(diameter(A), 1.0))
        throw Error(ErrorCode::COPLANAR_POINT, "B lies in the polygon plane");

    PlaneFrame F = frame_of(A);
    Vec2 o = F.to2(foot);
    const size_t n = A.vertices.size();
    KahanSum total;
    for (size_t i = 0; i < n; ++i) {
        Vec2 w1 = F.to2(A.vertices[i]) - o;
        Vec2 w2 = F.to2(A.vertices[(i + 1) % n]) - o;
        Vec2 d = w2 - w1;
        double len = norm(d);
        if (len <= 0) continue;
        Vec2 u = d / len;
        Vec2 m = perp(u);
        double c = dot(w1, m);  // signed offset of the side's line
        double hi = std::abs(c);
        if (hi <= 1e-13 * diameter(A)) continue;  // line through proj B: degenerate triangle
        Vec2 foot2 = c * m;
        double t1 = dot(w1 - foot2, u), t2 = dot(w2 - foot2, u);
        double alpha = std::atan2(t1, hi), beta = std::atan2(t2, hi);
        double s = cross(w1, w2) > 0 ? 1.0 : -1.0;
        total.add(s * (auxint::I_val(p, 0, 0, hi / h, beta) -
                       auxint::I_val(p, 0, 0, hi / h, alpha)));
    }
    return std::pow(h, 2 + p) / vol * total.get();
}

double point_segment_moment(Vec3 a, Vec3 b, Vec3 V, int p) {
    Vec3 d = b - a;
    double len = norm(d);
    if (len <= 0) throw Error(ErrorCode::DEGENERATE, "zero segment");
    Vec3 u = d / len;
    double ta = dot(a - V, u), tb = dot(b - V, u);
    Vec3 off = (a - V) - ta * u;
    double h = norm(off);
    if (h <= 1e-13 * (len + dist(a, V)))
        throw Error(ErrorCode::COPLANAR_POINT, "V lies on the segment line");
    // integral of (h^2 + s^2)^{p/2} ds = h^{1+p} [K^(p-2)(s/h)]
    return std::pow(h, 1 + p) / len * (auxint::K(p - 2, tb / h) - auxint::K(p - 2, ta / h));
}

double skew_segments_moment(const Polytope& A, const Polytope& B, int p) {
    if (A.dim_intrinsic != 1 || B.dim_intrinsic != 1)
        throw Error(ErrorCode::BAD_INPUT, "expects two segments");
    auto rel = affine_relation(A, B);
    if (rel.kind != AffineRelation::SKEW)
        throw Error(ErrorCode::NOT_SKEW, "segments are not skew");
    Vec3 a1 = A.vertices[0], a2 = A.vertices[1];
    Vec3 b1 = B.vertices[0], b2 = B.vertices[1];
    Polytope par = make_polygon({a1 - b1, a2 - b1, a2 - b2, a1 - b2});
    return point_polygon_moment(par, Vec3{0, 0, 0}, p);
}

std::vector<Vec2> clip_convex_polygons(const std::vector<Vec2>& subject,
                                       const std::vector<Vec2>& clip) {
    std::vector<Vec2> out = subject;
    const size_t m = clip.size();
    for (size_t e = 0; e < m && !out.empty(); ++e) {
        Vec2 c1 = clip[e], c2 = clip[(e + 1) % m];
        std::vector<Vec2> in;
        in.swap(out);
        const size_t n = in.size();
        for (size_t i = 0; i < n; ++i) {
            Vec2 a = in[i], b = in[(i + 1) % n];
            double da = cross(c2 - c1, a - c1);
            double db = cross(c2 - c1, b - c1);
            bool ina = da >= 0, inb = db >= 0;
            if (ina) out.push_back(a);
            if (ina != inb) {
                double t = da / (da - db);
                out.push_back(a + t * (b - a));
            }
        }
    }
    return out;
}

double polygon_area(const std::vector<Vec2>& poly) {
    double s = 0;
    for (size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * std::abs(s);
}

double clip_segment_length(Vec2 a, Vec2 b, const std::vector<Vec2>& poly) {
    double t0 = 0, t1 = 1;
    Vec2 d = b - a;
    for (size_t e = 0; e < poly.size(); ++e) {
        Vec2 c1 = poly[e], c2 = poly[(e + 1) % poly.size()];
        Vec2 edge = c2 - c1;
        double denom = cross(edge, d);
        double num = cross(edge, c1 - a);
        if (std::abs(denom) <= 1e-12 * norm(edge) * norm(d)) {
            if (cross(edge, a - c1) < 0) return 0;  // parallel and outside
            continue;
        }
        double t = num / denom;
        // positive denom: entering halfplane as t grows
        if (denom > 0) t0 = std::max(t0, t);
        else t1 = std::min(t1, t);
        if (t0 >= t1) return 0;
    }
    return (t1 - t0) * norm(d);
}

namespace {

// Deterministic adaptive Simpson; reliable because the overlap integrands
// are split at their structural breakpoints before integration.
double adaptive_simpson(const std::function<double(double)>& f, double a, double fa, double m,
                        double fm, double b, double fb, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (std::abs(left + right - whole) < 15 * tol || depth > 48)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, tol / 2, depth + 1) +
           adaptive_simpson(f, m, fm, rm, frm, b, fb, right, tol / 2, depth + 1);
}

double quad1d(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, a, fa, m, fm, b, fb, whole, tol, 0);
}

// Integrate over [a, b] split at the sorted interior breakpoints.
double quad1d_pieces(const std::function<double(double)>& f, double a, double b,
                     std::vector<double>& cuts, double tol) {
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0;
    int pieces = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i] >= a - 1e-15 && cuts[i + 1] <= b + 1e-15 && cuts[i + 1] > cuts[i] + 1e-14)
            ++pieces;
    if (pieces == 0) return 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        if (lo < a - 1e-15 || hi > b + 1e-15 || hi <= lo + 1e-14) continue;
        total += quad1d(f, lo, hi, tol / pieces);
    }
    return total;
}

// Allocation-free Sutherland-Hodgman for the overlap integrand; subject and
// clip stay small (at most pentagon vs pentagon).
double clip_area_fast(const Vec2* subj, int ns, Vec2 shift, const std::vector<Vec2>& clip) {
    Vec2 ping[24], pong[24];
    int n = ns;
    for (int i = 0; i < ns; ++i) ping[i] = subj[i] + shift;
    Vec2* in = ping;
    Vec2* out = pong;
    const int m = int(clip.size());
    for (int e = 0; e < m && n > 0; ++e) {
        Vec2 c1 = clip[e], c2 = clip[(e + 1) % m];
        Vec2 ce = c2 - c1;
        int k = 0;
        for (int i = 0; i < n; ++i) {
            Vec2 a = in[i], b = in[(i + 1) % n];
            double da = cross(ce, a - c1), db = cross(ce, b - c1);
            if (da >= 0) out[k++] = a;
            if ((da >= 0) != (db >= 0)) out[k++] = a + (da / (da - db)) * (b - a);
        }
        std::swap(in, out);
        n = k;
    }
    double s = 0;
    for (int i = 0; i < n; ++i) s += cross(in[i], in[(i + 1) % n]);
    return 0.5 * std::abs(s);
}

}  // namespace

double overlap_moment_numeric(const Polytope& A, const std::vector<Polytope>& B, int p,
                              double abs_tol) {
    if (A.dim_intrinsic != 2) throw Error(ErrorCode::BAD_INPUT, "A must be a face");
    if (B.empty()) throw Error(ErrorCode::BAD_INPUT, "B is empty");
    PlaneFrame F = frame_of(A);

    double h = -1;
    double volB = 0;
    bool face_case = (B.size() == 1 && B[0].dim_intrinsic == 2);
    std::vector<Vec2> b_poly;
    std::vector<std::pair<Vec2, Vec2>> b_segs;
    const double tol = 1e-9 * diameter(A);

    auto note_h = [&](double hv) {
        if (h < 0) h = hv;
        else if (std::abs(h - hv) > tol * 10 + 1e-9)
            throw Error(ErrorCode::BAD_INPUT, "B parts at differing separations");
    };

    if (face_case) {
        auto rel = affine_relation(A, B[0]);
        if (rel.kind != AffineRelation::PARALLEL_SEPARATED)
            throw Error(ErrorCode::BAD_INPUT, "A and B are not parallel-separated");
        note_h(rel.separation);
        volB = measure(B[0]);
        for (const auto& v : B[0].vertices) b_poly.push_back(F.to2(v));
        if (polygon_area(b_poly) > 0 && cross(b_poly[1] - b_poly[0], b_poly[2] - b_poly[0]) < 0)
            std::reverse(b_poly.begin(), b_poly.end());
    } else {
        for (const auto& seg : B) {
            if (seg.dim_intrinsic != 1)
                throw Error(ErrorCode::BAD_INPUT, "B parts must be segments");
            auto rel = affine_relation(A, seg);
            if (rel.kind != AffineRelation::PARALLEL_SEPARATED)
                throw Error(ErrorCode::BAD_INPUT, "segment not parallel to A");
            note_h(rel.separation);
            volB += measure(seg);
            b_segs.push_back({F.to2(seg.vertices[0]), F.to2(seg.vertices[1])});
        }
    }

    std::vector<Vec2> a_poly;
    for (const auto& v : A.vertices) a_poly.push_back(F.to2(v));
    if (cross(a_poly[1] - a_poly[0], a_poly[2] - a_poly[0]) < 0)
        std::reverse(a_poly.begin(), a_poly.end());

    auto bbox = [](const std::vector<Vec2>& pts) {
        Vec2 lo = pts[0], hi = pts[0];
        for (auto q : pts) {
            lo = {std::min(lo.x, q.x), std::min(lo.y, q.y)};
            hi = {std::max(hi.x, q.x), std::max(hi.y, q.y)};
        }
        return std::pair{lo, hi};
    };
    const double norm_ab = measure(A) * volB;
    const double tol_int = abs_tol * norm_ab;
    const double geom_tol = 1e-11 * diameter(A);

    // Nested 1D x 1D quadrature.  The overlap factor is piecewise polynomial;
    // its kinks move across the inner sweep as vertex-edge incidences, so the
    // inner integral is split at those analytically computed abscissas and
    // the outer range at the heights where the incidence pattern changes.
    if (face_case) {
        auto [alo, ahi] = bbox(a_poly);
        auto [blo, bhi] = bbox(b_poly);
        double x0 = alo.x - bhi.x, x1 = ahi.x - blo.x;
        double y0 = alo.y - bhi.y, y1 = ahi.y - blo.y;
        if (x0 >= x1 || y0 >= y1)
            throw Error(ErrorCode::NO_OVERLAP_SUPPORT, "empty Minkowski support");

        std::vector<double> ycuts;
        for (auto va : a_poly)
            for (auto vb : b_poly) {
                double cut = va.y - vb.y;
                if (cut > y0 + geom_tol && cut < y1 - geom_tol) ycuts.push_back(cut);
            }

        auto inner = [&](double ky) {
            std::vector<double> xcuts;
            // B vertex crossing an A edge line
            for (auto vb : b_poly) {
                double vy = vb.y + ky;
                for (size_t i = 0; i < a_poly.size(); ++i) {
                    Vec2 p = a_poly[i], q2 = a_poly[(i + 1) % a_poly.size()];
                    if (std::abs(q2.y - p.y) <= geom_tol) continue;
                    double t = (vy - p.y) / (q2.y - p.y);
                    xcuts.push_back(p.x + t * (q2.x - p.x) - vb.x);
                }
            }
            // A vertex crossing a B edge line
            for (auto va : a_poly) {
                for (size_t i = 0; i < b_poly.size(); ++i) {
                    Vec2 p = b_poly[i], q2 = b_poly[(i + 1) % b_poly.size()];
                    if (std::abs(q2.y - p.y) <= geom_tol) continue;
                    double t = (va.y - ky - p.y) / (q2.y - p.y);
                    xcuts.push_back(va.x - p.x - t * (q2.x - p.x));
                }
            }
            auto f = [&](double kx) {
                double w = clip_area_fast(b_poly.data(), int(b_poly.size()), {kx, ky}, a_poly);
                if (w == 0) return 0.0;
                return std::pow(h * h + kx * kx + ky * ky, p / 2.0) * w;
            };
            return quad1d_pieces(f, x0, x1, xcuts, tol_int * 1e-3 / (y1 - y0));
        };
        std::vector<double> outer_cuts = ycuts;
        double integral = quad1d_pieces(inner, y0, y1, outer_cuts, tol_int);
        return integral / norm_ab;
    }

    // Edge set: per segment in a frame aligned with it; chord jumps where the
    // segment is collinear with a parallel A edge, kinks at endpoint-edge and
    // vertex-on-line incidences.
    double integral = 0;
    bool any_support = false;
    for (const auto& seg : b_segs) {
        Vec2 u = seg.second - seg.first;
        u = u / norm(u);
        Vec2 w = perp(u);
        std::vector<Vec2> a_rot;
        for (auto q : a_poly) a_rot.push_back({dot(q, u), dot(q, w)});
        Vec2 s1{dot(seg.first, u), dot(seg.first, w)};
        Vec2 s2{dot(seg.second, u), dot(seg.second, w)};
        if (s2.x < s1.x) std::swap(s1, s2);
        auto [alo, ahi] = bbox(a_rot);
        double x0 = alo.x - s2.x, x1 = ahi.x - s1.x;
        double y0 = alo.y - s1.y, y1 = ahi.y - s1.y;
        if (x0 >= x1 || y0 >= y1) continue;
        any_support = true;

        std::vector<double> ycuts;
        for (auto va : a_rot) {
            double cut = va.y - s1.y;  // vertex height events (includes collinear jumps)
            if (cut > y0 + geom_tol && cut < y1 - geom_tol) ycuts.push_back(cut);
        }

        auto inner = [&](double ky) {
            double vy = s1.y + ky;
            std::vector<double> xcuts;
            for (size_t i = 0; i < a_rot.size(); ++i) {
                Vec2 pp = a_rot[i], qq = a_rot[(i + 1) % a_rot.size()];
                if (std::abs(qq.y - pp.y) <= geom_tol) continue;
                double t = (vy - pp.y) / (qq.y - pp.y);
                double xl = pp.x + t * (qq.x - pp.x);
                xcuts.push_back(xl - s1.x);
                xcuts.push_back(xl - s2.x);
            }
            auto f = [&](double kx) {
                double len =
                    clip_segment_length(s1 + Vec2{kx, ky}, s2 + Vec2{kx, ky}, a_rot);
                if (len == 0) return 0.0;
                return std::pow(h * h + kx * kx + ky * ky, p / 2.0) * len;
            };
            return quad1d_pieces(f, x0, x1, xcuts, tol_int * 1e-3 / (y1 - y0));
        };
        std::vector<double> outer_cuts = ycuts;
        integral += quad1d_pieces(inner, y0, y1, outer_cuts,
                                  tol_int / double(b_segs.size()));
    }
    if (!any_support) throw Error(ErrorCode::NO_OVERLAP_SUPPORT, "empty Minkowski support");
    return integral / norm_ab;
}

double overlap_moment_exact(const OverlapDiagram& d, int p) {
    KahanSum total;
    for (const auto& pc : d.pieces) {
        KahanSum piece;
        static constexpr int kI[6] = {0, 1, 0, 2, 1, 0};
        static constexpr int kJ[6] = {0, 0, 1, 0, 1, 2};
        for (int t = 0; t < 6; ++t) {
            if (pc.coeffs[t] == 0) continue;
            piece.add(pc.coeffs[t] * std::pow(pc.h, kI[t] + kJ[t]) *
                      auxint::I_val(p, kI[t], kJ[t], pc.q, pc.gamma));
        }
        total.add(pc.sign * std::pow(pc.h, 2 + p) * piece.get());
    }
    return std::pow(d.scale, p) * d.symmetry_fold / d.norm * total.get();
}

}  // namespace meandist::irreducible
