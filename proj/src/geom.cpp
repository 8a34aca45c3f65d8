#include "meandist/geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace meandist {

namespace {

constexpr double kRelTol = 1e-9;  // relative to bounding-box diameter

double diameter_of(const std::vector<Vec3>& v) {
    Vec3 lo = v.front(), hi = v.front();
    for (const auto& p : v) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    return std::max(norm(hi - lo), 1e-300);
}

AffineHull hull_of_points(const std::vector<Vec3>& pts) {
    AffineHull H;
    H.origin = pts.front();
    H.dim = 0;
    const double tol = kRelTol * diameter_of(pts);
    for (const auto& p : pts) {
        Vec3 d = p - H.origin;
        for (int k = 0; k < H.dim; ++k) d = d - dot(d, H.basis[k]) * H.basis[k];
        if (norm(d) > tol && H.dim < 3) H.basis[H.dim++] = normalized(d);
    }
    if (H.dim == 2) H.normal = normalized(cross(H.basis[0], H.basis[1]));
    return H;
}

std::vector<std::array<int, 2>> derive_edges(const std::vector<std::vector<int>>& faces) {
    std::vector<std::array<int, 2>> out;
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& f : faces) {
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            auto key = std::minmax(a, b);
            if (!seen.count({key.first, key.second})) {
                seen[{key.first, key.second}] = true;
                out.push_back({key.first, key.second});
            }
        }
    }
    return out;
}

double signed_volume(const std::vector<Vec3>& v, const std::vector<std::vector<int>>& faces) {
    double vol = 0;
    for (const auto& f : faces)
        for (size_t i = 1; i + 1 < f.size(); ++i)
            vol += dot(v[f[0]], cross(v[f[i]], v[f[i + 1]])) / 6.0;
    return vol;
}

}  // namespace

Polytope make_point(Vec3 v) {
    Polytope P;
    P.dim_intrinsic = 0;
    P.vertices = {v};
    return P;
}

Polytope make_segment(Vec3 a, Vec3 b) {
    if (dist(a, b) <= kRelTol * (norm(a) + norm(b) + 1))
        throw Error(ErrorCode::DEGENERATE, "zero-length segment");
    Polytope P;
    P.dim_intrinsic = 1;
    P.vertices = {a, b};
    P.edges = {{0, 1}};
    return P;
}

Polytope make_polygon(std::vector<Vec3> verts, int dim_ambient) {
    if (verts.size() < 3) throw Error(ErrorCode::DEGENERATE_POLYGON, "fewer than 3 vertices");
    Polytope P;
    P.dim_ambient = dim_ambient;
    P.vertices = std::move(verts);
    auto H = hull_of_points(P.vertices);
    if (H.dim != 2) throw Error(ErrorCode::DEGENERATE_POLYGON, "vertices are not rank-2");
    P.dim_intrinsic = 2;
    const double tol = kRelTol * diameter_of(P.vertices);
    if (H.dim == 2) {
        for (const auto& v : P.vertices)
            if (std::abs(dot(v - H.origin, H.normal)) > tol)
                throw Error(ErrorCode::DEGENERATE_POLYGON, "vertices not coplanar");
    }
    for (size_t i = 0; i < P.vertices.size(); ++i)
        P.edges.push_back({int(i), int((i + 1) % P.vertices.size())});
    return P;
}

Polytope make_solid(std::vector<Vec3> verts, std::vector<std::vector<int>> faces) {
    Polytope P;
    P.vertices = std::move(verts);
    P.faces = std::move(faces);
    const double diam = diameter_of(P.vertices);
    const double tol = kRelTol * diam;

    for (const auto& f : P.faces) {
        if (f.size() < 3) throw Error(ErrorCode::DEGENERATE, "face with < 3 vertices");
        std::vector<int> u(f);
        std::sort(u.begin(), u.end());
        if (std::adjacent_find(u.begin(), u.end()) != u.end())
            throw Error(ErrorCode::DEGENERATE, "face repeats a vertex");
        std::vector<Vec3> fv;
        for (int i : f) {
            if (i < 0 || i >= int(P.vertices.size()))
                throw Error(ErrorCode::BAD_INPUT, "face index out of range");
            fv.push_back(P.vertices[i]);
        }
        auto H = hull_of_points(fv);
        if (H.dim != 2) throw Error(ErrorCode::DEGENERATE, "degenerate face");
        for (const auto& v : fv)
            if (std::abs(dot(v - H.origin, H.normal)) > tol)
                throw Error(ErrorCode::DEGENERATE, "face vertices not coplanar");
    }

    // Each undirected edge must be used by exactly two faces; repair windings
    // so the two uses run in opposite directions, then fix the global sign.
    std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> uses;  // edge -> (face, fwd)
    for (size_t k = 0; k < P.faces.size(); ++k) {
        const auto& f = P.faces[k];
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            bool fwd = a < b;
            uses[{std::min(a, b), std::max(a, b)}].push_back({int(k), fwd});
        }
    }
    for (const auto& [e, u] : uses)
        if (u.size() != 2)
            throw Error(ErrorCode::OPEN_SURFACE,
                        "edge used " + std::to_string(u.size()) + " times");

    std::vector<int> state(P.faces.size(), -1);  // -1 unseen, 0 keep, 1 flip
    std::vector<int> stack{0};
    state[0] = 0;
    while (!stack.empty()) {
        int k = stack.back();
        stack.pop_back();
        const auto& f = P.faces[k];
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            bool fwd = (state[k] == 0) ? (a < b) : (a > b);
            auto& u = uses[{std::min(a, b), std::max(a, b)}];
            for (auto [k2, fwd2] : u) {
                if (k2 == k) continue;
                bool eff2 = fwd2;
                int want = (eff2 == fwd) ? 1 : 0;  // same direction means neighbor flips
                if (state[k2] == -1) {
                    state[k2] = want;
                    stack.push_back(k2);
                } else if (state[k2] != want) {
                    throw Error(ErrorCode::OPEN_SURFACE, "non-orientable face winding");
                }
            }
        }
    }
    for (size_t k = 0; k < P.faces.size(); ++k) {
        if (state[k] == 1) {
            std::reverse(P.faces[k].begin(), P.faces[k].end());
            P.flipped_faces.push_back(int(k));
        }
    }
    if (signed_volume(P.vertices, P.faces) < 0) {
        for (size_t k = 0; k < P.faces.size(); ++k) {
            std::reverse(P.faces[k].begin(), P.faces[k].end());
            P.flipped_faces.push_back(int(k));
        }
    }
    double vol = signed_volume(P.vertices, P.faces);
    if (vol < 1e-14 * diam * diam * diam)
        throw Error(ErrorCode::DEGENERATE, "solid volume below tolerance");
    P.dim_intrinsic = 3;
    P.edges = derive_edges(P.faces);
    return P;
}

double diameter(const Polytope& P) { return diameter_of(P.vertices); }

Vec3 vertex_centroid(const Polytope& P) {
    Vec3 c{};
    for (const auto& v : P.vertices) c += v;
    return c / double(P.vertices.size());
}

AffineHull affine_hull(const Polytope& P) { return hull_of_points(P.vertices); }

bool hull_contains(const AffineHull& H, Vec3 X, double tol) {
    Vec3 d = X - H.origin;
    for (int k = 0; k < H.dim; ++k) d = d - dot(d, H.basis[k]) * H.basis[k];
    return norm(d) <= tol;
}

Vec3 polygon_normal(const Polytope& P) {
    // Newell's method; robust for any simple planar polygon.
    Vec3 n{};
    const auto& v = P.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec3 &a = v[i], &b = v[(i + 1) % v.size()];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    double len = norm(n);
    if (len <= 0) throw Error(ErrorCode::DEGENERATE_POLYGON, "zero normal");
    return n / len;
}

bool polygon_is_convex(const Polytope& P) {
    if (P.dim_intrinsic != 2) return false;
    Vec3 n = polygon_normal(P);
    const auto& v = P.vertices;
    const double tol = 1e-12 * diameter(P) * diameter(P);
    for (size_t i = 0; i < v.size(); ++i) {
        Vec3 a = v[(i + 1) % v.size()] - v[i];
        Vec3 b = v[(i + 2) % v.size()] - v[(i + 1) % v.size()];
        if (dot(cross(a, b), n) < -tol) return false;
    }
    return true;
}

double measure(const Polytope& P) {
    switch (P.dim_intrinsic) {
        case 0: return 1.0;
        case 1: return dist(P.vertices[0], P.vertices[1]);
        case 2: {
            Vec3 n = polygon_normal(P);
            Vec3 s{};
            const auto& v = P.vertices;
            for (size_t i = 0; i < v.size(); ++i)
                s += cross(v[i], v[(i + 1) % v.size()]);
            double area = 0.5 * dot(s, n);
            double diam = diameter(P);
            if (std::abs(area) < 1e-14 * diam * diam)
                throw Error(ErrorCode::DEGENERATE, "polygon area below tolerance");
            return std::abs(area);
        }
        case 3: return signed_volume(P.vertices, P.faces);
    }
    throw Error(ErrorCode::BAD_INPUT, "bad intrinsic dimension");
}

int side_count(const Polytope& P) {
    switch (P.dim_intrinsic) {
        case 1: return 2;
        case 2: return int(P.vertices.size());
        case 3: return int(P.faces.size());
    }
    throw Error(ErrorCode::BAD_INPUT, "points have no sides");
}

Polytope side(const Polytope& P, int i) {
    if (i < 0 || i >= side_count(P)) throw Error(ErrorCode::INDEX_RANGE, "side index");
    if (P.dim_intrinsic == 1) return make_point(P.vertices[i]);
    if (P.dim_intrinsic == 2)
        return make_segment(P.vertices[i], P.vertices[(i + 1) % P.vertices.size()]);
    std::vector<Vec3> fv;
    for (int k : P.faces[i]) fv.push_back(P.vertices[k]);
    return make_polygon(std::move(fv));
}

Vec3 side_normal(const Polytope& P, int i) {
    if (i < 0 || i >= side_count(P)) throw Error(ErrorCode::INDEX_RANGE, "side index");
    if (P.dim_intrinsic == 1) {
        Vec3 d = normalized(P.vertices[1] - P.vertices[0]);
        return i == 0 ? Vec3{} - d : d;
    }
    if (P.dim_intrinsic == 2) {
        Vec3 n = polygon_normal(P);
        Vec3 d = normalized(P.vertices[(i + 1) % P.vertices.size()] - P.vertices[i]);
        return normalized(cross(d, n));  // outward for CCW winding about n
    }
    const auto& f = P.faces[i];
    Vec3 n{};
    for (size_t k = 0; k < f.size(); ++k) {
        const Vec3 &a = P.vertices[f[k]], &b = P.vertices[f[(k + 1) % f.size()]];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return normalized(n);
}

SignedHeight signed_distance(const Polytope& P, int side_index, Vec3 C) {
    auto H = affine_hull(P);
    const double tol = kRelTol * std::max(diameter(P), norm(C - H.origin));
    if (!hull_contains(H, C, tol))
        throw Error(ErrorCode::C_OFF_HULL, "scaling point off the affine hull");
    Vec3 n = side_normal(P, side_index);
    Vec3 x = (P.dim_intrinsic == 3) ? P.vertices[P.faces[side_index][0]]
                                    : P.vertices[side_index % int(P.vertices.size())];
    if (P.dim_intrinsic == 1) x = P.vertices[side_index];
    return {dot(x - C, n), side_index, C};
}

std::pair<Vec3, double> project_point(const Polytope& plane_of, Vec3 X) {
    if (plane_of.dim_intrinsic != 2)
        throw Error(ErrorCode::BAD_INPUT, "project_point expects a 2D polytope");
    Vec3 n = polygon_normal(plane_of);
    double d = dot(X - plane_of.vertices[0], n);
    return {X - d * n, std::abs(d)};
}

AffineClass affine_relation(const Polytope& A, const Polytope& B) {
    auto HA = affine_hull(A), HB = affine_hull(B);
    if (HA.dim < HB.dim) {  // keep HA the larger hull
        std::swap(HA, HB);
    }
    const double scale = std::max({diameter(A), diameter(B), norm(HA.origin - HB.origin), 1e-12});
    const double tol = kRelTol * scale;

    if (HA.dim == 3) return {AffineRelation::INTERSECTING, 0};

    // Is HB's direction space contained in HA's?
    bool dir_contained = true;
    for (int k = 0; k < HB.dim; ++k) {
        Vec3 d = HB.basis[k];
        for (int m = 0; m < HA.dim; ++m) d = d - dot(d, HA.basis[m]) * HA.basis[m];
        if (norm(d) > kRelTol) dir_contained = false;
    }

    if (dir_contained) {
        // Parallel flats: identical, or separated by the offset component.
        Vec3 off = HB.origin - HA.origin;
        for (int m = 0; m < HA.dim; ++m) off = off - dot(off, HA.basis[m]) * HA.basis[m];
        double h = norm(off);
        if (h <= tol) {
            if (HA.dim == HB.dim) return {AffineRelation::IDENTICAL_HULL, 0};
            return {AffineRelation::INTERSECTING, 0};  // lower hull inside the larger one
        }
        return {AffineRelation::PARALLEL_SEPARATED, h};
    }

    if (HA.dim == 2) return {AffineRelation::INTERSECTING, 0};  // plane vs non-parallel line

    // Two non-parallel lines: intersecting or skew.
    Vec3 u = HA.basis[0], v = HB.basis[0];
    Vec3 n = cross(u, v);
    double h = std::abs(dot(HB.origin - HA.origin, normalized(n)));
    if (h <= tol) return {AffineRelation::INTERSECTING, 0};
    return {AffineRelation::SKEW, h};
}

double first_intrinsic_volume(const Polytope& P) {
    if (P.dim_intrinsic != 3) throw Error(ErrorCode::BAD_INPUT, "expects a closed solid");
    // For each undirected edge find its two faces and the directed use.
    std::map<std::pair<int, int>, std::vector<int>> efaces;
    for (size_t k = 0; k < P.faces.size(); ++k) {
        const auto& f = P.faces[k];
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            efaces[{std::min(a, b), std::max(a, b)}].push_back(int(k));
        }
    }
    double sum = 0;
    for (const auto& [e, ks] : efaces) {
        const Vec3 &va = P.vertices[e.first], &vb = P.vertices[e.second];
        Vec3 n1 = side_normal(P, ks[0]), n2 = side_normal(P, ks[1]);
        // Orient the edge as face ks[0] traverses it.
        Vec3 ed{};
        const auto& f = P.faces[ks[0]];
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) {
                ed = normalized(P.vertices[b] - P.vertices[a]);
                break;
            }
        }
        // Exterior angle via atan2; conditioning near 0 and pi.
        double theta = std::atan2(dot(cross(n1, n2), ed), dot(n1, n2));
        if (theta < -1e-9) throw Error(ErrorCode::NONCONVEX, "negative exterior angle");
        sum += dist(va, vb) * theta;
    }
    return sum / (2 * M_PI);
}

}  // namespace meandist
