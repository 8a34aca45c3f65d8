#include "meandist/reduction.hpp"

#include <cmath>
#include <functional>

#include "meandist/irreducible.hpp"
#include "meandist/oracle.hpp"

namespace meandist::reduction {

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kSqrt5 = std::sqrt(5.0);

double phi_pow(int n) { return std::pow(kPhi, n); }

}  // namespace

double solve_solid_system(const std::string& name, int p,
                          const std::map<std::string, double>& irr) {
    if (p < -1) throw Error(ErrorCode::P_OUT_OF_RANGE, "p >= -1 required");
    auto need = [&](const char* tag) {
        auto it = irr.find(tag);
        if (it == irr.end()) throw Error(ErrorCode::MISSING_IRREDUCIBLE, tag);
        return it->second;
    };
    const double pi4 = double(3 + p) * (4 + p) * (5 + p) * (6 + p);
    const double pi3 = double(4 + p) * (5 + p) * (6 + p);
    const double pi2 = double(5 + p) * (6 + p);
    if (pi4 == 0) throw Error(ErrorCode::P_POLE, "denominator vanishes");

    if (name == "tetrahedron") return 72 * (3 * need("P11") + 2 * need("P20")) / pi4;
    if (name == "cube")
        return 72 * (need("P11") + need("P20")) / pi4 + 48 * need("P21r") / pi3 +
               6 * need("P22r") / pi2;
    if (name == "octahedron")
        return 72 * (need("P20") + need("P11")) / pi4 + 54 * need("P21r") / pi3 +
               4.5 * need("P22r") / pi2;
    if (name == "icosahedron") {
        const double f2 = phi_pow(2), f4 = phi_pow(4), f8 = phi_pow(8);
        double head = 12 * f2 * need("P11d") - 12 * f4 * need("P11f") + 4 * f8 * need("P11g") +
                      12 * f2 * need("P11t") - 6 * f4 * need("P20e") + 4 * f8 * need("P20r") +
                      6 * need("P20f");
        return 18 * head / (5 * f4 * pi4) + 108 * f2 * need("P21r") / (5 * pi3) +
               9 * need("P22r") / (5 * pi2);
    }
    if (name == "dodecahedron") {
        double head = 2 * kSqrt5 * need("P11d") + 5 * kPhi * need("P20e") +
                      2 * phi_pow(3) * need("P11g") - 2 * phi_pow(4) * kSqrt5 * need("P11f") -
                      5 * phi_pow(5) * need("P20f") + 4 * kSqrt5 * phi_pow(6) * need("P20r") +
                      2 * phi_pow(9) * need("P11t");
        return 12 * head / (phi_pow(4) * kSqrt5 * pi4) +
               60 * kPhi * need("P21r") / (kSqrt5 * pi3) + 3 * need("P22r") / pi2;
    }
    throw Error(ErrorCode::UNKNOWN_SOLID, name);
}

double solve_raw_system(const catalog::ReductionSystem& sys, double p,
                        const std::map<std::string, double>& irr) {
    const int n = int(sys.unknowns.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[sys.unknowns[i]] = i;

    struct Lin {
        std::vector<double> coef;
        double cst = 0;
    };
    std::function<Lin(const std::string&, double)> resolve =
        [&](const std::string& var, double scale) -> Lin {
        Lin out;
        out.coef.assign(n, 0.0);
        if (auto it = idx.find(var); it != idx.end()) {
            out.coef[it->second] = scale;
            return out;
        }
        if (auto it = irr.find(var); it != irr.end()) {
            out.cst = scale * it->second;
            return out;
        }
        auto mit = sys.mixtures.find(var);
        if (mit == sys.mixtures.end()) throw Error(ErrorCode::MISSING_IRREDUCIBLE, var);
        for (const auto& t : mit->second) {
            Lin sub = resolve(t.var, scale * t.coeff);
            for (int i = 0; i < n; ++i) out.coef[i] += sub.coef[i];
            out.cst += sub.cst;
        }
        return out;
    };

    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    std::vector<double> rhs(n, 0.0);
    for (int e = 0; e < n; ++e) {
        const auto& eq = sys.equations[e];
        double ctot = 0;
        for (const auto& t : eq.rhs) {
            ctot += t.coeff;
            Lin lin = resolve(t.var, t.coeff);
            for (int i = 0; i < n; ++i) A[e][i] -= lin.coef[i];
            rhs[e] += lin.cst;
        }
        A[e][idx.at(eq.lhs)] += p + ctot;
    }

    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        std::swap(rhs[c], rhs[piv]);
        if (std::abs(A[c][c]) < 1e-300)
            throw Error(ErrorCode::DEGENERATE, "singular reduction system");
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            double f = A[r][c] / A[c][c];
            if (f == 0) continue;
            for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    int i33 = idx.at("P33");
    return rhs[i33] / A[i33][i33];
}

double tetrahedron_moment(const std::array<Vec3, 4>& V, int p) {
    double vol6 = dot(V[1] - V[0], cross(V[2] - V[0], V[3] - V[0]));
    double vol = std::abs(vol6) / 6;
    double d = 0;
    for (auto& v : V) d = std::max(d, norm(v - V[0]));
    if (vol < 1e-14 * d * d * d)
        throw Error(ErrorCode::DEGENERATE_TETRAHEDRON, "near-zero volume");

    KahanSum sum;
    // Vertex vs opposite face.
    for (int i = 0; i < 4; ++i) {
        std::vector<Vec3> fv;
        for (int j = 0; j < 4; ++j)
            if (j != i) fv.push_back(V[j]);
        Polytope face = make_polygon(fv);
        Vec3 n = polygon_normal(face);
        double area = measure(face);
        double h = std::abs(dot(V[i] - fv[0], n));
        sum.add(irreducible::point_polygon_moment(face, V[i], p) * area * h);
    }
    // Skew edge pairs (three opposite pairs).
    static constexpr int kPairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& q : kPairs) {
        Vec3 a1 = V[q[0]], a2 = V[q[1]], b1 = V[q[2]], b2 = V[q[3]];
        Vec3 e1 = a2 - a1, e2 = b2 - b1;
        Vec3 cr = cross(e1, e2);
        double sin_th = norm(cr) / (norm(e1) * norm(e2));
        Vec3 nn = normalized(cr);
        double h = std::abs(dot(a1 - b1, nn));  // distance from O to the A-B plane
        Polytope seg_a = make_segment(a1, a2), seg_b = make_segment(b1, b2);
        double val = irreducible::skew_segments_moment(seg_a, seg_b, p);
        sum.add(val * norm(e1) * norm(e2) * h * sin_th);
    }
    return 12 / (vol * (6 + p) * (5 + p) * (4 + p) * (3 + p)) * sum.get();
}

namespace {

// In-plane signed distance from a point in the face plane to an edge of the face.
double inplane_signed_distance(const Polytope& face, int edge_index, Vec3 C) {
    Vec3 n = polygon_normal(face);
    Vec3 a = face.vertices[edge_index];
    Vec3 b = face.vertices[(edge_index + 1) % face.vertices.size()];
    Vec3 m = normalized(cross(b - a, n));  // outward for CCW winding
    return dot(a - C, m);
}

}  // namespace

BasicWeights theorem_basic_weights(const Polytope& K, Vec3 C, const std::vector<Vec3>& Ck,
                                   const std::vector<Vec3>& Dj) {
    if (K.dim_intrinsic != 3) throw Error(ErrorCode::BAD_INPUT, "K must be a closed solid");
    const size_t nf = K.faces.size(), ne = K.edges.size();
    if (Ck.size() != nf || Dj.size() != ne)
        throw Error(ErrorCode::BAD_INPUT, "need one Ck per face and one Dj per edge");

    const double tol = 1e-9 * diameter(K);
    const double volK = measure(K);

    std::vector<Polytope> face_polys;
    std::vector<Vec3> face_normals;
    std::vector<double> face_areas, hC;
    for (size_t k = 0; k < nf; ++k) {
        face_polys.push_back(side(K, int(k)));
        face_normals.push_back(side_normal(K, int(k)));
        face_areas.push_back(measure(face_polys[k]));
        hC.push_back(dot(K.vertices[K.faces[k][0]] - C, face_normals[k]));
        auto [foot, dh] = project_point(face_polys[k], Ck[k]);
        if (dh > tol) throw Error(ErrorCode::SCALING_POINT_OFF_HULL, "Ck off its face plane");
    }
    for (size_t j = 0; j < ne; ++j) {
        Vec3 a = K.vertices[K.edges[j][0]], b = K.vertices[K.edges[j][1]];
        Vec3 u = normalized(b - a);
        Vec3 off = (Dj[j] - a) - dot(Dj[j] - a, u) * u;
        if (norm(off) > tol) throw Error(ErrorCode::SCALING_POINT_OFF_HULL, "Dj off its edge line");
    }

    BasicWeights W;
    W.C = C;
    W.Ck = Ck;
    W.Dj = Dj;
    for (size_t k = 0; k < nf; ++k) {
        for (size_t kk = k + 1; kk < nf; ++kk) {
            double h_k_kk = dot(K.vertices[K.faces[kk][0]] - Ck[k], face_normals[kk]);
            double h_kk_k = dot(K.vertices[K.faces[k][0]] - Ck[kk], face_normals[k]);
            double w = face_areas[k] * face_areas[kk] / (volK * volK) *
                       (hC[k] * h_k_kk + hC[kk] * h_kk_k);
            W.face_pair[{int(k), int(kk)}] = w;
        }
    }
    W.body_edge.assign(ne, 0.0);
    for (size_t j = 0; j < ne; ++j) {
        auto [va, vb] = std::pair{K.edges[j][0], K.edges[j][1]};
        double w = 0;
        int found = 0;
        for (size_t k = 0; k < nf; ++k) {
            const auto& f = K.faces[k];
            for (size_t i = 0; i < f.size(); ++i) {
                int a = f[i], b = f[(i + 1) % f.size()];
                if ((a == va && b == vb) || (a == vb && b == va)) {
                    int eidx = -1;
                    for (size_t m = 0; m < f.size(); ++m)
                        if ((f[m] == va && f[(m + 1) % f.size()] == vb) ||
                            (f[m] == vb && f[(m + 1) % f.size()] == va))
                            eidx = int(m);
                    double hk = inplane_signed_distance(face_polys[k], eidx, Ck[k]);
                    w += hC[k] * hk;
                    ++found;
                    break;
                }
            }
        }
        if (found != 2) throw Error(ErrorCode::OPEN_SURFACE, "edge not shared by two faces");
        double elen = dist(K.vertices[va], K.vertices[vb]);
        W.body_edge[j] = elen / volK * w;
    }
    return W;
}

BasicWeights theorem_basic_weights(const Polytope& K) {
    Vec3 C = vertex_centroid(K);
    std::vector<Vec3> Ck, Dj;
    for (size_t k = 0; k < K.faces.size(); ++k) {
        Vec3 c{};
        for (int i : K.faces[k]) c += K.vertices[i];
        Ck.push_back(c / double(K.faces[k].size()));
    }
    for (const auto& e : K.edges)
        Dj.push_back(0.5 * (K.vertices[e[0]] + K.vertices[e[1]]));
    return theorem_basic_weights(K, C, Ck, Dj);
}

catalog::MomentResult general_moment(const Polytope& K, int p, const Budget& budget) {
    if (p < -1) throw Error(ErrorCode::P_OUT_OF_RANGE, "p >= -1 required");
    BasicWeights W = theorem_basic_weights(K);
    const double pref = 2.0 / ((6 + p) * (5 + p));
    const double wtol = 1e-13 * measure(K);

    bool any_mc = false, any_quad = false;
    KahanSum acc;
    double var_sum = 0;
    uint64_t stream_salt = 0;

    for (const auto& [pair, w] : W.face_pair) {
        if (std::abs(w) < wtol) continue;
        Polytope A = side(K, pair.first), B = side(K, pair.second);
        auto rel = affine_relation(A, B);
        double val, err = 0;
        if (rel.kind == AffineRelation::PARALLEL_SEPARATED && polygon_is_convex(A) &&
            polygon_is_convex(B)) {
            val = irreducible::overlap_moment_numeric(A, {B}, p, 1e-9);
            err = 1e-9;
            any_quad = true;
        } else {
            auto est = oracle::estimate_moment(A, B, p, budget.mc_samples_per_term,
                                               budget.seed + 1000003 * (++stream_salt));
            val = est.mean;
            err = est.stderr_;
            any_mc = true;
        }
        acc.add(w * val);
        var_sum += (w * err) * (w * err);
    }
    for (size_t j = 0; j < W.body_edge.size(); ++j) {
        double w = W.body_edge[j];
        if (std::abs(w) < wtol) continue;
        Polytope E = make_segment(K.vertices[K.edges[j][0]], K.vertices[K.edges[j][1]]);
        auto est = oracle::estimate_moment(K, E, p, budget.mc_samples_per_term,
                                           budget.seed + 1000003 * (++stream_salt));
        any_mc = true;
        acc.add(w * est.mean);
        var_sum += (w * est.stderr_) * (w * est.stderr_);
    }

    double value = pref * acc.get();
    double err = pref * std::sqrt(var_sum);
    if (budget.target_error && err > *budget.target_error)
        throw Error(ErrorCode::BUDGET_EXCEEDED,
                    "achieved error " + std::to_string(err) + " > target");
    auto prov = any_mc ? (any_quad ? auxint::Provenance::MIXED : auxint::Provenance::MONTE_CARLO)
                       : auxint::Provenance::QUADRATURE;
    return {value, prov, err};
}

}  // namespace meandist::reduction
