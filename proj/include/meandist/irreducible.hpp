#pragma once

#include <array>
#include <string>
#include <vector>

#include "meandist/geom.hpp"

namespace meandist::irreducible {

// One signed term of an overlap-diagram I-expansion.  Piece value:
//   sign * h^{2+p} * sum_ij a_ij h^{i+j} I^(p)_ij(q, gamma)
// with coeffs ordered (a00, a10, a01, a20, a11, a02).
struct FundamentalPiece {
    double sign = 1.0;
    double q = 0;
    double gamma = 0;
    std::array<double, 6> coeffs{};
    double h = 1.0;
};

struct OverlapDiagram {
    int symmetry_fold = 1;
    std::vector<FundamentalPiece> pieces;
    double norm = 1.0;        // vol A * vol B in the diagram's frame
    double scale = 1.0;       // value(p) multiplied by scale^p (rescaled-frame diagrams)
    std::string solid, config;
};

// Point-polygon formula: L^(p)_{AB} = h^{2+p}/volA * sum_i [I00(h_i/h, beta_i) - I00(h_i/h, alpha_i)]
// over the signed-triangle fan around proj B.  Requires B off the polygon plane.
double point_polygon_moment(const Polytope& A, Vec3 B, int p);

// 1D analog: mean of |X - V|^p for X uniform on segment [a,b], V off the line.
double point_segment_moment(Vec3 a, Vec3 b, Vec3 V, int p);

// Skew segments reduce to point-polygon on the Minkowski difference A - B.
double skew_segments_moment(const Polytope& A, const Polytope& B, int p);

// Convex-convex intersection (Sutherland-Hodgman); inputs CCW, output CCW.
std::vector<Vec2> clip_convex_polygons(const std::vector<Vec2>& subject,
                                       const std::vector<Vec2>& clip);
double polygon_area(const std::vector<Vec2>& poly);

// Chord length of segment [a,b] inside a convex CCW polygon.
double clip_segment_length(Vec2 a, Vec2 b, const std::vector<Vec2>& poly);

// Overlap formula by 2D adaptive quadrature over the shift vector k.
// B is a parallel face (polygon) or a set of parallel edges (segments).
double overlap_moment_numeric(const Polytope& A, const std::vector<Polytope>& B, int p,
                              double abs_tol = 1e-8);

// Catalog diagrams evaluated through the auxiliary integrals.
double overlap_moment_exact(const OverlapDiagram& diagram, int p);

std::string diagram_to_json_text(const OverlapDiagram& d);
OverlapDiagram diagram_from_json_text(const std::string& text);

}  // namespace meandist::irreducible
