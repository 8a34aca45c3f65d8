#pragma once

#include <array>
#include <string>
#include <vector>

#include "meandist/error.hpp"
#include "meandist/vec.hpp"

namespace meandist {

// Flat polytope in R^2 or R^3: point, segment, polygon, or closed solid.
// 2D inputs are stored with z = 0.  Face cycles are counterclockwise as seen
// from the outward normal; make_solid repairs inconsistent windings.
struct Polytope {
    int dim_ambient = 3;
    int dim_intrinsic = 0;
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;       // closed solids only
    std::vector<std::array<int, 2>> edges;     // derived
    std::vector<int> flipped_faces;            // faces rewound during validation
};

struct SignedHeight {
    double value;
    int side_index;
    Vec3 scaling_point;
};

enum class AffineRelation { INTERSECTING, PARALLEL_SEPARATED, SKEW, IDENTICAL_HULL };

struct AffineClass {
    AffineRelation kind;
    double separation = 0.0;  // PARALLEL_SEPARATED only
};

Polytope make_point(Vec3 v);
Polytope make_segment(Vec3 a, Vec3 b);
// Planar polygon (simple, CCW about its normal); ambient 2 or 3.
Polytope make_polygon(std::vector<Vec3> verts, int dim_ambient = 3);
// Closed 3D solid; validates flatness of faces, closedness, orientation.
Polytope make_solid(std::vector<Vec3> verts, std::vector<std::vector<int>> faces);

double diameter(const Polytope& P);
Vec3 vertex_centroid(const Polytope& P);

// Counting measure 1 for points, length for segments, area for polygons
// (shoelace in-plane), volume for solids (divergence theorem).
double measure(const Polytope& P);

int side_count(const Polytope& P);
// Side i as a polytope: face of a solid, edge of a polygon, endpoint of a segment.
Polytope side(const Polytope& P, int i);
// Outward unit normal of side i within the affine hull of P.
Vec3 side_normal(const Polytope& P, int i);

SignedHeight signed_distance(const Polytope& P, int side_index, Vec3 C);

// Perpendicular projection of X onto the plane of a 2D polytope in R^3.
std::pair<Vec3, double> project_point(const Polytope& plane_of, Vec3 X);

AffineClass affine_relation(const Polytope& A, const Polytope& B);

// (1/2pi) sum of edge length times exterior dihedral angle; convex solids.
double first_intrinsic_volume(const Polytope& P);

// Affine hull: origin + orthonormal basis spanning the hull directions.
struct AffineHull {
    Vec3 origin;
    int dim;
    std::array<Vec3, 3> basis;
    Vec3 normal;  // hull of dim 2 in R^3 only
};
AffineHull affine_hull(const Polytope& P);
bool hull_contains(const AffineHull& H, Vec3 X, double tol);

// Unit normal of a planar polygon, oriented by its winding.
Vec3 polygon_normal(const Polytope& P);

bool polygon_is_convex(const Polytope& P);

// JSON interchange: {"dim":3,"vertices":[[x,y,z],...],"faces":[[i,...],...]};
// 2D uses "dim":2 with the vertex loop as the single implicit face.
Polytope polytope_from_json_text(const std::string& text);
std::string polytope_to_json_text(const Polytope& P);

}  // namespace meandist
