#include "meandist/catalog.hpp"

#include <cmath>

#include "meandist/auxint.hpp"
#include "meandist/reduction.hpp"

namespace meandist::catalog {

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kPi = M_PI;

double phi_pow(int n) { return std::pow(kPhi, n); }

using irreducible::FundamentalPiece;
using irreducible::OverlapDiagram;

// Hexagonal-symmetry diagram shared by octahedron and icosahedron (opposite
// triangular faces); stored once with parameterized (h, q1, q2) per the
// rescaling relation between the two solids.
OverlapDiagram hex_face_face_diagram(double h, double q1, double q2, double norm, double scale,
                                     std::string solid) {
    OverlapDiagram d;
    d.symmetry_fold = 6;
    d.norm = norm;
    d.scale = scale;
    d.solid = std::move(solid);
    d.config = "L22r";
    d.pieces = {
        {1.0, q1, kPi / 3,
         {4 / (3 * kSqrt3), -kSqrt2 / 3, -std::sqrt(2.0 / 3), -1 / kSqrt3, 1.0, 0.0}, h},
        {1.0, q2, kPi / 3, {-1 / (3 * kSqrt3), 2 * kSqrt2 / 3, 0.0, -2 / kSqrt3, 0.0, 0.0}, h},
    };
    return d;
}

OverlapDiagram hex_face_edges_diagram(double h, double q1, double q2, double norm, double scale,
                                      std::string solid) {
    OverlapDiagram d;
    d.symmetry_fold = 6;
    d.norm = norm;
    d.scale = scale;
    d.solid = std::move(solid);
    d.config = "L21r";
    d.pieces = {
        {1.0, q1, kPi / 3, {4 * kSqrt2 / 3, -1 / kSqrt3, -1.0, 0.0, 0.0, 0.0}, h},
        {1.0, q2, kPi / 3, {-kSqrt2 / 3, 2 / kSqrt3, 0.0, 0.0, 0.0, 0.0}, h},
    };
    return d;
}

ReductionSystem tetra_system() {
    ReductionSystem s;
    s.unknowns = {"P33", "P32", "P22", "P31", "P21", "P30"};
    s.irreducibles = {"P11", "P20"};
    s.equations = {
        {"P33", {{6, "P32"}}},
        {"P32", {{3, "P22"}, {2, "P31"}}},
        {"P22", {{4, "P21"}}},
        {"P31", {{3, "P21"}, {1, "P30"}}},
        {"P21", {{2, "P11"}, {1, "P20"}}},
        {"P30", {{3, "P20"}}},
    };
    return s;
}

ReductionSystem cube_system() {
    ReductionSystem s;
    s.unknowns = {"P33", "P32", "P22e", "P31", "P21v", "P30"};
    s.irreducibles = {"P11", "P20", "P21r", "P22r"};
    s.equations = {
        {"P33", {{6, "P32"}}},
        {"P32", {{3, "P22"}, {2, "P31"}}},
        {"P22e", {{4, "P21'"}}},
        {"P31", {{3, "P21"}, {1, "P30"}}},
        {"P21v", {{2, "P11"}, {1, "P20"}}},
        {"P30", {{3, "P20"}}},
    };
    s.mixtures = {
        {"P22", {{2.0 / 3, "P22e"}, {1.0 / 3, "P22r"}}},
        {"P21", {{1.0 / 3, "P21v"}, {2.0 / 3, "P21r"}}},
        {"P21'", {{0.5, "P21v"}, {0.5, "P21r"}}},
    };
    return s;
}

ReductionSystem octa_system() {
    ReductionSystem s;
    s.unknowns = {"P33", "P32", "P22e", "P22v", "P31", "P21v", "P30"};
    s.irreducibles = {"P11", "P20", "P21r", "P22r"};
    s.equations = {
        {"P33", {{6, "P32"}}},
        {"P32", {{3, "P22"}, {2, "P31"}}},
        {"P22e", {{4, "P21v"}}},
        {"P22v", {{4, "P21r"}}},
        {"P31", {{3, "P21"}, {1, "P30"}}},
        {"P21v", {{2, "P11"}, {1, "P20"}}},
        {"P30", {{3, "P20"}}},
    };
    s.mixtures = {
        {"P22", {{0.25, "P22e"}, {0.25, "P22r"}, {0.5, "P22v"}}},
        {"P21", {{0.5, "P21v"}, {0.5, "P21r"}}},
    };
    return s;
}

ReductionSystem icosa_system() {
    // The solved P33 pins the P20u/P20l weighted means only up to a
    // one-parameter family; these coefficients fix the gauge with weights
    // summing to 1 and no far-class term.
    const double au = -0.077438868107236408;
    const double bl = 1.1914394101623946;
    ReductionSystem s;
    s.unknowns = {"P33", "P32", "P31", "P22e", "P22v", "P22d", "P22i",
                  "P30", "P21v", "P21w", "P21f", "P21d", "P21e"};
    s.irreducibles = {"P11d", "P11g", "P11f", "P11t", "P20e", "P20r", "P20f", "P21r", "P22r"};
    s.equations = {
        {"P33", {{6, "P32"}}},
        {"P32", {{3, "P22"}, {2, "P31"}}},
        {"P31", {{3, "P21"}, {1, "P30"}}},
        {"P22e", {{4, "P21v"}}},
        {"P22v", {{4, "P21d"}}},
        {"P22d", {{4, "P21'"}}},
        {"P22i", {{4, "P21''"}}},
        {"P30", {{3, "P20"}}},
        {"P21v", {{2, "P11d"}, {1, "P20u"}}},
        {"P21w", {{2, "P11f"}, {1, "P20l"}}},
        {"P21f", {{2, "P11"}, {1, "P20'"}}},
        {"P21d", {{2, "P11'"}, {1, "P20''"}}},
        {"P21e", {{2, "P11''"}, {1, "P20'''"}}},
    };
    s.mixtures = {
        {"P22",
         {{2.0 / 5, "P22d"},
          {1.0 / 10, "P22r"},
          {1.0 / 5, "P22v"},
          {1 / (10 * phi_pow(2)), "P22e"},
          {phi_pow(2) / 10, "P22i"}}},
        {"P21",
         {{kPhi / 5, "P21e"},
          {1 / (2 * kPhi * kSqrt5), "P21f"},
          {1.0 / 5, "P21r"},
          {1.0 / 5, "P21d"},
          {1 / (5 * phi_pow(2)), "P21v"},
          {1 / (10 * kPhi), "P21w"}}},
        {"P21'", {{0.5, "P21f"}, {-kPhi / 2, "P21d"}, {phi_pow(2) / 2, "P21e"}}},
        {"P21''", {{phi_pow(2), "P21r"}, {-kPhi, "P21e"}}},
        {"P20",
         {{1 / (2 * phi_pow(2)), "P20f"}, {1 / (2 * kPhi), "P20e"}, {0.5, "P20r"}}},
        {"P20'", {{kPhi, "P20r"}, {-1 / kPhi, "P20f"}}},
        {"P20''", {{phi_pow(2), "P20e"}, {-kPhi, "P20f"}}},
        {"P20'''", {{phi_pow(2), "P20r"}, {-kPhi, "P20e"}}},
        {"P20u", {{au, "P20e"}, {1 - au, "P20f"}}},
        {"P20l", {{bl, "P20e"}, {1 - bl, "P20f"}}},
        {"P11", {{2.0, "P11t"}, {-1.0, "P11f"}}},
        {"P11'", {{phi_pow(2), "P11f"}, {-kPhi, "P11d"}}},
        {"P11''", {{phi_pow(2), "P11g"}, {-kPhi, "P11t"}}},
    };
    return s;
}

ReductionSystem dodeca_system() {
    ReductionSystem s;
    s.unknowns = {"P33", "P32", "P31", "P22e", "P22i", "P30", "P21v", "P21f", "P21d"};
    s.irreducibles = {"P11d", "P11g", "P11f", "P11t", "P20e", "P20r", "P20f", "P21r", "P22r"};
    s.equations = {
        {"P33", {{6, "P32"}}},
        {"P32", {{3, "P22"}, {2, "P31"}}},
        {"P31", {{3, "P21"}, {1, "P30"}}},
        {"P22e", {{4, "P21'"}}},
        {"P22i", {{4, "P21''"}}},
        {"P30", {{3, "P20"}}},
        {"P21v", {{1, "P20e"}, {2, "P11"}}},
        {"P21f", {{2, "P11'"}, {1, "P20'"}}},
        {"P21d", {{2, "P11''"}, {1, "P20''"}}},
    };
    s.mixtures = {
        {"P22",
         {{kSqrt5 / (6 * kPhi), "P22e"},
          {1.0 / 6, "P22r"},
          {kPhi * kSqrt5 / 6, "P22i"}}},
        {"P21",
         {{1.0 / 3, "P21r"},
          {1.0 / 3, "P21d"},
          {kPhi / 6, "P21f"},
          {1 / (6 * phi_pow(2)), "P21v"}}},
        {"P21'", {{1 / (kPhi * kSqrt5), "P21v"}, {kPhi / kSqrt5, "P21d"}}},
        {"P21''", {{kPhi / kSqrt5, "P21f"}, {kPhi / kSqrt5, "P21r"}, {-1 / kSqrt5, "P21d"}}},
        {"P20",
         {{1 / (2 * phi_pow(2)), "P20e"}, {1 / (2 * kPhi), "P20f"}, {0.5, "P20r"}}},
        {"P20'", {{phi_pow(2), "P20r"}, {-kPhi, "P20f"}}},
        {"P20''", {{phi_pow(2), "P20f"}, {-kPhi, "P20e"}}},
        {"P11", {{2 / (kPhi * kSqrt5), "P11d"}, {1 / kSqrt5, "P11f"}}},
        {"P11'", {{2 * kPhi / kSqrt5, "P11t"}, {-1 / kSqrt5, "P11f"}}},
        {"P11''", {{kPhi / kSqrt5, "P11g"}, {kPhi / kSqrt5, "P11f"}, {-1 / kSqrt5, "P11d"}}},
    };
    return s;
}

std::map<std::string, SolidRecipe> build_catalog() {
    std::map<std::string, SolidRecipe> cat;
    const double phi = kPhi;

    {
        SolidRecipe r;
        r.name = "tetrahedron";
        r.vertices = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
        r.faces = {{1, 0, 2}, {2, 0, 3}, {3, 0, 1}, {3, 1, 2}};
        r.edge_length = kSqrt2;
        r.face_area = kSqrt3 / 2;
        r.volume = 1.0 / 3;
        r.v1_unit_edge = 3 * std::acos(-1.0 / 3) / kPi;
        r.irreducible_recipes["P20"] = {6, 2 / kSqrt3, kSqrt3 / 2, {{1, kSqrt2 / 4, kPi / 3}}};
        r.irreducible_recipes["P11"] = {8, 1.0, 2.0, {{1, kSqrt2 / 2, kPi / 4}}};
        r.system = tetra_system();
        cat["tetrahedron"] = std::move(r);
    }
    {
        SolidRecipe r;
        r.name = "cube";
        r.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                      {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
        r.faces = {{1, 0, 2, 6}, {2, 0, 3, 4}, {3, 0, 1, 5},
                   {4, 3, 5, 7}, {5, 1, 6, 7}, {6, 2, 4, 7}};
        r.edge_length = 1;
        r.face_area = 1;
        r.volume = 1;
        r.v1_unit_edge = 3;  // edge-angle formula (12 edges, exterior angle pi/2)
        r.irreducible_recipes["P20"] = {2, 1.0, 1.0, {{1, 1.0, kPi / 4}}};
        r.irreducible_recipes["P11"] = {2, 1.0, 1.0, {{1, 1.0, kPi / 4}}};
        {
            OverlapDiagram d;
            d.symmetry_fold = 8;
            d.norm = 4.0;  // volA=1, volB=4
            d.solid = "cube";
            d.config = "L21r";
            d.pieces = {{1.0, 1.0, kPi / 4, {2, -1, -1, 0, 0, 0}, 1.0}};
            r.diagrams["P21r"] = d;
        }
        {
            OverlapDiagram d;
            d.symmetry_fold = 8;
            d.norm = 1.0;
            d.solid = "cube";
            d.config = "L22r";
            d.pieces = {{1.0, 1.0, kPi / 4, {1, -1, -1, 0, 1, 0}, 1.0}};
            r.diagrams["P22r"] = d;
        }
        r.system = cube_system();
        cat["cube"] = std::move(r);
    }
    {
        SolidRecipe r;
        r.name = "octahedron";
        r.vertices = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        r.faces = {{2, 0, 5}, {2, 1, 4}, {3, 0, 4}, {3, 1, 5},
                   {4, 0, 2}, {4, 1, 3}, {5, 0, 3}, {5, 1, 2}};
        r.edge_length = kSqrt2;
        r.face_area = kSqrt3 / 2;
        r.volume = 4.0 / 3;
        r.v1_unit_edge = 6 * std::acos(1.0 / 3) / kPi;
        const double h = 2 / kSqrt3;
        r.irreducible_recipes["P20"] = {
            2, h, kSqrt3 / 2, {{1, kSqrt2 / 2, kPi / 3}, {-1, kSqrt2 / 4, kPi / 3}}};
        r.irreducible_recipes["P11"] = {
            1, h, kSqrt3, {{4, kSqrt2 / 4, kPi / 3}, {2, kSqrt2 / 2, kPi / 3}}};
        r.diagrams["P21r"] = hex_face_edges_diagram(h, kSqrt2 / 2, kSqrt2 / 4,
                                                    (kSqrt3 / 2) * 3 * kSqrt2, 1.0, "octahedron");
        r.diagrams["P22r"] = hex_face_face_diagram(h, kSqrt2 / 2, kSqrt2 / 4, 3.0 / 4, 1.0,
                                                   "octahedron");
        r.system = octa_system();
        cat["octahedron"] = std::move(r);
    }
    {
        SolidRecipe r;
        r.name = "icosahedron";
        r.vertices = {{phi, 1, 0}, {0, phi, 1},  {1, 0, phi},   {phi, -1, 0},
                      {0, phi, -1}, {-1, 0, phi}, {-phi, 1, 0},  {0, -phi, 1},
                      {1, 0, -phi}, {-phi, -1, 0}, {0, -phi, -1}, {-1, 0, -phi}};
        r.faces = {{1, 0, 4},  {2, 0, 1},  {2, 1, 5},  {3, 0, 2},  {3, 2, 7},
                   {4, 0, 8},  {5, 1, 6},  {6, 1, 4},  {6, 4, 11}, {7, 2, 5},
                   {7, 5, 9},  {8, 0, 3},  {8, 3, 10}, {9, 5, 6},  {9, 6, 11},
                   {10, 3, 7}, {10, 7, 9}, {10, 9, 11}, {11, 4, 8}, {11, 8, 10}};
        r.edge_length = 2;
        r.face_area = kSqrt3;
        r.volume = 10 * (3 + kSqrt5) / 3;
        r.v1_unit_edge = 15 * std::asin(2.0 / 3) / kPi;
        const double p2 = phi_pow(2);
        r.irreducible_recipes["P20e"] = {2, 2 * phi / kSqrt3, kSqrt3,
                                         {{1, 1 / (2 * p2), kPi / 3},
                                          {-1, 1 / (2 * p2), std::atan(std::sqrt(15.0) + 2 * kSqrt3)},
                                          {1, p2 / 2, std::atan(std::sqrt(15.0) - 2 * kSqrt3)}}};
        r.irreducible_recipes["P20r"] = {
            2, 2 * p2 / kSqrt3, kSqrt3, {{1, 1 / p2, kPi / 3}, {-1, 1 / (2 * p2), kPi / 3}}};
        r.irreducible_recipes["P20f"] = {2, 2 / kSqrt3, kSqrt3,
                                         {{1, p2 / 2, kPi / 3},
                                          {-1, kSqrt5 / 2, std::atan(std::sqrt(3.0 / 5))},
                                          {-1, p2 / 2, std::atan(std::sqrt(15.0) - 2 * kSqrt3)}}};
        r.irreducible_recipes["P11d"] = {2, std::sqrt(2 + 2 / kSqrt5),
                                         std::sqrt(10 - 2 * kSqrt5),
                                         {{2, 1 / (2 * p2), 2 * kPi / 5},
                                          {-1, 0.5, kPi / 5},
                                          {1, 0.5, 2 * kPi / 5}}};
        r.irreducible_recipes["P11g"] = {2, std::sqrt(14.0 / 3 + 2 * kSqrt5), 2 * kSqrt3,
                                         {{2, 1 / (2 * p2), kPi / 3}, {1, 1 / p2, kPi / 3}}};
        r.irreducible_recipes["P11f"] = {2, phi, 4.0,
                                         {{1, 1 / phi, std::atan(p2)},
                                          {1, phi, std::atan(1 / p2)},
                                          {-1, 1 / p2, std::atan(phi)},
                                          {-1, 1 / phi, std::atan(1 / phi)}}};
        r.irreducible_recipes["P11t"] = {2, std::sqrt(2 + 2 / kSqrt5),
                                         std::sqrt(2 * (5 + kSqrt5)),
                                         {{1, 0.5, kPi / 5}, {-1, 0.5, 2 * kPi / 5},
                                          {1, phi, kPi / 5}}};
        // Same diagrams as the octahedron after rescaling the solid to edge
        // length sqrt(2); the final value carries scale^p with scale sqrt(2).
        const double hi = kSqrt2 * p2 / kSqrt3;
        r.diagrams["P21r"] = hex_face_edges_diagram(hi, 1 / p2, 1 / (2 * p2),
                                                    (kSqrt3 / 2) * 3 * kSqrt2, kSqrt2,
                                                    "icosahedron");
        r.diagrams["P22r"] =
            hex_face_face_diagram(hi, 1 / p2, 1 / (2 * p2), 3.0 / 4, kSqrt2, "icosahedron");
        r.system = icosa_system();
        cat["icosahedron"] = std::move(r);
    }
    {
        SolidRecipe r;
        r.name = "dodecahedron";
        const double p2 = phi_pow(2);
        r.vertices = {{phi, phi, phi},   {phi, phi, -phi},  {phi, -phi, phi},
                      {phi, -phi, -phi}, {-phi, phi, phi},  {-phi, phi, -phi},
                      {-phi, -phi, phi}, {-phi, -phi, -phi}, {0, 1, p2},
                      {1, p2, 0},        {p2, 0, 1},        {0, 1, -p2},
                      {1, -p2, 0},       {-p2, 0, 1},       {0, -1, p2},
                      {-1, p2, 0},       {p2, 0, -1},       {0, -1, -p2},
                      {-1, -p2, 0},      {-p2, 0, -1}};
        r.faces = {{1, 9, 0, 10, 16},  {2, 10, 0, 8, 14},  {4, 8, 0, 9, 15},
                   {7, 17, 3, 12, 18}, {7, 18, 6, 13, 19}, {7, 19, 5, 11, 17},
                   {14, 8, 4, 13, 6},  {15, 9, 1, 11, 5},  {16, 10, 2, 12, 3},
                   {17, 11, 1, 16, 3}, {18, 12, 2, 14, 6}, {19, 13, 4, 15, 5}};
        r.edge_length = 2;
        r.face_area = std::sqrt(25 + 10 * kSqrt5);
        r.volume = 30 + 14 * kSqrt5;
        r.v1_unit_edge = 15 * std::atan(2.0) / kPi;
        const double p4 = phi_pow(4);
        const double hbig = std::sqrt(10 + 22 / kSqrt5);
        r.irreducible_recipes["P20e"] = {
            2, std::sqrt(2 + 2 / kSqrt5), r.face_area,
            {{1, 0.5, kPi / 5},
             {-1, 0.5, 2 * kPi / 5},
             {-1, p2 / 2, kPi / 5},
             {1, 3 * phi / 2, std::atan(std::sqrt(5 - 2 * kSqrt5) / 3)},
             {1, p2 / 2, std::atan(std::sqrt(5 * (5 - 2 * kSqrt5)))}}};
        r.irreducible_recipes["P20r"] = {2, hbig, r.face_area,
                                         {{1, 1 / phi, kPi / 5},
                                          {1, 1 / (2 * p2), 2 * kPi / 5},
                                          {-1, 1 / (2 * p2), kPi / 5},
                                          {-1, 1 / (2 * p4), 2 * kPi / 5}}};
        r.irreducible_recipes["P20f"] = {
            2, 2 * std::sqrt(1 + 2 / kSqrt5), r.face_area,
            {{1, p2 / 2, kPi / 5},
             {-1, 1 / (2 * p2), 2 * kPi / 5},
             {1, 1 / (2 * p2), std::atan(std::sqrt(5 * (5 + 2 * kSqrt5)))},
             {-1, 0.5, kPi / 5},
             {-1, p2 / 2, std::atan(std::sqrt(85 - 38 * kSqrt5))}}};
        r.irreducible_recipes["P11d"] = {
            2, (1 + kSqrt5) / kSqrt3, 2 * kSqrt3,
            {{1, 1 / (2 * p2), kPi / 3},
             {1, kSqrt5 / 2, kPi / 3},
             {-1, 1 / (2 * p2), std::atan(kSqrt3 * (2 + kSqrt5))},
             {-1, kSqrt5 / 2, std::atan(std::sqrt(3.0 / 5))}}};
        r.irreducible_recipes["P11g"] = {2, hbig, std::sqrt(10 - 2 * kSqrt5),
                                         {{2, 1 / (2 * p4), 2 * kPi / 5},
                                          {-1, 1 / (2 * p2), kPi / 5},
                                          {1, 1 / (2 * p2), 2 * kPi / 5}}};
        r.irreducible_recipes["P11f"] = {2, p2, 4.0,
                                         {{1, 1 / p2, std::atan(kSqrt5 * phi)},
                                          {1, kSqrt5 / phi, std::atan(1 / (kSqrt5 * phi))},
                                          {-1, 1 / p2, std::atan(phi)},
                                          {-1, 1 / phi, std::atan(1 / phi)}}};
        r.irreducible_recipes["P11t"] = {2, hbig, std::sqrt(2 * (5 + kSqrt5)),
                                         {{1, 1 / phi, kPi / 5},
                                          {1, 1 / (2 * p2), kPi / 5},
                                          {-1, 1 / (2 * p2), 2 * kPi / 5}}};
        {
            OverlapDiagram d;
            d.symmetry_fold = 10;
            d.norm = r.face_area * r.face_area;
            d.solid = "dodecahedron";
            d.config = "L22r";
            const double h = hbig;
            d.pieces = {
                {1.0, 1 / (2 * p2), kPi / 5,
                 {0.4 * std::sqrt(5 + 2 * kSqrt5), -(2 / kSqrt5 + 2), 0,
                  std::sqrt(2 + 2 / kSqrt5), 0, 0}, h},
                {1.0, 1 / (2 * p2), 2 * kPi / 5,
                 {-0.4 * std::sqrt(5 + 2 * kSqrt5), (2 / kSqrt5 + 2), 0,
                  -std::sqrt(2 + 2 / kSqrt5), 0, 0}, h},
                {1.0, 1 / (2 * p4), 2 * kPi / 5,
                 {-0.4 * std::sqrt(5 - 2 * kSqrt5), 4 / kSqrt5, 0,
                  -2 * std::sqrt(1 + 2 / kSqrt5), 0, 0}, h},
                {1.0, 1 / phi, kPi / 5,
                 {0.8 * std::sqrt(50 + 22 * kSqrt5), -(4 / kSqrt5 + 2),
                  -2 * std::sqrt((5 + 2 * kSqrt5) / 5), std::sqrt(1 - 2 / kSqrt5), 1, 0}, h},
            };
            r.diagrams["P22r"] = d;
        }
        {
            OverlapDiagram d;
            d.symmetry_fold = 10;
            d.norm = r.face_area * 10;
            d.solid = "dodecahedron";
            d.config = "L21r";
            const double h = hbig;
            d.pieces = {
                {1.0, 1 / (2 * p4), 2 * kPi / 5,
                 {4 / kSqrt5 - 2, 2 * std::sqrt(1 - 2 / kSqrt5), 0, 0, 0, 0}, h},
                {1.0, 1 / (2 * p2), kPi / 5,
                 {2 / kSqrt5, -std::sqrt(2 - 2 / kSqrt5), 0, 0, 0, 0}, h},
                {1.0, 1 / (2 * p2), 2 * kPi / 5,
                 {-2 / kSqrt5, std::sqrt(2 - 2 / kSqrt5), 0, 0, 0, 0}, h},
                {1.0, 1 / phi, kPi / 5,
                 {0.8 * (5 + kSqrt5), -std::sqrt(1 + 2 / kSqrt5), -1, 0, 0, 0}, h},
            };
            r.diagrams["P21r"] = d;
        }
        r.system = dodeca_system();
        cat["dodecahedron"] = std::move(r);
    }

    // Locate an opposite (parallel-separated) face pair for each solid with
    // overlap configurations.
    for (auto& [name, r] : cat) {
        if (r.diagrams.empty()) continue;
        Polytope K = make_solid(r.vertices, r.faces);
        for (size_t a = 0; a < r.faces.size() && r.face_a < 0; ++a) {
            for (size_t b = a + 1; b < r.faces.size(); ++b) {
                auto rel = affine_relation(side(K, int(a)), side(K, int(b)));
                if (rel.kind == AffineRelation::PARALLEL_SEPARATED) {
                    r.face_a = int(a);
                    r.face_b = int(b);
                    break;
                }
            }
        }
    }
    return cat;
}

const std::map<std::string, SolidRecipe>& the_catalog() {
    static std::map<std::string, SolidRecipe> cat = build_catalog();
    return cat;
}

double eval_recipe(const I00Recipe& r, int p) {
    KahanSum s;
    for (const auto& t : r.terms) s.add(t.coeff * auxint::I_val(p, 0, 0, t.q, t.gamma));
    return r.mult * std::pow(r.h, 2 + p) / r.volA * s.get();
}

}  // namespace

const std::vector<std::string>& solid_names() {
    static std::vector<std::string> names = {"tetrahedron", "cube", "octahedron",
                                             "icosahedron", "dodecahedron"};
    return names;
}

const SolidRecipe& get_recipe(const std::string& name) {
    auto& cat = the_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw Error(ErrorCode::UNKNOWN_SOLID, name);
    return it->second;
}

Polytope solid_polytope(const std::string& name) {
    const auto& r = get_recipe(name);
    return make_solid(r.vertices, r.faces);
}

std::map<std::string, double> irreducible_values(const std::string& name, int p) {
    const auto& r = get_recipe(name);
    std::map<std::string, double> out;
    for (const auto& [tag, rec] : r.irreducible_recipes) out[tag] = eval_recipe(rec, p);
    for (const auto& [tag, d] : r.diagrams) out[tag] = irreducible::overlap_moment_exact(d, p);
    return out;
}

MomentResult platonic_moment(const std::string& name, int p, Normalize normalize) {
    const auto& r = get_recipe(name);
    double raw = reduction::solve_solid_system(name, p, irreducible_values(name, p));
    double v = raw;
    if (normalize == Normalize::UNIT_VOLUME) v *= std::pow(r.volume, -p / 3.0);
    else if (normalize == Normalize::UNIT_V1)
        v *= std::pow(r.v1_unit_edge * r.edge_length, -double(p));
    return {v, auxint::Provenance::CLOSED_FORM, 0.0};
}

double ball_moment(int p, Normalize normalize) {
    if (p < -1) throw Error(ErrorCode::P_OUT_OF_RANGE, "p >= -1 required");
    // Unit-radius closed form from the distance density
    // f(r) = 3r^2 - (9/4) r^3 + (3/16) r^5 on (0, 2).
    double v = 3 * std::pow(2.0, 3 + p) / (3 + p) - 2.25 * std::pow(2.0, 4 + p) / (4 + p) +
               0.1875 * std::pow(2.0, 6 + p) / (6 + p);
    if (normalize == Normalize::UNIT_VOLUME) v *= std::pow(4 * kPi / 3, -p / 3.0);
    else if (normalize == Normalize::UNIT_V1) v *= std::pow(4.0, -double(p));
    return v;
}

const ReferenceConstants& reference_constants() {
    static ReferenceConstants rc = [] {
        ReferenceConstants c;
        c.unit_volume_mean = {{"ball", 0.63807479},        {"icosahedron", 0.64131249},
                              {"dodecahedron", 0.64252068}, {"octahedron", 0.65853073},
                              {"cube", 0.66170718},         {"tetrahedron", 0.72946242}};
        c.normalised_mean = {{"tetrahedron", 0.19601928}, {"octahedron", 0.21800285},
                             {"cube", 0.22056906},        {"icosahedron", 0.23872552},
                             {"dodecahedron", 0.23963024}, {"ball", 0.25714286}};
        c.reference_intermediates = {
            {"icosahedron/P11d", 2.0431430525135},  {"icosahedron/P11g", 3.1806727116118},
            {"icosahedron/P11f", 2.3977565034445},  {"icosahedron/P11t", 2.8940519649490},
            {"icosahedron/P20e", 2.688729552544},   {"icosahedron/P20r", 3.28394367574},
            {"icosahedron/P20f", 2.2472771159735},  {"icosahedron/P21r", 3.1819213671057},
            {"icosahedron/P22r", 3.12998447304770}, {"icosahedron/L33", 1.66353152568500},
            {"dodecahedron/P11d", 3.1367199950978}, {"dodecahedron/P11g", 4.60478605392525},
            {"dodecahedron/P11f", 3.770095521642},  {"dodecahedron/P11t", 5.04162416571318},
            {"dodecahedron/P20e", 3.346942678627},  {"dodecahedron/P20r", 4.87605984948},
            {"dodecahedron/P20f", 4.000363965317},  {"dodecahedron/P22r", 4.69357209587},
            {"dodecahedron/P21r", 4.808558828667},  {"dodecahedron/L33", 2.533488631644}};
        return c;
    }();
    return rc;
}

}  // namespace meandist::catalog
