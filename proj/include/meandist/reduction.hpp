#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meandist/catalog.hpp"
#include "meandist/geom.hpp"

namespace meandist::reduction {

// Pre-solved per-solid combination of irreducible terms (the final display
// of each solid's reduction system); rational in p, poles only at p <= -3.
double solve_solid_system(const std::string& name, int p,
                          const std::map<std::string, double>& irreducibles);

// Numeric solve of a raw CRT equation set; certifies the pre-solved forms.
double solve_raw_system(const catalog::ReductionSystem& sys, double p,
                        const std::map<std::string, double>& irreducibles);

// Moments of an arbitrary tetrahedron via the nonparallel-convex formula
// with unit n-weights: vertex-opposite-face and skew-edge-pair terms.
double tetrahedron_moment(const std::array<Vec3, 4>& verts, int p);

struct BasicWeights {
    // face_pair[k][k'] for k < k'; body_edge[j] per edge of K.
    std::map<std::pair<int, int>, double> face_pair;
    std::vector<double> body_edge;
    Vec3 C;
    std::vector<Vec3> Ck;
    std::vector<Vec3> Dj;
};

// Double-reduction weights for P_KK over face pairs and body-edge terms.
// C arbitrary, Ck on each face plane, Dj on each edge line.
BasicWeights theorem_basic_weights(const Polytope& K, Vec3 C, const std::vector<Vec3>& Ck,
                                   const std::vector<Vec3>& Dj);
BasicWeights theorem_basic_weights(const Polytope& K);  // default scaling points

struct Budget {
    uint64_t mc_samples_per_term = 200000;
    uint64_t seed = 1;
    std::optional<double> target_error;  // BUDGET_EXCEEDED if unmet
};

// Theorem-level evaluation for a general closed polyhedron: parallel face
// pairs go through the overlap quadrature, everything else through seeded
// Monte Carlo within the budget.
catalog::MomentResult general_moment(const Polytope& K, int p, const Budget& budget);

}  // namespace meandist::reduction
