#pragma once

#include <map>
#include <string>
#include <vector>

#include "meandist/auxint.hpp"
#include "meandist/geom.hpp"
#include "meandist/irreducible.hpp"

namespace meandist::catalog {

enum class Normalize { NONE, UNIT_VOLUME, UNIT_V1 };

struct MomentResult {
    double value;
    auxint::Provenance provenance;
    double error;  // stderr-like bound; ~0 for closed forms
};

// One irreducible term as a weighted I00 combination:
//   value(p) = mult * h^{2+p} / volA * sum_k coeff_k I00^(p)(q_k, gamma_k)
struct I00Recipe {
    double mult, h, volA;
    struct Term {
        double coeff, q, gamma;
    };
    std::vector<Term> terms;
};

// Raw CRT equation set: p*lhs = sum_i c_i (X_i - lhs).  X_i may be another
// unknown, a mixture name, or an irreducible tag.  Mixtures are linear
// combinations of unknowns/irreducibles.
struct ReductionSystem {
    struct Term {
        double coeff;
        std::string var;
    };
    struct Equation {
        std::string lhs;
        std::vector<Term> rhs;
    };
    std::vector<std::string> unknowns;  // P33 first
    std::vector<Equation> equations;
    std::map<std::string, std::vector<Term>> mixtures;
    std::vector<std::string> irreducibles;
};

struct SolidRecipe {
    std::string name;
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;
    double edge_length;
    double face_area;
    double volume;
    double v1_unit_edge;  // first intrinsic volume per unit edge length
    std::map<std::string, I00Recipe> irreducible_recipes;
    std::map<std::string, irreducible::OverlapDiagram> diagrams;
    ReductionSystem system;
    // Opposite-face pair used by the overlap configurations (indices into faces).
    int face_a = -1, face_b = -1;
};

const std::vector<std::string>& solid_names();
const SolidRecipe& get_recipe(const std::string& name);
Polytope solid_polytope(const std::string& name);

// Irreducible values for the solved system, all from the closed-form paths.
std::map<std::string, double> irreducible_values(const std::string& name, int p);

MomentResult platonic_moment(const std::string& name, int p, Normalize normalize);

// Ball (unit radius closed form; normalizations as for solids).
double ball_moment(int p, Normalize normalize);

// Reference decimals used as test targets.
struct ReferenceConstants {
    std::map<std::string, double> unit_volume_mean;   // Table 5 (8 decimals)
    std::map<std::string, double> normalised_mean;    // Table 8
    std::map<std::string, double> reference_intermediates;  // per-solid reference decimals
    double gamma_lower = 5.0 / 28.0, gamma_upper = 1.0 / 3.0;
};
const ReferenceConstants& reference_constants();

}  // namespace meandist::catalog
