#pragma once

#include "meandist/error.hpp"

namespace meandist::auxint {

// Auxiliary integrals over the fundamental triangle domain D(q, gamma) with
// vertices (0,0), (q,0), (q, q tan gamma).  All closed forms are driven by
// the K/J/M recurrences, iterated upward from the parity-matched boundary
// (p = -2 for even p, p = -3 for odd p).

enum class Provenance { CLOSED_FORM, QUADRATURE, MONTE_CARLO, MIXED };

// Request tuple for one auxiliary integral; usable as a cache key.
struct AuxKey {
    int p;          // >= -1
    int i, j;       // one of the six supported moment pairs
    double q;       // > 0
    double gamma;   // in (-pi/2, pi/2)
    auto operator<=>(const AuxKey&) const = default;
};

struct AuxValue {
    double value;
    Provenance provenance;
};

// K^(p)(r) = integral_0^r (1+t^2)^{1+p/2} dt,  p >= -3.  Odd: K(p,-r) = -K(p,r).
double K(int p, double r);

// J^(p)(q,gamma) = -gamma + integral_0^gamma (1+q^2 sec^2 t)^{1+p/2} dt,  p >= -3.
// Odd in gamma.
double J(int p, double q, double gamma);

// M^(p)(q,gamma) = integral_0^gamma cos^2 t [ (1+q^2 sec^2 t)^{1+p/2} - 1 ] dt,  p >= -3.
double M(int p, double q, double gamma);

// I^(p)_ij(q,gamma) = integral over D(q,gamma) of x^i y^j (1+x^2+y^2)^{p/2}.
// Supported (i,j): (0,0),(1,0),(0,1),(1,1),(2,0),(0,2).  p >= -1.
// Negative gamma is allowed for (i,j) = (0,0) only (odd continuation via J).
AuxValue I(int p, int i, int j, double q, double gamma);
AuxValue I(const AuxKey& key);

// Plain-value shortcut used by the evaluators.
double I_val(int p, int i, int j, double q, double gamma);

// h-scaling: I^(p)_ij(h, zeta, gamma) = h^{2+p+i+j} I^(p)_ij(zeta/h, gamma).
double I_scaled(int p, int i, int j, double h, double zeta, double gamma);

}  // namespace meandist::auxint
