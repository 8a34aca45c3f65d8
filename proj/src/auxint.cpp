#include "meandist/auxint.hpp"

#include <cmath>

namespace meandist::auxint {

namespace {

void check_p(int p, int lowest) {
    if (p < lowest)
        throw Error(ErrorCode::P_OUT_OF_RANGE, "p = " + std::to_string(p));
}

}  // namespace

double K(int p, double r) {
    check_p(p, -3);
    if (r < 0) return -K(p, -r);
    double val;
    int pp;
    if (((p % 2) + 2) % 2 == 0) {
        val = r;              // K^(-2)
        pp = -2;
    } else {
        val = std::asinh(r);  // K^(-3)
        pp = -3;
    }
    const double r2 = 1.0 + r * r;
    while (pp < p) {
        pp += 2;
        val = (2 + pp) / double(3 + pp) * val + r / double(3 + pp) * std::pow(r2, 1 + pp / 2.0);
    }
    return val;
}

double J(int p, double q, double gamma) {
    check_p(p, -3);
    if (gamma < 0) return -J(p, q, -gamma);
    if (gamma == 0 || q == 0) return 0.0;
    double val;
    int pp;
    if (((p % 2) + 2) % 2 == 0) {
        val = 0.0;            // J^(-2)
        pp = -2;
    } else {
        val = -gamma + std::asin(std::sin(gamma) / std::sqrt(1 + q * q));  // J^(-3)
        pp = -3;
    }
    const double kr = q * std::tan(gamma) / std::sqrt(1 + q * q);
    while (pp < p) {
        pp += 2;
        val += q * std::pow(1 + q * q, (1 + pp) / 2.0) * K(pp - 2, kr);
    }
    return val;
}

double M(int p, double q, double gamma) {
    check_p(p, -3);
    if (gamma == 0 || q == 0) return 0.0;
    double val;
    int pp;
    if (((p % 2) + 2) % 2 == 0) {
        val = 0.0;            // M^(-2)
        pp = -2;
    } else {
        const double sg = std::sin(gamma), cg = std::cos(gamma);
        val = 0.5 * (1 - q * q) * std::asin(sg / std::sqrt(1 + q * q)) - 0.5 * gamma +
              0.5 * sg * (std::sqrt(cg * cg + q * q) - cg);                // M^(-3)
        pp = -3;
    }
    while (pp < p) {
        pp += 2;
        val += q * q * (gamma + J(pp - 2, q, gamma));
    }
    return val;
}

double I_val(int p, int i, int j, double q, double gamma) {
    check_p(p, -1);
    if (q < 0) throw Error(ErrorCode::BAD_INPUT, "q < 0");
    if (gamma == 0 || q == 0) return 0.0;
    if (gamma < 0 && !(i == 0 && j == 0))
        throw Error(ErrorCode::UNSUPPORTED_MOMENT, "negative gamma only for I_00");

    if (i == 0 && j == 0) return J(p, q, gamma) / (2 + p);
    if (i == 1 && j == 0) {
        const double s = std::sqrt(1 + q * q);
        return (std::pow(1 + q * q, (3 + p) / 2.0) * K(p, q * std::tan(gamma) / s) -
                std::sin(gamma) * K(p, q / std::cos(gamma))) /
               (2 + p);
    }
    if (i == 0 && j == 1)
        return (std::cos(gamma) * K(p, q / std::cos(gamma)) - K(p, q)) / (2 + p);
    if (i == 1 && j == 1) {
        const double sg = std::sin(gamma), cg = std::cos(gamma);
        return (sg * sg + cg * cg * std::pow(1 + q * q / (cg * cg), 2 + p / 2.0) -
                std::pow(1 + q * q, 2 + p / 2.0)) /
               double((2 + p) * (4 + p));
    }
    if (i == 2 && j == 0)
        return M(p + 2, q, gamma) / (4 + p) - M(p, q, gamma) / (2 + p);
    if (i == 0 && j == 2)
        return I_val(p + 2, 0, 0, q, gamma) - I_val(p, 0, 0, q, gamma) - I_val(p, 2, 0, q, gamma);
    throw Error(ErrorCode::UNSUPPORTED_MOMENT,
                "(i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

AuxValue I(int p, int i, int j, double q, double gamma) {
    return {I_val(p, i, j, q, gamma), Provenance::CLOSED_FORM};
}

AuxValue I(const AuxKey& key) { return I(key.p, key.i, key.j, key.q, key.gamma); }

double I_scaled(int p, int i, int j, double h, double zeta, double gamma) {
    if (h <= 0) throw Error(ErrorCode::H_ZERO, "h must be positive");
    return std::pow(h, 2 + p + i + j) * I_val(p, i, j, zeta / h, gamma);
}

}  // namespace meandist::auxint
