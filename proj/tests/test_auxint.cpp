#include <cmath>

#include "doctest.h"
#include "meandist/auxint.hpp"
#include "meandist/oracle.hpp"
#include "test_helpers.hpp"

using namespace meandist;
using namespace meandist::auxint;

namespace {

const double kPi = M_PI;
double arccoth(double x) { return 0.5 * std::log((x + 1) / (x - 1)); }
double arccot(double x) { return std::atan(1 / x); }

// Quadrature oracle over the fundamental triangle D(q, gamma); absolute
// tolerance scaled to the integrand's crude magnitude so the comparison is
// effectively relative.
double I_quad(int p, int i, int j, double q, double gamma) {
    auto f = [&](double x, double y) {
        return std::pow(x, i) * std::pow(y, j) * std::pow(1 + x * x + y * y, p / 2.0);
    };
    double ymax = q * std::tan(gamma);
    double area = 0.5 * q * ymax;
    double fmax = std::max(f(q, ymax), std::max(f(q, 0), 1.0));
    double tol = std::max(1e-14, 1e-12 * area * fmax);
    return oracle::quad2d_tri(f, {0, 0}, {q, 0}, {q, ymax}, tol);
}

}  // namespace

TEST_CASE("K boundary conditions and spot values") {
    CHECK(K(-2, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(K(-3, 1.0) == doctest::Approx(std::log(1 + std::sqrt(2.0))).epsilon(1e-15));
    double km1 = testutil::quad1d([](double t) { return std::sqrt(1 + t * t); }, 0, 1);
    double kp1 = testutil::quad1d([](double t) { return std::pow(1 + t * t, 1.5); }, 0, 1);
    CHECK(K(-1, 1.0) == doctest::Approx(km1).epsilon(1e-12));
    CHECK(K(-1, 1.0) == doctest::Approx(1.1477936).epsilon(1e-7));
    CHECK(K(1, 1.0) == doctest::Approx(kp1).epsilon(1e-12));
    CHECK(K(1, 1.0) == doctest::Approx(1.5679520).epsilon(1e-7));
}

TEST_CASE("K odd symmetry") {
    oracle::CounterRng rng(11, 0);
    for (int it = 0; it < 50; ++it) {
        int p = int(rng.next_u64() % 7) - 3;
        double r = 5 * rng.next_double();
        CHECK(K(p, -r) == doctest::Approx(-K(p, r)).epsilon(1e-15));
    }
}

TEST_CASE("J boundaries, recurrence vs defining integral, odd symmetry") {
    CHECK(J(-2, 0.7, 0.5) == 0.0);
    CHECK(J(-3, 1.0, kPi / 4) == doctest::Approx(-kPi / 4 + std::asin(0.5)).epsilon(1e-15));
    CHECK(J(-3, 1.0, kPi / 4) == doctest::Approx(-0.2617994).epsilon(1e-6));

    auto jdef = [](int p, double q, double g) {
        return testutil::quad1d(
            [&](double t) {
                return std::pow(1 + q * q / std::pow(std::cos(t), 2), 1 + p / 2.0) - 1;
            },
            0, g);
    };
    CHECK(J(1, 1.0, kPi / 4) == doctest::Approx(jdef(1, 1.0, kPi / 4)).epsilon(1e-11));
    CHECK(J(1, 1.0, kPi / 4) == doctest::Approx(1.9211839).epsilon(1e-7));
    CHECK(J(3, 0.6, 1.1) == doctest::Approx(jdef(3, 0.6, 1.1)).epsilon(1e-11));
    CHECK(J(2, 0.6, 1.1) == doctest::Approx(jdef(2, 0.6, 1.1)).epsilon(1e-11));
    CHECK(J(1, 0.7, -0.4) == doctest::Approx(-J(1, 0.7, 0.4)).epsilon(1e-15));
}

TEST_CASE("M boundaries and recurrence vs defining integral") {
    CHECK(M(-2, 1.3, 0.4) == 0.0);
    auto mdef = [](int p, double q, double g) {
        return testutil::quad1d(
            [&](double t) {
                double c = std::cos(t);
                return c * c * (std::pow(1 + q * q / (c * c), 1 + p / 2.0) - 1);
            },
            0, g);
    };
    CHECK(M(-3, 1.0, kPi / 4) == doctest::Approx(mdef(-3, 1.0, kPi / 4)).epsilon(1e-11));
    CHECK(M(1, 0.5, kPi / 3) == doctest::Approx(mdef(1, 0.5, kPi / 3)).epsilon(1e-10));
    CHECK(M(3, 1.7, 0.9) == doctest::Approx(mdef(3, 1.7, 0.9)).epsilon(1e-10));
}

TEST_CASE("I spot examples") {
    double i00 = 1 / (2 * std::sqrt(3.0)) - kPi / 36 + 2.0 / 3 * arccoth(std::sqrt(3.0));
    CHECK(I(1, 0, 0, 1, kPi / 4).value == doctest::Approx(i00).epsilon(1e-14));
    CHECK(I(1, 0, 0, 1, kPi / 4).value == doctest::Approx(0.6403946).epsilon(1e-7));
    CHECK(I(1, 0, 0, 1, kPi / 4).provenance == Provenance::CLOSED_FORM);

    double i11 = 1.0 / 20 - 3.0 / 20 * std::sqrt(1.5) + 3 * std::sqrt(3.0) / 20;
    CHECK(I(1, 1, 1, std::sqrt(2.0) / 2, kPi / 3).value == doctest::Approx(i11).epsilon(1e-14));

    CHECK(I(1, 0, 0, 0.77, 0.0).value == 0.0);
    CHECK(I(1, 0, 0, 0.0, 0.5).value == 0.0);

    double i20 = I_quad(1, 2, 0, std::sqrt(2.0) / 4, kPi / 3);
    CHECK(I(1, 2, 0, std::sqrt(2.0) / 4, kPi / 3).value == doctest::Approx(i20).epsilon(1e-11));
}

TEST_CASE("I against the 2D quadrature oracle on a random grid") {
    oracle::CounterRng rng(7, 0);
    static constexpr int kIdx[6][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
    for (int it = 0; it < 25; ++it) {
        int p = int(rng.next_u64() % 5) - 1;
        double q = 0.1 + 3.9 * rng.next_double();
        double g = 0.05 + 1.4 * rng.next_double();
        for (const auto& ij : kIdx) {
            double a = I_val(p, ij[0], ij[1], q, g);
            double b = I_quad(p, ij[0], ij[1], q, g);
            CHECK(a == doctest::Approx(b).epsilon(1e-10));
        }
    }
}

TEST_CASE("Pythagorean closure") {
    oracle::CounterRng rng(13, 0);
    for (int it = 0; it < 60; ++it) {
        int p = 2 * int(rng.next_u64() % 3) - 1;  // -1, 1, 3
        double q = 0.1 + 4.9 * rng.next_double();
        double g = 0.05 + 1.45 * rng.next_double();
        double lhs = I_val(p, 0, 0, q, g) + I_val(p, 2, 0, q, g) + I_val(p, 0, 2, q, g);
        double rhs = I_val(p + 2, 0, 0, q, g);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
}

TEST_CASE("replacement rules are numeric identities") {
    CHECK(std::asinh(1 / std::sqrt(3.0)) == doctest::Approx(std::log(3.0) / 2).epsilon(1e-15));
    CHECK(std::asinh(1 / std::sqrt(2.0)) ==
          doctest::Approx(arccoth(std::sqrt(3.0))).epsilon(1e-15));
    CHECK(std::asinh(1.0) == doctest::Approx(arccoth(std::sqrt(2.0))).epsilon(1e-15));
    CHECK(std::asin(1 / std::sqrt(3.0)) ==
          doctest::Approx(kPi / 2 - std::atan(std::sqrt(2.0))).epsilon(1e-15));
    CHECK(std::asin(std::sqrt(2.0 / 3)) ==
          doctest::Approx(kPi / 2 - arccot(std::sqrt(2.0))).epsilon(1e-15));
}

TEST_CASE("AuxKey request form") {
    AuxKey k{1, 0, 0, 1.0, kPi / 4};
    CHECK(I(k).value == doctest::Approx(I_val(1, 0, 0, 1.0, kPi / 4)).epsilon(1e-16));
    CHECK((k == AuxKey{1, 0, 0, 1.0, kPi / 4}));
    CHECK((k != AuxKey{1, 1, 0, 1.0, kPi / 4}));
}

TEST_CASE("I_scaled") {
    CHECK(I_scaled(1, 0, 0, 1.0, 0.5, 0.7) ==
          doctest::Approx(I_val(1, 0, 0, 0.5, 0.7)).epsilon(1e-15));
    CHECK(I_scaled(1, 0, 0, 2.0, 2.0, kPi / 4) ==
          doctest::Approx(8 * I_val(1, 0, 0, 1.0, kPi / 4)).epsilon(1e-15));
    CHECK(I_scaled(1, 0, 0, 2.0, 2.0, kPi / 4) == doctest::Approx(5.1231571).epsilon(1e-7));
    double lhs = I_scaled(1, 1, 0, 0.5, 0.25, kPi / 3);
    CHECK(lhs == doctest::Approx(std::pow(0.5, 4) * I_val(1, 1, 0, 0.5, kPi / 3)).epsilon(1e-15));
    CHECK(lhs == doctest::Approx(std::pow(0.5, 4) * I_quad(1, 1, 0, 0.5, kPi / 3)).epsilon(1e-10));
    CHECK_THROWS_AS(I_scaled(1, 0, 0, 0.0, 1.0, 0.5), Error);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(K(-4, 1.0), Error);
    CHECK_THROWS_AS(I(-2, 0, 0, 1.0, 0.5), Error);
    CHECK_THROWS_AS(I(1, 2, 1, 1.0, 0.5), Error);
    CHECK_THROWS_AS(I(1, 1, 0, 1.0, -0.5), Error);
    CHECK_NOTHROW(I(1, 0, 0, 1.0, -0.5));  // negative gamma continues I00 oddly
    CHECK(I_val(1, 0, 0, 1.0, -0.5) == doctest::Approx(-I_val(1, 0, 0, 1.0, 0.5)));
}
