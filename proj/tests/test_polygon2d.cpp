#include <cmath>

#include "doctest.h"
#include "meandist/geom.hpp"
#include "meandist/oracle.hpp"
#include "meandist/polygon2d.hpp"
#include "test_helpers.hpp"

using namespace meandist;
using namespace meandist::polygon2d;

namespace {

const double kPi = M_PI;

Polytope ngon_polytope(int n) {
    std::vector<Vec3> v;
    for (int i = 0; i < n; ++i)
        v.push_back({std::cos(2 * kPi * i / n), std::sin(2 * kPi * i / n), 0});
    return make_polygon(std::move(v));
}

}  // namespace

TEST_CASE("second moment closed form, both paths, n = 3..12") {
    for (int n = 3; n <= 12; ++n) {
        double expect = (2 + std::cos(2 * kPi / n)) / 3;
        CHECK(polygon_moment(n, 2) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(polygon_moment_unified(n, 2) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(polygon_moment(3, 2) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("square: p = 2 rescale and p = 1 against Monte Carlo") {
    // circumradius-1 square has side sqrt(2); unit square is scale 1/sqrt(2)
    CHECK(polygon_moment(4, 2) == doctest::Approx(2.0 / 3).epsilon(1e-13));
    // brute-force 4D polynomial integral for the unit square: E|X-Y|^2 = 1/3
    Polytope unit_sq = make_polygon({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    double exact = testutil::pair_second_moment(unit_sq, unit_sq);
    CHECK(exact == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(polygon_moment(4, 2, 1 / std::sqrt(2.0)) == doctest::Approx(exact).epsilon(1e-13));

    Polytope sq = ngon_polytope(4);
    auto mc = oracle::estimate_moment(sq, sq, 1, 2000000, 31);
    CHECK(std::abs(polygon_moment(4, 1) - mc.mean) < 4 * mc.stderr_);
}

TEST_CASE("edge_vertex_moment closed forms") {
    // p = -1: half-angle log form
    for (int n : {5, 8}) {
        for (int i = 1; i <= n - 2; ++i) {
            double expect = 0.5 / std::sin(kPi / n) *
                            std::log(std::tan(kPi * (i + 1) / (2 * n)) /
                                     std::tan(kPi * i / (2 * n)));
            CHECK(edge_vertex_moment(n, i, -1) == doctest::Approx(expect).epsilon(1e-13));
        }
    }
    // p = 2 cosine form for any n, i
    for (int n : {4, 7, 11}) {
        for (int i = 1; i <= n - 2; ++i) {
            double expect = 5.0 / 3 + std::cos(2 * kPi / n) / 3 - std::cos(2 * kPi * i / n) -
                            std::cos(2 * kPi * (i + 1) / n);
            CHECK(edge_vertex_moment(n, i, 2) == doctest::Approx(expect).epsilon(1e-13));
        }
    }
    // n = 6, i = 2, p = 1 against 1D quadrature of the defining zeta-integral
    {
        int n = 6, i = 2, p = 1;
        double si = std::sin(kPi * i / n), si1 = std::sin(kPi * (i + 1) / n);
        double pref = std::pow(2.0, p) * std::pow(si, 1 + p) * std::pow(si1, 1 + p) /
                      std::sin(kPi / n);
        double integral = testutil::quad1d(
            [&](double z) { return std::pow(std::sin(z), -(2 + p)); }, kPi * i / n,
            kPi * (i + 1) / n);
        CHECK(edge_vertex_moment(n, i, p) == doctest::Approx(pref * integral).epsilon(1e-11));
    }
    CHECK_THROWS_AS(edge_vertex_moment(6, 0, 1), Error);
    CHECK_THROWS_AS(edge_vertex_moment(6, 5, 1), Error);
}

TEST_CASE("odd n closed form via csc integrals is the dispatch path") {
    // n = 7, p = -1 against Monte Carlo
    Polytope hept = ngon_polytope(7);
    auto mc = oracle::estimate_moment(hept, hept, -1, 2000000, 37);
    CHECK(std::abs(polygon_moment(7, -1) - mc.mean) < 4 * mc.stderr_);
}

TEST_CASE("even-moment closed forms match the general path") {
    for (int n = 3; n <= 12; ++n)
        for (int p : {2, 4, 6, 8, 10, 12, 14})
            CHECK_MESSAGE(even_moment_closed(n, p) ==
                              doctest::Approx(polygon_moment(n, p)).epsilon(1e-10),
                          "n=" << n << " p=" << p);
    // spot values from the displays
    CHECK(even_moment_closed(3, 6) ==
          doctest::Approx((628 + 661 * std::cos(2 * kPi / 3) + 164 * std::cos(4 * kPi / 3) +
                           17 * std::cos(2 * kPi)) / 420 - 1.0 / 50).epsilon(1e-15));
    CHECK(even_moment_closed(100, 4) ==
          doctest::Approx((77 + 64 * std::cos(2 * kPi / 100) + 9 * std::cos(4 * kPi / 100)) / 90)
              .epsilon(1e-15));
}

TEST_CASE("parity consistency of the unified path") {
    for (int n : {4, 6, 8, 10})
        for (int p : {1, 2})
            CHECK(polygon_moment_unified(n, p) ==
                  doctest::Approx(polygon_moment(n, p)).epsilon(1e-11));
    for (int n : {5, 9})
        for (int p : {-1, 1, 3})
            CHECK(polygon_moment_unified(n, p) ==
                  doctest::Approx(polygon_moment(n, p)).epsilon(1e-11));
}

TEST_CASE("limits and disk asymptotics") {
    auto rep = polygon_limit_checks(4);
    CHECK(rep.p_minus2_limit == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(rep.disk_p1 == doctest::Approx(128 / (45 * kPi)).epsilon(1e-14));
    CHECK(disk_moment(2) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(polygon_moment(2048, 1) == doctest::Approx(disk_moment(1)).epsilon(1e-5));

    // |L(n,1)/P22d(1) - (1 - pi^2/(3n^2))| = O(n^-4): slope of the log-log fit
    double prev = 0;
    std::vector<double> err;
    for (int n : {32, 64, 128, 256}) {
        double e = std::abs(polygon_moment(n, 1) / disk_moment(1) -
                            (1 - kPi * kPi / (3.0 * n * n)));
        err.push_back(e);
        (void)prev;
    }
    for (size_t i = 0; i + 1 < err.size(); ++i) {
        double slope = std::log2(err[i] / err[i + 1]);
        CHECK(slope >= 3.7);
    }
}

TEST_CASE("Monte Carlo agreement at (5,1), (7,-1), (9,3)") {
    struct Case {
        int n, p;
    } cases[] = {{5, 1}, {7, -1}, {9, 3}};
    for (auto [n, p] : cases) {
        Polytope poly = ngon_polytope(n);
        auto mc = oracle::estimate_moment(poly, poly, p, 2000000, 1000 + n);
        CHECK_MESSAGE(std::abs(polygon_moment(n, p) - mc.mean) < 4 * mc.stderr_,
                      "n=" << n << " p=" << p);
    }
}

TEST_CASE("p = 0 returns exactly 1") {
    for (int n = 3; n <= 14; ++n)
        CHECK(polygon_moment(n, 0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("query interface") {
    CHECK(polygon_moment({.n = 6, .p = 2}) ==
          doctest::Approx(polygon_moment(6, 2)).epsilon(1e-15));
    CHECK(polygon_moment({.n = 6, .p = 1, .limit_p_minus2 = false, .scale = 2.0}) ==
          doctest::Approx(2 * polygon_moment(6, 1)).epsilon(1e-15));
    CHECK(polygon_moment({.n = 4, .limit_p_minus2 = true}) ==
          doctest::Approx(kPi).epsilon(1e-14));
}
