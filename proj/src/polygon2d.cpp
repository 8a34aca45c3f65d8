#include "meandist/polygon2d.hpp"

#include <cmath>
#include <vector>

#include "meandist/error.hpp"

namespace meandist::polygon2d {

namespace {

const double kPi = M_PI;

void check_np(int n, int p) {
    if (n < 3) throw Error(ErrorCode::BAD_INPUT, "n >= 3 required");
    if (p < -1) throw Error(ErrorCode::P_OUT_OF_RANGE, "p >= -1 required");
}

}  // namespace

double csc_power_integral(int m, double a, double b) {
    if (m < 1) throw Error(ErrorCode::P_OUT_OF_RANGE, "csc power >= 1");
    // F_1 = ln|tan(z/2)|, F_2 = -cot z,
    // F_m = -cos z csc^{m-1} z/(m-1) + (m-2)/(m-1) F_{m-2}; iterated upward.
    auto antiderivative = [m](double z) {
        double f = (m % 2 == 1) ? std::log(std::abs(std::tan(z / 2)))
                                : -1.0 / std::tan(z);
        int k = (m % 2 == 1) ? 1 : 2;
        const double cz = std::cos(z), sz = std::sin(z);
        while (k < m) {
            k += 2;
            f = -cz / ((k - 1) * std::pow(sz, k - 1)) + double(k - 2) / (k - 1) * f;
        }
        return f;
    };
    return antiderivative(b) - antiderivative(a);
}

double edge_vertex_moment(int n, int i, int p) {
    check_np(n, p);
    if (i < 1 || i > n - 2) throw Error(ErrorCode::INDEX_RANGE, "1 <= i <= n-2");
    const double si = std::sin(kPi * i / n), si1 = std::sin(kPi * (i + 1) / n);
    return std::pow(2.0, p) * std::pow(si, 1 + p) * std::pow(si1, 1 + p) /
           std::sin(kPi / n) * csc_power_integral(2 + p, kPi * i / n, kPi * (i + 1) / n);
}

double edge_dedge_moment(int n, int i, int p) {
    check_np(n, p);
    if (i < 1 || i > n - 2) throw Error(ErrorCode::INDEX_RANGE, "1 <= i <= n-2");
    if (2 * i == n) {
        // Parallel opposite edge, separation h = 2 cos(pi/n).
        const double c = std::cos(kPi / n), s = std::sin(kPi / n);
        return (2 + p) * edge_vertex_moment(n, i, p) -
               std::pow(2.0, p) / (s * s) * (1 - std::pow(c, 2 + p));
    }
    const double pe0 = edge_vertex_moment(n, i, p);
    const double pe1 = (i >= 2) ? edge_vertex_moment(n, i - 1, p) : 0.0;  // P_{E_i V_1}
    return 0.5 / std::sin(kPi / n) / std::cos(kPi * i / n) *
           (std::sin(kPi * (i + 1) / n) * pe0 - std::sin(kPi * (i - 1) / n) * pe1);
}

double polygon_moment_unified(int n, int p, double scale) {
    check_np(n, p);
    double s = 0;
    for (int i = 1; i <= n - 2; ++i)
        s += std::sin(kPi * i / n) * std::sin(kPi * (i + 1) / n) *
             (2 * edge_dedge_moment(n, i, p) + edge_vertex_moment(n, i, p));
    double v = 16 / (std::cos(kPi / n) * n * double(4 + p) * (3 + p) * (2 + p)) * s;
    return v * std::pow(scale, p);
}

double polygon_moment(int n, int p, double scale) {
    check_np(n, p);
    const double sec = 1 / std::cos(kPi / n);
    const double denom = n * double(4 + p) * (3 + p) * (2 + p);
    double v;
    if (n % 2 == 1) {
        double s = 0;
        for (int i = 1; i <= n - 2; ++i) {
            double a = std::sin(kPi * i / n), b = std::sin(kPi * (i + 1) / n);
            s += a * a * b * b / (std::cos(kPi * i / n) * std::cos(kPi * (i + 1) / n)) *
                 edge_vertex_moment(n, i, p);
        }
        v = -16 * sec / denom * s;
    } else {
        const double c = std::cos(kPi / n), sn = std::sin(kPi / n);
        double head = c * (3 + p + (c * c) / (sn * sn)) * edge_vertex_moment(n, n / 2, p) -
                      std::pow(2.0, p) * c / (sn * sn) * (1 - std::pow(c, 2 + p));
        double s = 0;
        for (int i = 1; i <= n / 2 - 2; ++i) {
            double a = std::sin(kPi * i / n), b = std::sin(kPi * (i + 1) / n);
            s += a * a * b * b / (std::cos(kPi * i / n) * std::cos(kPi * (i + 1) / n)) *
                 edge_vertex_moment(n, i, p);
        }
        v = 32 * sec / denom * (head - s);
    }
    return v * std::pow(scale, p);
}

double polygon_moment(const PolygonQuery& query) {
    if (query.limit_p_minus2) {
        if (query.n < 3) throw Error(ErrorCode::BAD_INPUT, "n >= 3 required");
        // the limit value scales like p = -2
        return 4 * kPi / (query.n * std::sin(2 * kPi / query.n)) /
               (query.scale * query.scale);
    }
    return polygon_moment(query.n, query.p, query.scale);
}

double even_moment_closed(int n, int p) {
    if (n < 3) throw Error(ErrorCode::BAD_INPUT, "n >= 3 required");
    auto c = [&](int k) { return std::cos(2 * kPi * k / n); };
    auto d = [&](int j) { return n == j ? 1.0 : 0.0; };
    switch (p) {
        case 2: return (2 + c(1)) / 3;
        case 4: return (77 + 64 * c(1) + 9 * c(2)) / 90;
        case 6:
            return (628 + 661 * c(1) + 164 * c(2) + 17 * c(3)) / 420 - d(3) / 50;
        case 8:
            return (4921 + 5936 * c(1) + 1974 * c(2) + 368 * c(3) + 31 * c(4)) / 1575 -
                   16 * d(3) / 175 + 2 * d(4) / 225;
        case 10:
            return (30476 + 40162 * c(1) + 16072 * c(2) + 4093 * c(3) + 628 * c(4) +
                    45 * c(5)) / 4158 -
                   15 * d(3) / 49 + 4 * d(4) / 63 - 2 * d(5) / 441;
        case 12:
            return (15673314 + 21975552 * c(1) + 10006023 * c(2) + 3122432 * c(3) +
                    661402 * c(4) + 87296 * c(5) + 5461 * c(6)) / 840840 -
                   2847 * d(3) / 3080 + 668 * d(4) / 2205 -
                   (17 + std::sqrt(5.0)) / 441 * d(5) + d(6) / 392;
        case 14:
            return (15540360 + 22811745 * c(1) + 11429660 * c(2) + 4126221 * c(3) +
                    1081192 * c(4) + 198713 * c(5) + 23124 * c(6) + 1285 * c(7)) / 308880 -
                   384 * d(3) / 143 + 1816 * d(4) / 1485 -
                   (3057 + 331 * std::sqrt(5.0)) / 14256 * d(5) + 11 * d(6) / 360 -
                   d(7) / 648;
    }
    throw Error(ErrorCode::UNSUPPORTED_MOMENT, "even closed form needs p in {2,...,14}");
}

double disk_moment(int p) {
    if (p <= -2) throw Error(ErrorCode::P_OUT_OF_RANGE, "p > -2 required");
    return std::pow(2.0, 4 + p) * std::tgamma((3 + p) / 2.0) /
           ((2 + p) * (4 + p) * std::sqrt(kPi) * std::tgamma(2 + p / 2.0));
}

LimitReport polygon_limit_checks(int n) {
    if (n < 3) throw Error(ErrorCode::BAD_INPUT, "n >= 3 required");
    LimitReport r;
    r.p_minus2_limit = 4 * kPi / (n * std::sin(2 * kPi / n));
    r.disk_p1 = disk_moment(1);
    r.asymptotic_p1 = r.disk_p1 * (1 - kPi * kPi / (3.0 * n * n));
    return r;
}

}  // namespace meandist::polygon2d
