#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "meandist/auxint.hpp"
#include "meandist/catalog.hpp"
#include "meandist/cliutil.hpp"
#include "meandist/geom.hpp"
#include "meandist/oracle.hpp"
#include "meandist/polygon2d.hpp"
#include "meandist/reduction.hpp"

using namespace meandist;

namespace {

catalog::Normalize parse_normalize(const std::string& s) {
    if (s == "none") return catalog::Normalize::NONE;
    if (s == "volume") return catalog::Normalize::UNIT_VOLUME;
    if (s == "v1") return catalog::Normalize::UNIT_V1;
    throw Error(ErrorCode::BAD_INPUT, "normalize must be none|volume|v1");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BAD_INPUT, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_value(const std::string& format, const std::string& subject, int p, double value,
                int provenance, double error, int digits) {
    std::string prov = cliutil::provenance_name(provenance);
    if (format == "json") {
        std::cout << cliutil::render_moment_json(subject, p, value, prov, error) << "\n";
    } else if (format == "csv") {
        std::cout << subject << "," << p << "," << cliutil::format_significant(value, digits)
                  << "," << prov << "\n";
    } else if (format == "markdown") {
        std::cout << "| " << subject << " | " << p << " | "
                  << cliutil::format_significant(value, digits) << " | " << prov << " |\n";
    } else {
        std::cout << cliutil::format_significant(value, digits) << " (" << prov << ")";
        if (error > 0) std::cout << " +- " << cliutil::format_significant(error, 3);
        std::cout << "\n";
    }
}

struct TableRow {
    std::string name;
    double value;
};

void emit_table(const std::vector<TableRow>& rows, const std::string& header,
                const std::string& format, int digits) {
    char buf[64];
    auto fixed = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.*f", digits, v);
        return std::string(buf);
    };
    if (format == "markdown") {
        std::cout << "| solid | " << header << " |\n|---|---|\n";
        for (const auto& r : rows)
            std::cout << "| " << r.name << " | " << fixed(r.value) << " |\n";
    } else {
        std::cout << "solid," << header << "\n";
        for (const auto& r : rows) std::cout << r.name << "," << fixed(r.value) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Distance moments of random points in polytopes"};
    app.require_subcommand(1);

    std::string solid = "cube", file, normalize = "none", format = "text", gamma_expr = "0";
    std::string which = "unit-volume";
    int p = 1, digits = 15, ii = 0, jj = 0, n = 5;
    double q = 1.0, scale = 1.0, target_error = 0.0;
    uint64_t samples = 1000000, seed = 0;
    bool closed_form = false, limit = false;

    auto* cm = app.add_subcommand("moments", "closed-form Platonic-solid moments");
    cm->add_option("--solid", solid)->required();
    cm->add_option("--p", p)->required();
    cm->add_option("--normalize", normalize);
    cm->add_option("--format", format);
    cm->add_option("--digits", digits);

    auto* ct = app.add_subcommand("tetra", "moments of a tetrahedron from JSON vertices");
    ct->add_option("--file", file)->required();
    ct->add_option("--p", p)->required();
    ct->add_option("--format", format);
    ct->add_option("--digits", digits);

    auto* cg = app.add_subcommand("general", "general polyhedron via the reduction theorem");
    cg->add_option("--file", file)->required();
    cg->add_option("--p", p)->required();
    cg->add_option("--samples", samples);
    cg->add_option("--seed", seed)->required();
    cg->add_option("--target-error", target_error);
    cg->add_option("--format", format);
    cg->add_option("--digits", digits);

    auto* cp = app.add_subcommand("polygon", "regular n-gon moments");
    cp->add_option("--n", n)->required();
    cp->add_option("--p", p)->required();
    cp->add_option("--scale", scale);
    cp->add_flag("--closed-form", closed_form);
    cp->add_flag("--limit", limit);
    cp->add_option("--format", format);
    cp->add_option("--digits", digits);

    auto* ca = app.add_subcommand("auxint", "auxiliary integral I^(p)_ij(q, gamma)");
    ca->add_option("--p", p)->required();
    ca->add_option("--i", ii)->required();
    ca->add_option("--j", jj)->required();
    ca->add_option("--q", q)->required();
    ca->add_option("--gamma", gamma_expr)->required();

    auto* cv = app.add_subcommand("verify", "closed form vs seeded Monte Carlo at 4 sigma");
    cv->add_option("--solid", solid)->required();
    cv->add_option("--p", p)->required();
    cv->add_option("--samples", samples);
    cv->add_option("--seed", seed)->required();

    auto* cb = app.add_subcommand("table", "reference tables");
    cb->add_option("--which", which);
    cb->add_option("--format", format);
    cb->add_option("--digits", digits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (cm->parsed()) {
            if (solid == "ball") {
                double v = catalog::ball_moment(p, parse_normalize(normalize));
                emit_value(format, "ball", p, v, int(auxint::Provenance::CLOSED_FORM), 0,
                           digits);
            } else {
                auto r = catalog::platonic_moment(solid, p, parse_normalize(normalize));
                emit_value(format, solid, p, r.value, int(r.provenance), r.error, digits);
            }
        } else if (ct->parsed()) {
            Polytope P = polytope_from_json_text(read_file(file));
            if (P.vertices.size() != 4)
                throw Error(ErrorCode::BAD_INPUT, "tetra expects 4 vertices");
            std::array<Vec3, 4> V{P.vertices[0], P.vertices[1], P.vertices[2], P.vertices[3]};
            double v = reduction::tetrahedron_moment(V, p);
            emit_value(format, file, p, v, int(auxint::Provenance::CLOSED_FORM), 0, digits);
        } else if (cg->parsed()) {
            Polytope P = polytope_from_json_text(read_file(file));
            reduction::Budget b;
            b.mc_samples_per_term = samples;
            b.seed = seed;
            if (target_error > 0) b.target_error = target_error;
            auto r = reduction::general_moment(P, p, b);
            emit_value(format, file, p, r.value, int(r.provenance), r.error, digits);
        } else if (cp->parsed()) {
            if (limit) {
                auto rep = polygon2d::polygon_limit_checks(n);
                std::cout << "lim (2+p) L^(p) as p->-2+ = "
                          << cliutil::format_significant(rep.p_minus2_limit, digits) << "\n";
                std::cout << "disk P22d(1) = "
                          << cliutil::format_significant(rep.disk_p1, digits) << "\n";
                std::cout << "leading-order L^(1) prediction = "
                          << cliutil::format_significant(rep.asymptotic_p1, digits) << "\n";
            } else {
                double v = closed_form
                               ? std::pow(scale, p) * polygon2d::even_moment_closed(n, p)
                               : polygon2d::polygon_moment(n, p, scale);
                emit_value(format, "ngon" + std::to_string(n), p, v,
                           int(auxint::Provenance::CLOSED_FORM), 0, digits);
            }
        } else if (ca->parsed()) {
            double g = cliutil::parse_angle(gamma_expr);
            auto v = auxint::I(p, ii, jj, q, g);
            std::cout << cliutil::format_significant(v.value, 15) << "\n";
        } else if (cv->parsed()) {
            double cf = (solid == "ball")
                            ? catalog::ball_moment(p, catalog::Normalize::NONE)
                            : catalog::platonic_moment(solid, p, catalog::Normalize::NONE).value;
            Polytope K = catalog::solid_polytope(solid);
            auto mc = oracle::estimate_moment(K, K, p, samples, seed);
            bool pass = std::abs(cf - mc.mean) < 4 * mc.stderr_;
            std::cout << "closed-form " << cliutil::format_significant(cf, 12) << "  mc "
                      << cliutil::format_significant(mc.mean, 12) << "  stderr "
                      << cliutil::format_significant(mc.stderr_, 4) << "  "
                      << (pass ? "PASS" : "FAIL") << "\n";
            if (!pass) return 2;
        } else if (cb->parsed()) {
            if (!cb->count("--format")) format = "markdown";
            if (!cb->count("--digits")) digits = 8;
            std::vector<TableRow> rows;
            if (which == "unit-volume") {
                rows.push_back(
                    {"ball", catalog::ball_moment(1, catalog::Normalize::UNIT_VOLUME)});
                for (const auto& s : catalog::solid_names())
                    rows.push_back(
                        {s,
                         catalog::platonic_moment(s, 1, catalog::Normalize::UNIT_VOLUME).value});
                std::sort(rows.begin(), rows.end(),
                          [](const auto& a, const auto& b) { return a.value < b.value; });
                emit_table(rows, "mean distance (unit volume)", format, digits);
            } else if (which == "intrinsic") {
                for (const auto& s : catalog::solid_names())
                    rows.push_back({s, catalog::get_recipe(s).v1_unit_edge});
                emit_table(rows, "V1 per unit edge", format, digits);
            } else if (which == "normalised") {
                rows.push_back({"lower-bound", 5.0 / 28});
                std::vector<TableRow> mid;
                for (const auto& s : catalog::solid_names())
                    mid.push_back(
                        {s, catalog::platonic_moment(s, 1, catalog::Normalize::UNIT_V1).value});
                mid.push_back({"ball", catalog::ball_moment(1, catalog::Normalize::UNIT_V1)});
                std::sort(mid.begin(), mid.end(),
                          [](const auto& a, const auto& b) { return a.value < b.value; });
                rows.insert(rows.end(), mid.begin(), mid.end());
                rows.push_back({"upper-bound", 1.0 / 3});
                emit_table(rows, "normalised mean distance", format, digits);
            } else {
                throw Error(ErrorCode::BAD_INPUT,
                            "which must be unit-volume|intrinsic|normalised");
            }
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
