#include <cmath>

#include "json.hpp"
#include "meandist/geom.hpp"
#include "meandist/irreducible.hpp"

namespace meandist {

namespace {

using nlohmann::json;

void require_finite(double v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::BAD_INPUT, "non-finite coordinate");
}

}  // namespace

Polytope polytope_from_json_text(const std::string& text) {
    json j = json::parse(text);
    int dim = j.at("dim").get<int>();
    std::vector<Vec3> verts;
    for (const auto& row : j.at("vertices")) {
        if (int(row.size()) != dim) throw Error(ErrorCode::BAD_INPUT, "coordinate arity");
        Vec3 v{row[0].get<double>(), row[1].get<double>(),
               dim == 3 ? row[2].get<double>() : 0.0};
        require_finite(v.x);
        require_finite(v.y);
        require_finite(v.z);
        verts.push_back(v);
    }
    if (dim == 2) return make_polygon(std::move(verts), 2);
    if (dim != 3) throw Error(ErrorCode::BAD_INPUT, "dim must be 2 or 3");
    if (!j.contains("faces")) {
        if (verts.size() == 4) {
            // Bare tetrahedron: close it up.
            return make_solid(std::move(verts), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        }
        throw Error(ErrorCode::BAD_INPUT, "3D polytope needs faces");
    }
    std::vector<std::vector<int>> faces;
    for (const auto& f : j.at("faces")) faces.push_back(f.get<std::vector<int>>());
    return make_solid(std::move(verts), std::move(faces));
}

std::string polytope_to_json_text(const Polytope& P) {
    json j;
    j["dim"] = P.dim_ambient;
    json verts = json::array();
    for (const auto& v : P.vertices) {
        if (P.dim_ambient == 2) verts.push_back({v.x, v.y});
        else verts.push_back({v.x, v.y, v.z});
    }
    j["vertices"] = verts;
    if (!P.faces.empty()) j["faces"] = P.faces;
    return j.dump();
}

}  // namespace meandist

namespace meandist::irreducible {

using nlohmann::json;

std::string diagram_to_json_text(const OverlapDiagram& d) {
    json j;
    j["fold"] = d.symmetry_fold;
    json pieces = json::array();
    for (const auto& p : d.pieces) {
        json pj;
        pj["sign"] = p.sign;
        pj["q"] = p.q;
        pj["gamma"] = p.gamma;
        pj["coeffs"] = p.coeffs;
        pj["h"] = p.h;
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    j["norm"] = d.norm;
    j["scale"] = d.scale;
    j["meta"] = {{"solid", d.solid}, {"config", d.config}};
    return j.dump();
}

OverlapDiagram diagram_from_json_text(const std::string& text) {
    json j = json::parse(text);
    OverlapDiagram d;
    d.symmetry_fold = j.at("fold").get<int>();
    for (const auto& pj : j.at("pieces")) {
        FundamentalPiece p;
        p.sign = pj.at("sign").get<double>();
        p.q = pj.at("q").get<double>();
        p.gamma = pj.at("gamma").get<double>();
        auto c = pj.at("coeffs").get<std::vector<double>>();
        if (c.size() != 6) throw Error(ErrorCode::BAD_INPUT, "coeffs must have 6 entries");
        std::copy(c.begin(), c.end(), p.coeffs.begin());
        p.h = pj.at("h").get<double>();
        d.pieces.push_back(p);
    }
    d.norm = j.value("norm", 1.0);
    d.scale = j.value("scale", 1.0);
    if (j.contains("meta")) {
        d.solid = j["meta"].value("solid", "");
        d.config = j["meta"].value("config", "");
    }
    return d;
}

}  // namespace meandist::irreducible
