#include "quatop/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "quatop/errors.hpp"

namespace quatop::io {

namespace {

double require_number(const json& j, const char* what) {
    if (!j.is_number()) throw FormatError(std::string("expected number for ") + what);
    return j.get<double>();
}

}  // namespace

json quaternion_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw FormatError("quaternion must be a 4-array [w,x,y,z]");
    return {require_number(j[0], "quaternion"), require_number(j[1], "quaternion"),
            require_number(j[2], "quaternion"), require_number(j[3], "quaternion")};
}

json qmatrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t s = 0; s < m.dim(); ++s) row.push_back(quaternion_to_json(m.at(r, s)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"entries", std::move(rows)}};
}

QMatrix qmatrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw FormatError("QMatrix JSON must be {\"n\": int, \"entries\": [...]}");
    if (!j["n"].is_number_unsigned()) throw FormatError("\"n\" must be a non-negative integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const json& rows = j["entries"];
    if (!rows.is_array() || rows.size() != n)
        throw FormatError("\"entries\" must hold exactly n rows");
    QMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw FormatError("ragged row " + std::to_string(r));
        for (std::size_t s = 0; s < n; ++s) m.at(r, s) = quaternion_from_json(rows[r][s]);
    }
    return m;
}

namespace {

json axis_to_json(const UnitImaginary& m) {
    return json::array({m.x(), m.y(), m.z()});
}

UnitImaginary axis_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw FormatError("axis must be [x,y,z]");
    return UnitImaginary(require_number(j[0], "axis"), require_number(j[1], "axis"),
                         require_number(j[2], "axis"));
}

}  // namespace

json slice_matrix_to_json(const SliceMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t s = 0; s < m.dim(); ++s)
            row.push_back(json::array({m.a(r, s).real(), m.a(r, s).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"axis", axis_to_json(m.axis)}, {"entries", std::move(rows)}};
}

SliceMatrix slice_matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("axis") || !j.contains("entries"))
        throw FormatError("SliceMatrix JSON must hold n, axis, entries");
    const std::size_t n = j["n"].get<std::size_t>();
    SliceMatrix m;
    m.axis = axis_from_json(j["axis"]);
    m.a.resize(n, n);
    const json& rows = j["entries"];
    if (!rows.is_array() || rows.size() != n) throw FormatError("entries must hold n rows");
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw FormatError("ragged row " + std::to_string(r));
        for (std::size_t s = 0; s < n; ++s) {
            const json& e = rows[r][s];
            if (!e.is_array() || e.size() != 2)
                throw FormatError("slice entry must be [alpha,beta]");
            m.a(r, s) = {require_number(e[0], "entry"), require_number(e[1], "entry")};
        }
    }
    return m;
}

json spectrum_to_json(const SpectrumReport& rep) {
    json spheres = json::array();
    for (const EigenSphere& e : rep.spheres) {
        spheres.push_back(json{{"alpha", e.alpha},
                               {"beta", e.beta},
                               {"mult", e.multiplicity},
                               {"residual", e.residual}});
    }
    return json{{"axis", axis_to_json(rep.axis)},
                {"normal", rep.input_normal},
                {"spheres", std::move(spheres)}};
}

json curve_to_json(const Curve& c) {
    switch (c.kind) {
        case Curve::Kind::Segment:
            return json{{"kind", "segment"},
                        {"p0", json::array({c.p0[0], c.p0[1]})},
                        {"p1", json::array({c.p1[0], c.p1[1]})}};
        case Curve::Kind::CircularArc:
            return json{{"kind", "circular_arc"},
                        {"center", json::array({c.center[0], c.center[1]})},
                        {"radius", c.radius},
                        {"angle0", c.angle0},
                        {"angle1", c.angle1}};
        case Curve::Kind::Polyline: {
            json vs = json::array();
            for (const auto& v : c.vertices) vs.push_back(json::array({v[0], v[1]}));
            return json{{"kind", "polyline"}, {"vertices", std::move(vs)}};
        }
    }
    throw FormatError("unknown curve kind");
}

Curve curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw FormatError("curve needs a kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "segment") {
        return Curve::segment(require_number(j.at("p0")[0], "p0"),
                              require_number(j.at("p0")[1], "p0"),
                              require_number(j.at("p1")[0], "p1"),
                              require_number(j.at("p1")[1], "p1"));
    }
    if (kind == "circular_arc") {
        return Curve::circular_arc(require_number(j.at("center")[0], "center"),
                                   require_number(j.at("center")[1], "center"),
                                   require_number(j.at("radius"), "radius"),
                                   require_number(j.at("angle0"), "angle0"),
                                   require_number(j.at("angle1"), "angle1"));
    }
    if (kind == "polyline") {
        std::vector<std::array<double, 2>> vs;
        for (const json& v : j.at("vertices"))
            vs.push_back({require_number(v[0], "vertex"), require_number(v[1], "vertex")});
        return Curve::polyline(std::move(vs));
    }
    throw FormatError("unknown curve kind: " + kind);
}

json decomposition_to_json(const Decomposition& dec) {
    json d = json::array();
    for (const Quaternion& q : dec.d) d.push_back(quaternion_to_json(q));
    json out{{"epsilon", dec.epsilon},
             {"mode", dec.mode == DecompositionMode::OpNorm ? "op" : "hs"},
             {"U", qmatrix_to_json(dec.u)},
             {"d", std::move(d)},
             {"K", qmatrix_to_json(dec.k)},
             {"norms", json{{"op", dec.op_norm_k}, {"hs", dec.hs_norm_k}}},
             {"axis", axis_to_json(dec.axis)},
             {"levels", dec.levels}};
    if (dec.curve) out["curve"] = curve_to_json(*dec.curve);
    return out;
}

Decomposition decomposition_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("decomposition must be an object");
    Decomposition dec;
    dec.epsilon = require_number(j.at("epsilon"), "epsilon");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "op")
        dec.mode = DecompositionMode::OpNorm;
    else if (mode == "hs")
        dec.mode = DecompositionMode::Hs;
    else
        throw FormatError("mode must be \"op\" or \"hs\"");
    dec.u = qmatrix_from_json(j.at("U"));
    for (const json& q : j.at("d")) dec.d.push_back(quaternion_from_json(q));
    dec.k = qmatrix_from_json(j.at("K"));
    if (j.contains("norms")) {
        dec.op_norm_k = require_number(j["norms"].at("op"), "norms.op");
        dec.hs_norm_k = require_number(j["norms"].at("hs"), "norms.hs");
    }
    if (j.contains("axis")) dec.axis = axis_from_json(j["axis"]);
    if (j.contains("levels")) dec.levels = j["levels"].get<std::vector<int>>();
    if (j.contains("curve")) dec.curve = curve_from_json(j["curve"]);
    if (dec.d.size() != dec.u.dim() || dec.k.dim() != dec.u.dim())
        throw FormatError("decomposition dimensions disagree");
    return dec;
}

OpDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("diag"))
        throw FormatError("descriptor must hold a \"diag\" object");
    const json& diag = j["diag"];
    OpDescriptor desc;
    const std::string kind = diag.at("kind").get<std::string>();
    if (kind == "linear") {
        desc.diag_kind = OpDescriptor::DiagKind::Linear;
        desc.scale = diag.value("scale", 1.0);
        desc.offset = diag.value("offset", 0.0);
    } else if (kind == "circle_exp") {
        desc.diag_kind = OpDescriptor::DiagKind::CircleExp;
    } else if (kind == "values") {
        desc.diag_kind = OpDescriptor::DiagKind::Values;
        for (const json& q : diag.at("values")) desc.values.push_back(quaternion_from_json(q));
    } else {
        throw FormatError("unknown diag kind: " + kind);
    }
    if (j.contains("band") && !j["band"].is_null()) {
        OpDescriptor::Band band;
        band.offset = j["band"].value("offset", std::size_t{1});
        band.coeff = quaternion_from_json(j["band"].at("coeff"));
        band.decay = j["band"].value("decay", 2.0);
        if (band.offset == 0) throw FormatError("band offset must be >= 1");
        desc.band = band;
    }
    return desc;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

QMatrix load_qmatrix(const std::string& path) { return qmatrix_from_json(load_json(path)); }

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    out << text;
}

}  // namespace quatop::io
