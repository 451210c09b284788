#include "capnet/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace capnet {

namespace {

json vec(Vec2 v) { return json::array({v.x, v.y}); }
json vec(Vec3 v) { return json::array({v.x, v.y, v.z}); }

Vec2 vec2(const json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

json to_json(const CurveSpec& spec) {
    return {{"nx", spec.nx}, {"ny", spec.ny}, {"cx", spec.cx}, {"cy", spec.cy}};
}

CurveSpec curve_spec_from_json(const json& j) {
    CurveSpec spec = guarded("curve spec", [&] {
        return CurveSpec{j.at("nx").get<int>(), j.at("ny").get<int>(), j.at("cx").get<std::vector<double>>(),
                         j.at("cy").get<std::vector<double>>()};
    });
    validate_curve_spec(spec);
    return spec;
}

json to_json(const CapModel& cap) {
    json rows = json::array();
    for (int y = 1; y <= cap.ny(); ++y) {
        json row = json::array();
        for (int x = 1; x <= cap.nx(); ++x) row.push_back(cap.z(x, y));
        rows.push_back(row);
    }
    json vertices = json::array();
    for (int y = 1; y <= cap.ny(); ++y)
        for (int x = 1; x <= cap.nx(); ++x) vertices.push_back(vec(cap.vertex(x, y)));
    json faces = json::array();
    for (const auto& q : cap.quads()) {
        int x = q.cell.x, y = q.cell.y;
        faces.push_back({cap.vertex_id(x, y), cap.vertex_id(x + 1, y), cap.vertex_id(x + 1, y + 1),
                         cap.vertex_id(x, y + 1)});
    }
    auto verdict = validate_convex_cap(cap);
    json violations = json::array();
    for (const auto& v : verdict.violations) violations.push_back(v.message);
    return {{"nx", cap.nx()},    {"ny", cap.ny()},       {"z", rows},
            {"vertices", vertices}, {"faces", faces}, {"warnings", verdict.warnings},
            {"violations", violations}};
}

CapModel cap_from_json(const json& j) {
    return guarded("cap", [&] {
        int nx = j.at("nx").get<int>();
        int ny = j.at("ny").get<int>();
        if (nx < 2 || ny < 2) throw FormatError("cap: nx and ny must be at least 2");
        const json& rows = j.at("z");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(ny)) {
            throw FormatError("cap: z must have ny rows");
        }
        std::vector<double> heights;
        for (const auto& row : rows) {
            auto r = row.get<std::vector<double>>();
            if (r.size() != static_cast<std::size_t>(nx)) throw FormatError("cap: each z row needs nx values");
            heights.insert(heights.end(), r.begin(), r.end());
        }
        return CapModel::from_heights(nx, ny, std::move(heights));
    });
}

json to_json(const PlanarLayout& layout) {
    json faces = json::array();
    for (const auto& f : layout.faces) {
        json verts = json::array();
        for (auto v : f.vertices) verts.push_back(vec(v));
        faces.push_back({{"id", f.id.str()}, {"vertices", verts}, {"vertexIds", f.vertex_ids}});
    }
    json folds = json::array();
    for (const auto& e : layout.folds) {
        folds.push_back({{"faceA", e.face_a}, {"edgeA", e.edge_a}, {"faceB", e.face_b}, {"edgeB", e.edge_b}});
    }
    json cuts = json::array();
    for (const auto& c : layout.cuts) cuts.push_back({{"face", c.face}, {"edge", c.edge}});
    json rays = json::array();
    for (const auto& r : layout.rays) {
        rays.push_back({{"origin", vec(r.ray.origin)},
                        {"direction", vec(r.ray.direction)},
                        {"vertexId", r.vertex_id},
                        {"feature", r.feature},
                        {"label", r.label}});
    }
    return {{"nx", layout.nx},
            {"ny", layout.ny},
            {"yMax", layout.y_max},
            {"anchorStrip", layout.anchor_strip},
            {"admission",
             {{"admitted", layout.admission.admitted},
              {"via", to_string(layout.admission.via)},
              {"detail", layout.admission.detail}}},
            {"faces", faces},
            {"folds", folds},
            {"cuts", cuts},
            {"rays", rays}};
}

PlanarLayout layout_from_json(const json& j) {
    return guarded("layout", [&] {
        PlanarLayout l;
        l.nx = j.at("nx").get<int>();
        l.ny = j.at("ny").get<int>();
        l.y_max = j.value("yMax", 1);
        l.anchor_strip = j.value("anchorStrip", 1);
        if (j.contains("admission")) {
            const auto& a = j["admission"];
            l.admission.admitted = a.value("admitted", false);
            l.admission.via = admitted_by_from_string(a.value("via", std::string("none")));
            l.admission.detail = a.value("detail", std::string());
        }
        for (const auto& f : j.at("faces")) {
            PlacedFace p;
            try {
                p.id = FaceId::parse(f.at("id").get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw FormatError(std::string("layout: ") + e.what());
            }
            for (const auto& v : f.at("vertices")) p.vertices.push_back(vec2(v));
            p.vertex_ids = f.at("vertexIds").get<std::vector<int>>();
            if (p.vertices.size() < 3 || p.vertex_ids.size() != p.vertices.size()) {
                throw FormatError("layout: face " + p.id.str() + " needs matching vertices and vertexIds");
            }
            l.faces.push_back(std::move(p));
        }
        auto check = [&](std::size_t face, std::size_t edge) {
            if (face >= l.faces.size() || edge >= l.faces[face].vertices.size()) {
                throw FormatError("layout: edge reference out of range");
            }
        };
        for (const auto& e : j.at("folds")) {
            FoldEdge f{e.at("faceA").get<std::size_t>(), e.at("edgeA").get<std::size_t>(),
                       e.at("faceB").get<std::size_t>(), e.at("edgeB").get<std::size_t>()};
            check(f.face_a, f.edge_a);
            check(f.face_b, f.edge_b);
            l.folds.push_back(f);
        }
        for (const auto& c : j.value("cuts", json::array())) {
            EdgeRef r{c.at("face").get<std::size_t>(), c.at("edge").get<std::size_t>()};
            check(r.face, r.edge);
            l.cuts.push_back(r);
        }
        for (const auto& r : j.value("rays", json::array())) {
            LayoutRay ray;
            ray.ray.origin = vec2(r.at("origin"));
            ray.ray.direction = vec2(r.at("direction"));
            if (!(norm(ray.ray.direction) > 0.0)) throw FormatError("layout: ray with zero direction");
            ray.vertex_id = r.value("vertexId", -1);
            ray.feature = r.value("feature", std::string());
            ray.label = r.value("label", std::string());
            l.rays.push_back(std::move(ray));
        }
        return l;
    });
}

namespace {

json violation_json(const FaceViolation& v) {
    return {{"a", v.a.str()}, {"b", v.b.str()}, {"kind", to_string(v.kind)}, {"witness", vec(v.witness)}};
}

FaceViolation violation_from(const json& j) {
    return {FaceId::parse(j.at("a").get<std::string>()), FaceId::parse(j.at("b").get<std::string>()),
            contact_kind_from_string(j.at("kind").get<std::string>()), vec2(j.at("witness"))};
}

}  // namespace

json to_json(const OverlapReport& report) {
    json pairs = json::array(), suspects = json::array(), rays = json::array();
    for (const auto& v : report.pairs) pairs.push_back(violation_json(v));
    for (const auto& v : report.suspects) suspects.push_back(violation_json(v));
    for (const auto& r : report.ray_violations) {
        rays.push_back({{"ray", r.ray}, {"other", r.other}, {"suspect", r.suspect}, {"witness", vec(r.witness)}});
    }
    return {{"certified", report.certified()},
            {"exitCode", report.exit_code()},
            {"pairs", pairs},
            {"suspects", suspects},
            {"rays", rays}};
}

OverlapReport report_from_json(const json& j) {
    return guarded("report", [&] {
        OverlapReport r;
        try {
            for (const auto& v : j.at("pairs")) r.pairs.push_back(violation_from(v));
            for (const auto& v : j.at("suspects")) r.suspects.push_back(violation_from(v));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("report: ") + e.what());
        }
        for (const auto& v : j.at("rays")) {
            r.ray_violations.push_back({v.at("ray").get<std::string>(), v.at("other").get<std::string>(),
                                        v.at("suspect").get<bool>(), vec2(v.at("witness"))});
        }
        return r;
    });
}

std::string obj_text(const CapModel& cap) {
    std::ostringstream out;
    out.precision(17);
    out << "# capnet " << cap.nx() << "x" << cap.ny() << "\n";
    for (int y = 1; y <= cap.ny(); ++y)
        for (int x = 1; x <= cap.nx(); ++x) {
            auto v = cap.vertex(x, y);
            out << "v " << v.x << ' ' << v.y << ' ' << v.z << "\n";
        }
    for (const auto& b : cap.base_corners()) out << "v " << b.x << ' ' << b.y << ' ' << b.z << "\n";
    for (const auto& f : cap.faces()) {
        out << "f";
        for (int id : f.vertex_ids) out << ' ' << id + 1;
        out << "\n";
    }
    return out.str();
}

void export_obj(const CapModel& cap, const std::filesystem::path& path) { write_text_file(path, obj_text(cap)); }

ObjMesh parse_obj(const std::string& text) {
    ObjMesh mesh;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) throw FormatError("obj line " + std::to_string(lineno) + ": bad vertex");
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<int> face;
            std::string tok;
            while (ls >> tok) {
                int idx = std::stoi(tok.substr(0, tok.find('/')));
                if (idx < 0) idx = static_cast<int>(mesh.vertices.size()) + idx + 1;
                if (idx < 1 || idx > static_cast<int>(mesh.vertices.size())) {
                    throw FormatError("obj line " + std::to_string(lineno) + ": vertex index out of range");
                }
                face.push_back(idx - 1);
            }
            if (face.size() < 3) throw FormatError("obj line " + std::to_string(lineno) + ": short face");
            mesh.faces.push_back(std::move(face));
        }
    }
    return mesh;
}

ObjMesh import_obj(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_obj(buf.str());
}

std::string render_svg(const PlanarLayout& layout, const RenderOptions& opts, const OverlapReport* report) {
    if (!(opts.scale > 0.0)) throw std::invalid_argument("render scale must be positive");
    constexpr double inf = std::numeric_limits<double>::infinity();
    Vec2 lo{inf, inf}, hi{-inf, -inf};
    auto grow = [&](Vec2 p) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    };
    for (const auto& f : layout.faces)
        for (auto v : f.vertices) grow(v);
    if (layout.faces.empty()) lo = hi = {0.0, 0.0};

    std::vector<Segment> rays;
    if (opts.show_rays) {
        double reach = 0.25 * distance(lo, hi) + 1.0;
        for (const auto& r : layout.rays) {
            Vec2 d = (1.0 / norm(r.ray.direction)) * r.ray.direction;
            rays.push_back({r.ray.origin, r.ray.origin + reach * d});
        }
        for (const auto& s : rays) grow(s.b);
    }

    std::set<FaceId> flagged;
    if (report) {
        for (const auto& v : report->pairs) flagged.insert({v.a, v.b});
        for (const auto& v : report->suspects) flagged.insert({v.a, v.b});
    }

    const double s = opts.scale, m = opts.margin;
    auto px = [&](Vec2 p) { return fmt(m + (p.x - lo.x) * s) + "," + fmt(m + (hi.y - p.y) * s); };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(2 * m + (hi.x - lo.x) * s)
        << "\" height=\"" << fmt(2 * m + (hi.y - lo.y) * s) << "\">\n";
    out << "<g stroke-linejoin=\"round\">\n";
    for (const auto& f : layout.faces) {
        const auto& pal = opts.palette;
        const std::string& fill = f.id.kind == FaceKind::Quad  ? pal.quad
                                  : f.id.kind == FaceKind::Base ? pal.base
                                                                : pal.side;
        bool bad = flagged.count(f.id) > 0;
        out << "<polygon data-face=\"" << f.id.str() << "\" points=\"";
        for (std::size_t i = 0; i < f.vertices.size(); ++i) out << (i ? " " : "") << px(f.vertices[i]);
        out << "\" fill=\"" << fill << "\" stroke=\"" << (bad ? pal.violation : pal.edge) << "\" stroke-width=\""
            << (bad ? "2.5" : "0.6") << "\"/>\n";
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        auto a = px(rays[i].a), b = px(rays[i].b);
        out << "<line data-ray=\"" << layout.rays[i].label << "\" x1=\"" << a.substr(0, a.find(',')) << "\" y1=\""
            << a.substr(a.find(',') + 1) << "\" x2=\"" << b.substr(0, b.find(',')) << "\" y2=\""
            << b.substr(b.find(',') + 1) << "\" stroke=\"" << opts.palette.ray
            << "\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

void export_svg(const PlanarLayout& layout, const RenderOptions& opts, const std::filesystem::path& path,
                const OverlapReport* report) {
    write_text_file(path, render_svg(layout, opts, report));
}

}  // namespace capnet
