#include "capnet/unfolder.h"

#include "capnet/monotonicity.h"
#include "capnet/tolerance.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace capnet {

std::string to_string(AdmittedBy via) {
    switch (via) {
        case AdmittedBy::None: return "none";
        case AdmittedBy::Semicircle: return "semicircle";
        case AdmittedBy::RadialMonotone: return "radially-monotone";
    }
    return "none";
}

AdmittedBy admitted_by_from_string(const std::string& s) {
    if (s == "semicircle") return AdmittedBy::Semicircle;
    if (s == "radially-monotone") return AdmittedBy::RadialMonotone;
    if (s == "none") return AdmittedBy::None;
    throw std::invalid_argument("unknown admission kind '" + s + "'");
}

std::size_t PlanarLayout::index_of(const FaceId& id) const {
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].id == id) return i;
    }
    throw std::out_of_range("face " + id.str() + " not in layout");
}

namespace {

std::size_t edge_between(const Face3& f, int from, int to) {
    const std::size_t n = f.vertex_ids.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (f.vertex_ids[i] == from && f.vertex_ids[(i + 1) % n] == to) return i;
    }
    throw std::logic_error("edge not found on face " + f.id.str());
}

/// Lay `face` flat with its edge `edge` (vertex edge -> edge+1) on from -> to.
PlacedFace place_face(const Face3& face, std::size_t edge, Vec2 from, Vec2 to) {
    auto flat = flatten_polygon(face.polygon, face.outward);
    const std::size_t n = flat.size();
    Rigid2 motion = Rigid2::from_segments(flat[edge], flat[(edge + 1) % n], from, to);
    PlacedFace out{face.id, {}, face.vertex_ids};
    out.vertices.reserve(n);
    for (Vec2 p : flat) out.vertices.push_back(motion.apply(p));
    return out;
}

void require_convex(const CapModel& cap) {
    if (auto v = validate_convex_cap(cap); !v.ok()) {
        throw std::domain_error("cap is not convex: " + v.violations.front().message);
    }
}

}  // namespace

std::vector<PlacedFace> unfold_strip(const CapModel& cap, int y) {
    if (y < 1 || y >= cap.ny()) {
        throw std::out_of_range("strip index " + std::to_string(y) + " outside [1, " +
                                std::to_string(cap.ny() - 1) + "]");
    }
    require_convex(cap);
    std::vector<PlacedFace> strip;
    strip.reserve(static_cast<std::size_t>(cap.nx() - 1));
    // Quad corners are a,b,c,d; the left edge d->a goes to (0,L)->(0,0).
    const Face3& first = cap.face(FaceId::quad(1, y));
    double bar = distance(first.polygon[3], first.polygon[0]);
    strip.push_back(place_face(first, 3, Vec2{0.0, bar}, Vec2{0.0, 0.0}));
    for (int x = 2; x < cap.nx(); ++x) {
        const PlacedFace& prev = strip.back();
        // Glue this quad's d->a onto the previous quad's c->b.
        strip.push_back(place_face(cap.face(FaceId::quad(x, y)), 3, prev.vertices[2], prev.vertices[1]));
    }
    return strip;
}

Admission admission_check(const CapModel& cap) {
    Admission out;
    if (auto v = validate_convex_cap(cap); !v.ok()) {
        out.detail = "cap is not convex";
        return out;
    }
    bool semicircle = true;
    for (Axis axis : {Axis::X, Axis::Y}) {
        PlanarChain c(chain(cap, axis, 1).in_plane());
        const char* name = axis == Axis::X ? "c_x(1)" : "c_y(1)";
        if (c.size() >= 3) {
            if (auto m = is_radially_monotone(c, 0); !m) {
                out.detail = std::string(name) + " is not radially monotone at vertex " + std::to_string(*m.witness + 1);
                return out;
            }
        }
        semicircle = semicircle && semicircle_test(c);
    }
    out.admitted = true;
    out.via = semicircle ? AdmittedBy::Semicircle : AdmittedBy::RadialMonotone;
    out.detail = semicircle ? "both boundary chains fit their semicircles"
                            : "both boundary chains are radially monotone";
    return out;
}

std::vector<EdgeRef> derive_cuts(const std::vector<PlacedFace>& faces, const std::vector<FoldEdge>& folds) {
    std::set<std::pair<std::size_t, std::size_t>> glued;
    for (const auto& f : folds) {
        glued.insert({f.face_a, f.edge_a});
        glued.insert({f.face_b, f.edge_b});
    }
    std::vector<EdgeRef> cuts;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t e = 0; e < faces[i].vertices.size(); ++e) {
            if (!glued.count({i, e})) cuts.push_back({i, e});
        }
    }
    return cuts;
}

PlanarLayout assemble_layout(const CapModel& cap) {
    require_convex(cap);
    const int nx = cap.nx(), ny = cap.ny();
    const double eps = default_tolerance();
    for (int y : {1, ny}) {
        for (int x : {1, nx}) {
            if (cap.z(x, y) - cap.base_z() <= eps) {
                throw std::domain_error("side faces need positive corner heights; z(" + std::to_string(x) + "," +
                                        std::to_string(y) + ") = " + std::to_string(cap.z(x, y)));
            }
        }
    }

    PlanarLayout layout;
    layout.nx = nx;
    layout.ny = ny;
    layout.y_max = y_max_index(cap);
    layout.anchor_strip = std::min(layout.y_max, ny - 1);
    layout.admission = admission_check(cap);

    std::vector<std::vector<PlacedFace>> strips(static_cast<std::size_t>(ny));
    for (int y = 1; y < ny; ++y) strips[static_cast<std::size_t>(y)] = unfold_strip(cap, y);

    // Each strip's first quad carries the spine: a->b below, d->c above.
    auto spine = [&](int y) -> PlacedFace& { return strips[static_cast<std::size_t>(y)].front(); };
    auto move_strip = [&](int y, const Rigid2& m) {
        for (auto& f : strips[static_cast<std::size_t>(y)]) {
            for (auto& p : f.vertices) p = m.apply(p);
        }
    };
    const int anchor = layout.anchor_strip;
    for (int y = anchor + 1; y < ny; ++y) {
        const PlacedFace& below = spine(y - 1);
        const PlacedFace& self = spine(y);
        move_strip(y, Rigid2::from_segments(self.vertices[0], self.vertices[1], below.vertices[3], below.vertices[2]));
    }
    for (int y = anchor - 1; y >= 1; --y) {
        const PlacedFace& above = spine(y + 1);
        const PlacedFace& self = spine(y);
        move_strip(y, Rigid2::from_segments(self.vertices[3], self.vertices[2], above.vertices[0], above.vertices[1]));
    }

    auto quad_index = [&](int x, int y) { return static_cast<std::size_t>((y - 1) * (nx - 1) + (x - 1)); };
    for (int y = 1; y < ny; ++y) {
        for (auto& f : strips[static_cast<std::size_t>(y)]) layout.faces.push_back(std::move(f));
    }
    for (int y = 1; y < ny; ++y) {
        for (int x = 1; x + 1 < nx; ++x) layout.folds.push_back({quad_index(x, y), 1, quad_index(x + 1, y), 3});
    }
    for (int y = 1; y + 1 < ny; ++y) layout.folds.push_back({quad_index(1, y), 2, quad_index(1, y + 1), 0});

    // Attach `face` along its edge from->to (vertex ids) to the placed face at
    // `host`, whose matching edge runs to->from.
    auto attach = [&](FaceKind kind, std::size_t host, int from, int to) {
        const Face3& face = cap.face(FaceId::of(kind));
        const PlacedFace& h = layout.faces[host];
        std::size_t n = h.vertex_ids.size();
        std::size_t host_edge = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (h.vertex_ids[i] == to && h.vertex_ids[(i + 1) % n] == from) host_edge = i;
        }
        if (host_edge == n) throw std::logic_error("attachment edge missing on " + h.id.str());
        std::size_t edge = edge_between(face, from, to);
        PlacedFace placed = place_face(face, edge, h.vertices[(host_edge + 1) % n], h.vertices[host_edge]);
        layout.faces.push_back(std::move(placed));
        layout.folds.push_back({host, host_edge, layout.faces.size() - 1, edge});
        return layout.faces.size() - 1;
    };

    // Base and S_x+ hang off S_x-, which hangs off the anchor strip's left edge.
    std::size_t anchor_quad = quad_index(1, anchor);
    // Faces are appended in CapModel order: base, S_x-, S_x+, S_y-, S_y+.  The
    // base is attached to S_x-, so place S_x- first and reorder afterwards.
    std::size_t sxm = attach(FaceKind::SideXMinus, anchor_quad, cap.vertex_id(1, anchor), cap.vertex_id(1, anchor + 1));
    std::size_t base = attach(FaceKind::Base, sxm, cap.base_vertex_id(0), cap.base_vertex_id(3));
    attach(FaceKind::SideXPlus, base, cap.base_vertex_id(1), cap.base_vertex_id(2));
    attach(FaceKind::SideYMinus, quad_index(1, 1), cap.vertex_id(2, 1), cap.vertex_id(1, 1));
    attach(FaceKind::SideYPlus, quad_index(1, ny - 1), cap.vertex_id(1, ny), cap.vertex_id(2, ny));

    // Swap S_x- and the base so the layout lists faces in CapModel order.
    std::swap(layout.faces[sxm], layout.faces[base]);
    for (auto& f : layout.folds) {
        for (std::size_t* idx : {&f.face_a, &f.face_b}) {
            if (*idx == sxm) *idx = base;
            else if (*idx == base) *idx = sxm;
        }
    }
    layout.cuts = derive_cuts(layout.faces, layout.folds);
    return layout;
}

PlanarLayout extend_rays(PlanarLayout layout) {
    layout.rays.clear();
    const int nx = layout.nx, ny = layout.ny;
    auto unit = [](Vec2 d) { return (1.0 / norm(d)) * d; };
    for (int y = 1; y < ny; ++y) {
        const PlacedFace& last = layout.faces[layout.index_of(FaceId::quad(nx - 1, y))];
        Vec2 dir = unit(last.vertices[1] - last.vertices[0]);
        std::string strip = "strip " + std::to_string(y);
        layout.rays.push_back({{last.vertices[1], dir}, last.vertex_ids[1], "x-tail:" + std::to_string(y),
                               strip + " lower tail"});
        layout.rays.push_back({{last.vertices[2], dir}, last.vertex_ids[2], "x-tail:" + std::to_string(y + 1),
                               strip + " upper tail"});
    }
    // Side polygons start with their two base corners: S_y- is
    // b0, b1, V(nx,1), ..., V(1,1) and S_y+ is b2, b3, V(1,ny), ..., V(nx,ny).
    for (FaceKind kind : {FaceKind::SideYMinus, FaceKind::SideYPlus}) {
        const PlacedFace& side = layout.faces[layout.index_of(FaceId::of(kind))];
        const auto& v = side.vertices;
        const std::size_t n = v.size();
        std::string name = FaceId::of(kind).str();
        layout.rays.push_back({{v[0], unit(v[0] - v[n - 1])}, side.vertex_ids[0], name + ":side0", name + " side ray 0"});
        layout.rays.push_back({{v[1], unit(v[1] - v[2])}, side.vertex_ids[1], name + ":side1", name + " side ray 1"});
    }
    return layout;
}

}  // namespace capnet
