#include "capnet/overlap.h"

#include "capnet/intersect.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace capnet {

std::string to_string(ContactKind kind) {
    switch (kind) {
        case ContactKind::None: return "none";
        case ContactKind::Shared: return "shared";
        case ContactKind::Suspect: return "suspect";
        case ContactKind::Touch: return "touch";
        case ContactKind::Overlap: return "overlap";
    }
    return "none";
}

ContactKind contact_kind_from_string(const std::string& s) {
    for (auto k : {ContactKind::None, ContactKind::Shared, ContactKind::Suspect, ContactKind::Touch,
                   ContactKind::Overlap}) {
        if (to_string(k) == s) return k;
    }
    throw std::invalid_argument("unknown contact kind '" + s + "'");
}

namespace {

struct Box {
    double x0, y0, x1, y1;
};

Box bounds(const std::vector<Vec2>& pts) {
    Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const auto& p : pts) {
        b.x0 = std::min(b.x0, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.x1 = std::max(b.x1, p.x);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

bool boxes_near(const Box& a, const Box& b, double margin) {
    return a.x0 <= b.x1 + margin && b.x0 <= a.x1 + margin && a.y0 <= b.y1 + margin && b.y0 <= a.y1 + margin;
}

void require_convex_polygon(const PlacedFace& f, double eps) {
    const auto& v = f.vertices;
    const std::size_t n = v.size();
    if (n < 3) throw std::invalid_argument("face " + f.id.str() + " has fewer than three vertices");
    if (signed_area(v) <= 0.0) throw std::invalid_argument("face " + f.id.str() + " is not counterclockwise");
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e0 = v[(i + 1) % n] - v[i];
        Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
        if (norm(e0) <= eps) throw std::invalid_argument("face " + f.id.str() + " has a degenerate edge");
        if (cross(e0, e1) < -eps * norm(e0) * norm(e1)) {
            throw std::invalid_argument("face " + f.id.str() + " is not convex (or not simple)");
        }
    }
}

/// Largest separation along an edge normal of either polygon; negative when
/// the convex polygons overlap, with magnitude the penetration depth.
double separation(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    double best = -std::numeric_limits<double>::infinity();
    auto sweep = [&](const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
        for (std::size_t i = 0, n = p.size(); i < n; ++i) {
            Vec2 e = p[(i + 1) % n] - p[i];
            Vec2 out{e.y / norm(e), -e.x / norm(e)};
            double lo = std::numeric_limits<double>::infinity();
            for (const auto& v : q) lo = std::min(lo, dot(out, v - p[i]));
            best = std::max(best, lo);
        }
    };
    sweep(a, b);
    sweep(b, a);
    return best;
}

/// Intersection of two convex CCW polygons (Sutherland-Hodgman).
std::vector<Vec2> clip(const std::vector<Vec2>& subject, const std::vector<Vec2>& window) {
    std::vector<Vec2> out = subject;
    for (std::size_t i = 0, n = window.size(); i < n && !out.empty(); ++i) {
        Vec2 a = window[i], b = window[(i + 1) % n];
        auto inside = [&](Vec2 p) { return cross(b - a, p - a) >= 0.0; };
        std::vector<Vec2> in = std::move(out);
        out.clear();
        for (std::size_t k = 0, m = in.size(); k < m; ++k) {
            Vec2 p = in[k], q = in[(k + 1) % m];
            bool pi = inside(p), qi = inside(q);
            if (pi) out.push_back(p);
            if (pi != qi) {
                double dp = cross(b - a, p - a), dq = cross(b - a, q - a);
                out.push_back(p + (dp / (dp - dq)) * (q - p));
            }
        }
    }
    return out;
}

Vec2 centroid(const std::vector<Vec2>& pts) {
    Vec2 c{};
    for (const auto& p : pts) c += p;
    return (1.0 / static_cast<double>(pts.size())) * c;
}

bool shares_vertex_at(const PlacedFace& a, const PlacedFace& b, Vec2 p, double eps) {
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        if (distance(a.vertices[i], p) > eps) continue;
        for (std::size_t j = 0; j < b.vertices.size(); ++j) {
            if (b.vertex_ids[j] == a.vertex_ids[i] && distance(b.vertices[j], p) <= eps) return true;
        }
    }
    return false;
}

bool same_edge(const PlacedFace& a, std::size_t i, const PlacedFace& b, std::size_t j, double eps) {
    const std::size_t na = a.vertices.size(), nb = b.vertices.size();
    int a0 = a.vertex_ids[i], a1 = a.vertex_ids[(i + 1) % na];
    int b0 = b.vertex_ids[j], b1 = b.vertex_ids[(j + 1) % nb];
    Vec2 pa0 = a.vertices[i], pa1 = a.vertices[(i + 1) % na];
    Vec2 pb0 = b.vertices[j], pb1 = b.vertices[(j + 1) % nb];
    if (a0 == b0 && a1 == b1) return distance(pa0, pb0) <= eps && distance(pa1, pb1) <= eps;
    if (a0 == b1 && a1 == b0) return distance(pa0, pb1) <= eps && distance(pa1, pb0) <= eps;
    return false;
}

bool strictly_inside(Vec2 p, const std::vector<Vec2>& poly, double eps) {
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        Vec2 e = poly[(i + 1) % n] - poly[i];
        if (cross(e, p - poly[i]) <= eps * norm(e)) return false;
    }
    return true;
}

}  // namespace

FaceContact faces_overlap(const PlacedFace& a, const PlacedFace& b, const FoldEdge* fold,
                          const OverlapTolerance& tol) {
    require_convex_polygon(a, tol.identify);
    require_convex_polygon(b, tol.identify);
    if (!boxes_near(bounds(a.vertices), bounds(b.vertices), tol.suspect)) return {};

    double sep = separation(a.vertices, b.vertices);
    if (sep > tol.suspect) return {};
    if (sep < -tol.identify) {
        auto common = clip(a.vertices, b.vertices);
        return {ContactKind::Overlap, common.empty() ? a.vertices[0] : centroid(common)};
    }

    FaceContact result;
    auto raise = [&](ContactKind k, Vec2 w) {
        if (static_cast<int>(k) > static_cast<int>(result.kind)) result = {k, w};
    };
    const std::size_t na = a.vertices.size(), nb = b.vertices.size();
    for (std::size_t i = 0; i < na; ++i) {
        Segment ea{a.vertices[i], a.vertices[(i + 1) % na]};
        for (std::size_t j = 0; j < nb; ++j) {
            if (fold && fold->edge_a == i && fold->edge_b == j) {
                raise(ContactKind::Shared, ea.a);
                continue;
            }
            Segment eb{b.vertices[j], b.vertices[(j + 1) % nb]};
            Intersection hit = segments_intersect(ea, eb, tol.identify);
            if (!hit) {
                double d = piece_distance(LinearPiece::of(ea), LinearPiece::of(eb));
                if (d < tol.suspect) raise(ContactKind::Suspect, 0.5 * (ea.a + eb.a));
                continue;
            }
            if (hit.kind == Intersection::Kind::Overlap) {
                if (same_edge(a, i, b, j, tol.identify)) {
                    raise(ContactKind::Shared, hit.first);
                } else {
                    raise(ContactKind::Touch, 0.5 * (hit.first + hit.second));
                }
            } else if (shares_vertex_at(a, b, hit.first, tol.identify)) {
                raise(ContactKind::Shared, hit.first);
            } else {
                raise(ContactKind::Touch, hit.first);
            }
        }
    }
    return result;
}

bool OverlapReport::has_violations() const {
    return !pairs.empty() || std::any_of(ray_violations.begin(), ray_violations.end(),
                                         [](const RayViolation& r) { return !r.suspect; });
}

int OverlapReport::exit_code() const {
    if (has_violations()) return 2;
    if (!suspects.empty() || !ray_violations.empty()) return 3;
    return 0;
}

void check_fold_tree(const PlanarLayout& layout, double eps) {
    const std::size_t n = layout.faces.size();
    if (n == 0) throw std::invalid_argument("layout has no faces");
    if (layout.folds.size() + 1 != n) {
        throw std::invalid_argument("fold graph has " + std::to_string(layout.folds.size()) + " edges for " +
                                    std::to_string(n) + " faces; a spanning tree needs " + std::to_string(n - 1));
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& f : layout.folds) {
        if (f.face_a >= n || f.face_b >= n) throw std::invalid_argument("fold refers to a missing face");
        const auto& a = layout.faces[f.face_a];
        const auto& b = layout.faces[f.face_b];
        if (f.edge_a >= a.vertices.size() || f.edge_b >= b.vertices.size()) {
            throw std::invalid_argument("fold refers to a missing edge");
        }
        if (!same_edge(a, f.edge_a, b, f.edge_b, eps)) {
            throw std::invalid_argument("fold between " + a.id.str() + " and " + b.id.str() +
                                        " does not join a common edge");
        }
        std::size_t ra = find(f.face_a), rb = find(f.face_b);
        if (ra == rb) throw std::invalid_argument("fold graph has a cycle at " + a.id.str());
        parent[ra] = rb;
    }
}

OverlapReport certify_layout(const PlanarLayout& layout, const OverlapTolerance& tol) {
    check_fold_tree(layout, tol.identify);
    for (const auto& f : layout.faces) require_convex_polygon(f, tol.identify);
    OverlapReport report;
    const auto& faces = layout.faces;
    const std::size_t n = faces.size();

    std::vector<Box> boxes;
    boxes.reserve(n);
    for (const auto& f : faces) boxes.push_back(bounds(f.vertices));

    std::map<std::pair<std::size_t, std::size_t>, FoldEdge> glued;
    for (const auto& f : layout.folds) {
        if (f.face_a < f.face_b) {
            glued[{f.face_a, f.face_b}] = f;
        } else {
            glued[{f.face_b, f.face_a}] = {f.face_b, f.edge_b, f.face_a, f.edge_a};
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!boxes_near(boxes[i], boxes[j], tol.suspect)) continue;
            auto it = glued.find({i, j});
            const FoldEdge* fold = it == glued.end() ? nullptr : &it->second;
            FaceContact c = faces_overlap(faces[i], faces[j], fold, tol);
            FaceId a = faces[i].id, b = faces[j].id;
            if (b < a) std::swap(a, b);
            if (c.kind == ContactKind::Overlap || c.kind == ContactKind::Touch) {
                report.pairs.push_back({a, b, c.kind, c.witness});
            } else if (c.kind == ContactKind::Suspect) {
                report.suspects.push_back({a, b, c.kind, c.witness});
            }
        }
    }

    const auto& rays = layout.rays;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        LinearPiece ri = LinearPiece::of(rays[i].ray);
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            LinearPiece rj = LinearPiece::of(rays[j].ray);
            Intersection hit = intersect(ri, rj, tol.identify);
            if (!hit) {
                if (piece_distance(ri, rj) < tol.suspect) {
                    report.ray_violations.push_back({rays[i].label, rays[j].label, true, rays[i].ray.origin});
                }
                continue;
            }
            bool common_origin = rays[i].vertex_id == rays[j].vertex_id &&
                                 distance(rays[i].ray.origin, rays[j].ray.origin) <= tol.identify;
            bool same_feature = rays[i].feature == rays[j].feature && common_origin;
            bool explained = hit.kind == Intersection::Kind::Overlap
                                 ? same_feature
                                 : common_origin && distance(hit.first, rays[i].ray.origin) <= tol.identify;
            if (!explained) report.ray_violations.push_back({rays[i].label, rays[j].label, false, hit.first});
        }
        for (const auto& f : faces) {
            const std::size_t m = f.vertices.size();
            bool owns_origin = false;
            for (std::size_t k = 0; k < m; ++k) {
                owns_origin = owns_origin || (f.vertex_ids[k] == rays[i].vertex_id &&
                                              distance(f.vertices[k], rays[i].ray.origin) <= tol.identify);
            }
            std::optional<RayViolation> found;
            if (strictly_inside(rays[i].ray.origin, f.vertices, tol.identify)) {
                found = RayViolation{rays[i].label, f.id.str(), false, rays[i].ray.origin};
            }
            for (std::size_t k = 0; k < m && !found; ++k) {
                LinearPiece e = LinearPiece::of(Segment{f.vertices[k], f.vertices[(k + 1) % m]});
                Intersection hit = intersect(ri, e, tol.identify);
                if (!hit) {
                    if (!owns_origin && piece_distance(ri, e) < tol.suspect) {
                        found = RayViolation{rays[i].label, f.id.str(), true, rays[i].ray.origin};
                    }
                    continue;
                }
                bool at_origin = hit.kind == Intersection::Kind::Point &&
                                 distance(hit.first, rays[i].ray.origin) <= tol.identify;
                if (!(owns_origin && at_origin)) found = RayViolation{rays[i].label, f.id.str(), false, hit.first};
            }
            if (found) report.ray_violations.push_back(*found);
        }
    }

    auto by_ids = [](const FaceViolation& x, const FaceViolation& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    };
    std::sort(report.pairs.begin(), report.pairs.end(), by_ids);
    std::sort(report.suspects.begin(), report.suspects.end(), by_ids);
    std::sort(report.ray_violations.begin(), report.ray_violations.end(),
              [](const RayViolation& x, const RayViolation& y) {
                  return std::tie(x.ray, x.other) < std::tie(y.ray, y.other);
              });
    return report;
}

}  // namespace capnet
