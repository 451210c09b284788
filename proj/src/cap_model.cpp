#include "capnet/cap_model.h"

#include "capnet/tolerance.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace capnet {

std::string FaceId::str() const {
    switch (kind) {
        case FaceKind::Quad: return "Q(" + std::to_string(x) + "," + std::to_string(y) + ")";
        case FaceKind::Base: return "B";
        case FaceKind::SideXMinus: return "Sx-";
        case FaceKind::SideXPlus: return "Sx+";
        case FaceKind::SideYMinus: return "Sy-";
        case FaceKind::SideYPlus: return "Sy+";
    }
    return "?";
}

FaceId FaceId::parse(const std::string& s) {
    if (s == "B") return of(FaceKind::Base);
    if (s == "Sx-") return of(FaceKind::SideXMinus);
    if (s == "Sx+") return of(FaceKind::SideXPlus);
    if (s == "Sy-") return of(FaceKind::SideYMinus);
    if (s == "Sy+") return of(FaceKind::SideYPlus);
    int x = 0, y = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "Q(%d,%d%c", &x, &y, &tail) == 3 && tail == ')') return quad(x, y);
    throw std::invalid_argument("unknown face id '" + s + "'");
}

void validate_curve_spec(const CurveSpec& spec) {
    if (spec.nx < 2 || spec.ny < 2) {
        throw std::invalid_argument("nx and ny must be at least 2");
    }
    if (spec.cx.size() != static_cast<std::size_t>(spec.nx) ||
        spec.cy.size() != static_cast<std::size_t>(spec.ny)) {
        throw std::invalid_argument("cx must have nx entries and cy must have ny entries");
    }
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(spec.cx.begin(), spec.cx.end(), finite) ||
        !std::all_of(spec.cy.begin(), spec.cy.end(), finite)) {
        throw std::invalid_argument("heights must be finite");
    }
    if (!tol::equal(spec.cx[0], spec.cy[0])) {
        throw std::invalid_argument("cx[0] and cy[0] must agree (both are z(1,1))");
    }
}

CapModel CapModel::from_heights(int nx, int ny, std::vector<double> heights) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("lattice must be at least 2x2");
    if (heights.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)) {
        throw std::invalid_argument("height grid has wrong size");
    }
    for (double h : heights) {
        if (!std::isfinite(h)) throw std::invalid_argument("heights must be finite");
    }
    CapModel cap;
    cap.nx_ = nx;
    cap.ny_ = ny;
    cap.heights_ = std::move(heights);
    cap.derive();
    return cap;
}

void CapModel::derive() {
    const double fx = nx_, fy = ny_;
    const double lowest = *std::min_element(heights_.begin(), heights_.end());
    base_z_ = lowest > default_tolerance() ? 0.0 : lowest - 1.0;
    const double b = base_z_;
    base_corners_ = {Vec3{1, 1, b}, Vec3{fx, 1, b}, Vec3{fx, fy, b}, Vec3{1, fy, b}};

    quads_.clear();
    faces_.clear();
    quads_.reserve(static_cast<std::size_t>((nx_ - 1) * (ny_ - 1)));
    for (int y = 1; y < ny_; ++y) {
        for (int x = 1; x < nx_; ++x) {
            Quad q;
            q.cell = {x, y};
            q.corners = {vertex(x, y), vertex(x + 1, y), vertex(x + 1, y + 1), vertex(x, y + 1)};
            const auto& [a, b, c, d] = q.corners;
            q.alpha = angle_between(b - a, d - a);
            q.beta = angle_between(c - b, a - b);
            quads_.push_back(q);

            Face3 f;
            f.id = FaceId::quad(x, y);
            f.polygon.assign(q.corners.begin(), q.corners.end());
            f.vertex_ids = {vertex_id(x, y), vertex_id(x + 1, y), vertex_id(x + 1, y + 1),
                            vertex_id(x, y + 1)};
            f.outward = cross(b - a, d - a);
            faces_.push_back(std::move(f));
        }
    }

    const auto& bc = base_corners_;
    faces_.push_back({FaceId::of(FaceKind::Base),
                      {bc[0], bc[3], bc[2], bc[1]},
                      {base_vertex_id(0), base_vertex_id(3), base_vertex_id(2), base_vertex_id(1)},
                      {0, 0, -1}});

    auto side = [&](FaceKind kind, int b_first, int b_second, Vec3 outward, auto&& cap_points) {
        Face3 f;
        f.id = FaceId::of(kind);
        f.outward = outward;
        f.polygon = {bc[b_first], bc[b_second]};
        f.vertex_ids = {base_vertex_id(b_first), base_vertex_id(b_second)};
        for (auto [x, y] : cap_points) {
            f.polygon.push_back(vertex(x, y));
            f.vertex_ids.push_back(vertex_id(x, y));
        }
        faces_.push_back(std::move(f));
    };
    std::vector<std::pair<int, int>> pts;
    for (int y = 1; y <= ny_; ++y) pts.emplace_back(1, y);
    side(FaceKind::SideXMinus, 3, 0, {-1, 0, 0}, pts);
    pts.clear();
    for (int y = ny_; y >= 1; --y) pts.emplace_back(nx_, y);
    side(FaceKind::SideXPlus, 1, 2, {1, 0, 0}, pts);
    pts.clear();
    for (int x = nx_; x >= 1; --x) pts.emplace_back(x, 1);
    side(FaceKind::SideYMinus, 0, 1, {0, -1, 0}, pts);
    pts.clear();
    for (int x = 1; x <= nx_; ++x) pts.emplace_back(x, ny_);
    side(FaceKind::SideYPlus, 2, 3, {0, 1, 0}, pts);
}

const Face3& CapModel::face(const FaceId& id) const {
    const std::size_t quads = quads_.size();
    switch (id.kind) {
        case FaceKind::Quad:
            if (id.x < 1 || id.x >= nx_ || id.y < 1 || id.y >= ny_) {
                throw std::out_of_range("quad " + id.str() + " outside lattice");
            }
            return faces_[static_cast<std::size_t>((id.y - 1) * (nx_ - 1) + (id.x - 1))];
        case FaceKind::Base: return faces_[quads];
        case FaceKind::SideXMinus: return faces_[quads + 1];
        case FaceKind::SideXPlus: return faces_[quads + 2];
        case FaceKind::SideYMinus: return faces_[quads + 3];
        case FaceKind::SideYPlus: return faces_[quads + 4];
    }
    throw std::out_of_range("bad face id");
}

double CapModel::surface_area() const {
    double total = 0.0;
    for (const auto& f : faces_) total += polygon_area(f.polygon);
    return total;
}

CapModel build_cap(const CurveSpec& spec) {
    validate_curve_spec(spec);
    const int nx = spec.nx, ny = spec.ny;
    std::vector<double> z(static_cast<std::size_t>(nx * ny));
    auto at = [&](int x, int y) -> double& { return z[static_cast<std::size_t>((y - 1) * nx + (x - 1))]; };
    for (int x = 1; x <= nx; ++x) at(x, 1) = spec.cx[static_cast<std::size_t>(x - 1)];
    for (int y = 2; y <= ny; ++y) at(1, y) = spec.cy[static_cast<std::size_t>(y - 1)];
    for (int y = 1; y < ny; ++y) {
        for (int x = 1; x < nx; ++x) {
            at(x + 1, y + 1) = -at(x, y) + at(x + 1, y) + at(x, y + 1);
        }
    }
    return CapModel::from_heights(nx, ny, std::move(z));
}

bool Chain::convex(double tol) const {
    return std::all_of(turns.begin(), turns.end(), [tol](double t) { return t >= -tol; });
}

std::vector<Vec2> Chain::in_plane() const {
    std::vector<Vec2> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back({axis == Axis::X ? p.x : p.y, p.z});
    return out;
}

Chain chain(const CapModel& cap, Axis axis, int index) {
    const int limit = axis == Axis::X ? cap.ny() : cap.nx();
    if (index < 1 || index > limit) {
        throw std::out_of_range("chain index " + std::to_string(index) + " outside [1, " +
                                std::to_string(limit) + "]");
    }
    Chain c;
    c.axis = axis;
    c.index = index;
    const int len = axis == Axis::X ? cap.nx() : cap.ny();
    for (int k = 1; k <= len; ++k) {
        c.points.push_back(axis == Axis::X ? cap.vertex(k, index) : cap.vertex(index, k));
    }
    auto planar = c.in_plane();
    for (std::size_t k = 1; k + 1 < planar.size(); ++k) {
        // A cap bends clockwise in the (h, z) plane; report that as positive.
        double tau = -signed_angle(planar[k] - planar[k - 1], planar[k + 1] - planar[k]);
        c.turns.push_back(tau);
        c.interior.push_back(kPi - std::abs(tau));
    }
    return c;
}

Verdict validate_convex_cap(const CapModel& cap) {
    Verdict v;
    const double eps = default_tolerance();
    for (Axis axis : {Axis::X, Axis::Y}) {
        Chain c = chain(cap, axis, 1);
        for (std::size_t k = 0; k < c.turns.size(); ++k) {
            if (c.turns[k] < -eps) {
                int h = static_cast<int>(k) + 2;
                std::ostringstream msg;
                msg << (axis == Axis::X ? "x-chain c_x(1)" : "y-chain c_y(1)")
                    << " bends upward (turn " << c.turns[k] << " rad) at vertex " << h;
                v.violations.push_back({msg.str(), axis == Axis::X ? h : 1, axis == Axis::X ? 1 : h});
            }
        }
    }
    for (int y = 1; y <= cap.ny(); ++y) {
        for (int x = 1; x <= cap.nx(); ++x) {
            if (cap.z(x, y) < 0.0) {
                v.warnings.push_back("negative height at (" + std::to_string(x) + "," +
                                     std::to_string(y) + ")");
            }
        }
    }
    return v;
}

namespace {

int argmax_index(const CapModel& cap, Axis along) {
    const double eps = default_tolerance();
    const int outer = along == Axis::Y ? cap.nx() : cap.ny();
    const int inner = along == Axis::Y ? cap.ny() : cap.nx();
    auto height = [&](int o, int i) { return along == Axis::Y ? cap.z(o, i) : cap.z(i, o); };
    int common = 0;
    for (int o = 1; o <= outer; ++o) {
        double best = height(o, 1);
        for (int i = 2; i <= inner; ++i) best = std::max(best, height(o, i));
        int arg = 1;
        while (height(o, arg) < best - eps) ++arg;
        if (o == 1) {
            common = arg;
        } else if (arg != common) {
            throw std::domain_error("maximum-height index differs between lattice lines (" +
                                    std::to_string(common) + " vs " + std::to_string(arg) + ")");
        }
    }
    return common;
}

}  // namespace

int y_max_index(const CapModel& cap) { return argmax_index(cap, Axis::Y); }
int x_max_index(const CapModel& cap) { return argmax_index(cap, Axis::X); }

Verdict check_parallelograms(const CapModel& cap) {
    Verdict v;
    const double eps = default_tolerance();
    for (const Quad& q : cap.quads()) {
        const auto& [a, b, c, d] = q.corners;
        double ab = distance(a, b), dc = distance(d, c), bc = distance(b, c), ad = distance(a, d);
        if (!tol::equal(ab, dc, eps) || !tol::equal(bc, ad, eps)) {
            std::ostringstream msg;
            msg << "cell (" << q.cell.x << "," << q.cell.y << ") is not a parallelogram: |ab|=" << ab
                << " |dc|=" << dc << " |bc|=" << bc << " |ad|=" << ad;
            v.violations.push_back({msg.str(), q.cell.x, q.cell.y});
        }
    }
    return v;
}

Verdict check_planarity(const CapModel& cap) {
    Verdict v;
    double scale = 1.0;
    for (double h : cap.heights()) scale = std::max(scale, std::abs(h));
    const double eps = default_tolerance() * scale;
    for (int y = 1; y < cap.ny(); ++y) {
        for (int x = 1; x < cap.nx(); ++x) {
            double r = cap.z(x, y) - cap.z(x + 1, y) + cap.z(x + 1, y + 1) - cap.z(x, y + 1);
            if (std::abs(r) > eps) {
                v.violations.push_back({"cell corners not coplanar (residual " + std::to_string(r) + ")", x, y});
            }
        }
    }
    return v;
}

}  // namespace capnet
