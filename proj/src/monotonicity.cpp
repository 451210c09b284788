#include "capnet/monotonicity.h"

#include "capnet/intersect.h"
#include "capnet/tolerance.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace capnet {

PlanarChain::PlanarChain(std::vector<Vec2> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw std::invalid_argument("planar chain needs at least two points");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (distance(points_[i], points_[i + 1]) == 0.0) {
            throw std::invalid_argument("planar chain has a zero-length segment at " + std::to_string(i));
        }
    }
}

std::vector<double> PlanarChain::turns() const {
    std::vector<double> out;
    for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
        out.push_back(signed_angle(points_[i] - points_[i - 1], points_[i + 1] - points_[i]));
    }
    return out;
}

std::vector<double> PlanarChain::joint_turns(Vec2 approach) const {
    std::vector<double> out{signed_angle(approach, points_[1] - points_[0])};
    auto rest = turns();
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

MonotoneVerdict is_radially_monotone(const PlanarChain& chain, std::size_t base) {
    if (chain.size() < 3) throw std::invalid_argument("radial monotonicity needs at least three points");
    if (base >= chain.size()) throw std::out_of_range("base vertex outside chain");
    const double eps = default_tolerance();
    for (std::size_t i = base + 1; i + 1 < chain.size(); ++i) {
        Vec2 back = chain[base] - chain[i];
        Vec2 fwd = chain[i + 1] - chain[i];
        if (dot(back, fwd) > eps * norm(back) * norm(fwd)) return {false, base, i};
    }
    return {};
}

MonotoneVerdict is_radially_monotone_all_bases(const PlanarChain& chain) {
    if (chain.size() < 3) throw std::invalid_argument("radial monotonicity needs at least three points");
    for (std::size_t base = 0; base + 2 < chain.size(); ++base) {
        if (auto v = is_radially_monotone(chain, base); !v) return v;
    }
    return {};
}

bool semicircle_test(const PlanarChain& chain) {
    Vec2 a = chain.points().front();
    Vec2 b = chain.points().back();
    double diameter = distance(a, b);
    if (diameter == 0.0) throw std::invalid_argument("semicircle test: chain endpoints coincide");
    Vec2 center = 0.5 * (a + b);
    double radius = 0.5 * diameter;
    double slack = default_tolerance() * std::max(1.0, radius);
    return std::all_of(chain.points().begin(), chain.points().end(),
                       [&](Vec2 p) { return distance(p, center) <= radius + slack; });
}

namespace {

int dominant_sign(const std::vector<double>& turns) {
    double best = 0.0;
    for (double t : turns) {
        if (std::abs(t) > std::abs(best)) best = t;
    }
    return best < 0.0 ? -1 : 1;
}

}  // namespace

ChainVerdict validate_straightening(const Straightening& s) {
    const auto& c = s.original;
    const auto& r = s.reconfigured;
    if (c.size() != r.size()) throw std::invalid_argument("straightening: chains differ in length");
    const double eps = default_tolerance();
    ChainVerdict v;
    if (distance(c[0], r[0]) > eps) v.violations.push_back({0, "chains do not share their first point"});
    for (std::size_t i = 0; i < c.segments(); ++i) {
        if (!tol::equal(c.segment_length(i), r.segment_length(i), eps)) {
            v.violations.push_back({i, "segment " + std::to_string(i) + " changes length"});
        }
    }
    auto tc = c.joint_turns(s.approach);
    auto tr = r.joint_turns(s.approach);
    const int sign = dominant_sign(tc);
    for (std::size_t k = 0; k < tc.size(); ++k) {
        double before = sign * tc[k];
        double after = sign * tr[k];
        if (before < -eps) {
            v.violations.push_back({k, "original chain is not convex at vertex " + std::to_string(k)});
        } else if (after < -eps) {
            v.violations.push_back({k, "angle at vertex " + std::to_string(k) + " opens past pi"});
        } else if (after > before + eps) {
            v.violations.push_back({k, "angle at vertex " + std::to_string(k) + " closes"});
        }
    }
    return v;
}

DisjointnessVerdict straightening_disjointness(const Straightening& s) {
    const double eps = default_tolerance();
    const auto& c = s.original;
    const auto& r = s.reconfigured;
    DisjointnessVerdict out;

    if (auto v = validate_straightening(s); !v.ok()) {
        out.unmet.push_back("not a valid straightening: " + v.violations.front().message);
    }
    auto tc = c.joint_turns(s.approach);
    auto tr = r.joint_turns(s.approach);
    const int sign = dominant_sign(tc);
    bool moved = false;
    for (std::size_t k = 0; k < tc.size(); ++k) moved = moved || sign * (tc[k] - tr[k]) > 1e-9;
    if (!moved) out.unmet.push_back("identity straightening (no joint opened)");
    if (c.size() >= 3) {
        if (auto m = is_radially_monotone(c, 0); !m) {
            out.unmet.push_back("original is not radially monotone at vertex " + std::to_string(*m.witness));
        }
    }
    Vec2 ex = (1.0 / norm(s.approach)) * s.approach;
    Vec2 ey = static_cast<double>(sign) * perp(ex);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Vec2 d = c[i] - c[0];
        if (dot(d, ex) < -eps || dot(d, ey) < -eps) {
            out.unmet.push_back("original leaves the positive quadrant at vertex " + std::to_string(i));
            break;
        }
    }

    const Vec2 o = c[0];
    for (std::size_t i = 0; i < c.segments(); ++i) {
        Segment a{c[i], c[i + 1]};
        for (std::size_t j = 0; j < r.segments(); ++j) {
            Segment b{r[j], r[j + 1]};
            Intersection hit = segments_intersect(a, b, eps);
            if (!hit) continue;
            if (hit.kind == Intersection::Kind::Point && distance(hit.first, o) <= eps) continue;
            out.intersects = true;
            out.witness = hit.first;
            out.original_segment = i;
            out.reconfigured_segment = j;
            return out;
        }
    }
    return out;
}

}  // namespace capnet
