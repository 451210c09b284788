#include "capnet/generators.h"

#include "capnet/geometry.h"
#include "capnet/tolerance.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace capnet {

std::string to_string(Profile p) {
    switch (p) {
        case Profile::Flat: return "flat";
        case Profile::Gentle: return "gentle";
        case Profile::Semicircle: return "semicircle";
        case Profile::Sharp: return "sharp";
        case Profile::Custom: return "custom";
    }
    return "custom";
}

Profile profile_from_string(const std::string& s) {
    for (auto p : {Profile::Flat, Profile::Gentle, Profile::Semicircle, Profile::Sharp, Profile::Custom}) {
        if (to_string(p) == s) return p;
    }
    throw std::invalid_argument("unknown profile '" + s + "'");
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

constexpr double kDeg = kPi / 180.0;

/// Heights from edge angles: z_0 = 0, z_{i+1} = z_i + tan(angle_i).
std::vector<double> integrate(const std::vector<double>& angles) {
    std::vector<double> z{0.0};
    for (double a : angles) z.push_back(z.back() + std::tan(a));
    return z;
}

/// Strictly decreasing edge angles: turns drawn in (0.2, 1] x bound, the first
/// angle placed so every angle stays within +-85 degrees.
std::vector<double> decreasing_angles(Rng& rng, int edges, double bound, double lo_first, double hi_first) {
    std::vector<double> turns;
    double total = 0.0;
    for (int i = 0; i + 1 < edges; ++i) {
        turns.push_back(bound * rng.uniform(0.2, 1.0));
        total += turns.back();
    }
    double lo = std::max(lo_first, total - 85.0 * kDeg);
    double hi = std::min(hi_first, 85.0 * kDeg);
    std::vector<double> angles{rng.uniform(lo, std::max(lo, hi))};
    for (double t : turns) angles.push_back(angles.back() - t);
    return angles;
}

}  // namespace

std::vector<double> gen_convex_curve(const GenConfig& cfg, int length) {
    if (length < 2) throw std::invalid_argument("curve length must be at least 2");
    if (!(cfg.max_turn_deg > 0.0 && cfg.max_turn_deg < 90.0)) {
        throw std::invalid_argument("max_turn_deg must lie in (0, 90)");
    }
    if (cfg.plummet && !(*cfg.plummet > 0.0 && std::isfinite(*cfg.plummet))) {
        throw std::invalid_argument("plummet must be a positive slope");
    }
    Rng rng(cfg.seed);
    const int edges = length - 1;
    const double max_turn = cfg.max_turn_deg * kDeg;
    switch (cfg.profile) {
        case Profile::Flat: return std::vector<double>(static_cast<std::size_t>(length), 0.0);

        case Profile::Gentle: {
            double bound = edges > 1 ? std::min(max_turn, 85.0 * kDeg / (edges - 1)) : 0.0;
            auto angles = decreasing_angles(rng, edges, bound, 0.0, 85.0 * kDeg);
            // Keep the peak inside the run: first angle no larger than the total turn.
            double total = angles.front() - angles.back();
            double shift = std::max(0.0, angles.front() - total * rng.uniform(0.3, 0.9));
            for (double& a : angles) a -= shift;
            return integrate(angles);
        }

        case Profile::Semicircle: {
            double radius = 0.5 * edges;
            double squash = rng.uniform(0.25, 1.0);
            std::vector<double> z;
            for (int h = 0; h < length; ++h) {
                double d = h - radius;
                z.push_back(squash * std::sqrt(std::max(0.0, radius * radius - d * d)));
            }
            z.front() = 0.0;
            z.back() = 0.0;
            return z;
        }

        case Profile::Sharp: {
            if (length < 3) throw std::invalid_argument("sharp profile needs at least 3 points");
            // Rising run with slopes between ~0.5 and ~3, then one steep drop.
            int rise = edges - 1;
            double bound = rise > 1 ? std::min(max_turn, 45.0 * kDeg / (rise - 1)) : 0.0;
            auto angles = decreasing_angles(rng, rise, bound, 60.0 * kDeg, 72.0 * kDeg);
            auto z = integrate(angles);
            double top = z.back();
            // Vertex `rise` fails the radial test from the start when
            // slope > rise / top; exceed that threshold comfortably.
            double needed = 2.0 * rise / top;
            double drop = std::max(cfg.plummet.value_or(needed), needed);
            z.push_back(top - drop);
            return z;
        }

        case Profile::Custom: {
            double bound = edges > 1 ? std::min(max_turn, 170.0 * kDeg / (edges - 1)) : 0.0;
            auto angles = decreasing_angles(rng, edges, bound, -85.0 * kDeg, 85.0 * kDeg);
            return integrate(angles);
        }
    }
    throw std::invalid_argument("unknown profile");
}

CurveSpec gen_cap(const GenConfig& cfg) {
    if (cfg.nx < 2 || cfg.ny < 2) throw std::invalid_argument("nx and ny must be at least 2");
    GenConfig gx = cfg, gy = cfg;
    gx.seed = mix_seed(cfg.seed, 1);
    gy.seed = mix_seed(cfg.seed, 2);
    auto cx = gen_convex_curve(gx, cfg.nx);
    auto cy = gen_convex_curve(gy, cfg.ny);
    double lift = 1.0 - *std::min_element(cx.begin(), cx.end()) - *std::min_element(cy.begin(), cy.end());
    for (double& v : cx) v += lift;
    for (double& v : cy) v += lift;
    cy.front() = cx.front();
    return {cfg.nx, cfg.ny, std::move(cx), std::move(cy)};
}

Straightening gen_straightening(const PlanarChain& chain, std::span<const double> fractions, Vec2 approach) {
    auto turns = chain.joint_turns(approach);
    if (fractions.size() != turns.size()) throw std::invalid_argument("one fraction per joint required");
    const double eps = default_tolerance();
    bool pos = std::any_of(turns.begin(), turns.end(), [&](double t) { return t > eps; });
    bool neg = std::any_of(turns.begin(), turns.end(), [&](double t) { return t < -eps; });
    if (pos && neg) throw std::invalid_argument("gen_straightening: chain is not convex");

    std::vector<Vec2> pts{chain[0]};
    Vec2 dir = (1.0 / norm(approach)) * approach;
    for (std::size_t k = 0; k < turns.size(); ++k) {
        double f = std::clamp(fractions[k], 0.0, 1.0);
        dir = rotate(dir, turns[k] * (1.0 - f));
        pts.push_back(pts.back() + chain.segment_length(k) * dir);
    }
    return {chain, PlanarChain(std::move(pts)), approach};
}

Straightening gen_straightening(const PlanarChain& chain, std::uint64_t seed, Vec2 approach) {
    Rng rng(seed);
    std::vector<double> fractions(chain.segments());
    for (double& f : fractions) f = rng.uniform();
    return gen_straightening(chain, fractions, approach);
}

PlanarChain gen_monotone_chain(std::uint64_t seed, int segments, double max_total_turn_deg) {
    if (segments < 1) throw std::invalid_argument("need at least one segment");
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        double budget = rng.uniform(0.1, 1.0) * max_total_turn_deg * kDeg;
        double first = rng.uniform(0.02, 0.3) * budget;
        // Half the samples put most of the turning right after a long first
        // segment; those are the ones that tend to leave their semicircle.
        bool hook = segments > 2 && rng.uniform() < 0.5;
        std::vector<double> weights;
        double total = 0.0;
        for (int i = 1; i < segments; ++i) {
            weights.push_back(-std::log(1.0 - rng.uniform()) * (hook && i == 1 ? 3.0 * segments : 1.0));
            total += weights.back();
        }
        std::vector<double> turns{first};
        for (double w : weights) turns.push_back(total > 0.0 ? (budget - first) * w / total : 0.0);

        std::vector<Vec2> pts{{0.0, 0.0}};
        double heading = 0.0;
        for (int i = 0; i < segments; ++i) {
            heading += turns[static_cast<std::size_t>(i)];
            double len = rng.uniform(0.5, 2.0) * (hook && i == 0 ? 3.0 : 1.0);
            pts.push_back(pts.back() + len * Vec2{std::cos(heading), std::sin(heading)});
        }
        bool quadrant = std::all_of(pts.begin(), pts.end(), [](Vec2 p) { return p.x >= 0.0 && p.y >= 0.0; });
        if (!quadrant) continue;
        PlanarChain c(std::move(pts));
        if (c.size() < 3 || is_radially_monotone(c, 0)) return c;
    }
    throw std::runtime_error("gen_monotone_chain: no admissible chain found");
}

}  // namespace capnet
