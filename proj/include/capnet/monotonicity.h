#pragma once

#include "capnet/geometry.h"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace capnet {

/// A planar polyline p_0..p_m.  Construction rejects fewer than two points and
/// zero-length segments (std::invalid_argument).
class PlanarChain {
public:
    explicit PlanarChain(std::vector<Vec2> points);

    const std::vector<Vec2>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t segments() const { return points_.size() - 1; }
    const Vec2& operator[](std::size_t i) const { return points_[i]; }
    double segment_length(std::size_t i) const { return distance(points_[i], points_[i + 1]); }

    /// Signed counterclockwise turn at each interior vertex p_1..p_{m-1}.
    std::vector<double> turns() const;
    /// Turns at every joint p_0..p_{m-1}, where the joint at p_0 is measured
    /// from the incoming direction `approach`.
    std::vector<double> joint_turns(Vec2 approach) const;

private:
    std::vector<Vec2> points_;
};

struct MonotoneVerdict {
    bool monotone = true;
    std::optional<std::size_t> base;     // base vertex of the first failure
    std::optional<std::size_t> witness;  // vertex p_i where angle(p_base, p_i, p_i+1) < pi/2

    explicit operator bool() const { return monotone; }
};

/// angle(p_base, p_i, p_{i+1}) >= pi/2 for every i > base, tested through the
/// sign of (p_base - p_i).(p_{i+1} - p_i).  Needs at least three points.
MonotoneVerdict is_radially_monotone(const PlanarChain& chain, std::size_t base = 0);

/// The pairwise definition with every vertex taking the role of the base.
MonotoneVerdict is_radially_monotone_all_bases(const PlanarChain& chain);

/// Every vertex inside or on the circle whose diameter joins the endpoints.
/// Throws std::invalid_argument when the endpoints coincide.
bool semicircle_test(const PlanarChain& chain);

/// A length-preserving reconfiguration of `original` sharing its first point o.
/// `approach` is the direction of the fixed edge arriving at o, so the first
/// segment's angle is a joint like any other.
struct Straightening {
    PlanarChain original;
    PlanarChain reconfigured;
    Vec2 approach{1.0, 0.0};
};

struct JointViolation {
    std::size_t vertex = 0;
    std::string message;
};

struct ChainVerdict {
    std::vector<JointViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// ok iff lengths match, `original` is convex, and every joint turn of the
/// reconfiguration keeps the original's sign with no larger magnitude (the
/// interior angle opens toward pi without passing it).
/// Throws std::invalid_argument when the chains differ in point count.
ChainVerdict validate_straightening(const Straightening& s);

struct DisjointnessVerdict {
    std::vector<std::string> unmet;  // violated preconditions, empty when all hold
    bool intersects = false;
    std::optional<Vec2> witness;
    std::size_t original_segment = 0;
    std::size_t reconfigured_segment = 0;

    bool ok() const { return unmet.empty() && !intersects; }
};

/// Brute-force all-pairs check that the two chains share only o.  The
/// preconditions are a valid straightening with at least one joint opened by
/// more than 1e-9, and an original that is radially monotone from o and lies in
/// the quadrant spanned by `approach` and its perpendicular toward the turning
/// side.  Unmet preconditions are listed in the verdict; the intersection scan
/// runs regardless so counterexamples can be inspected.
DisjointnessVerdict straightening_disjointness(const Straightening& s);

}  // namespace capnet
