#pragma once

#include "capnet/unfolder.h"

#include <optional>
#include <string>
#include <vector>

namespace capnet {

/// Distances at or below `identify` are contacts; contacts not explained by a
/// shared vertex or edge of the polyhedron are violations.  Clearances in
/// (identify, suspect) are reported separately as suspect near-misses.
struct OverlapTolerance {
    double identify = 1e-9;
    double suspect = 1e-7;
};

enum class ContactKind {
    None,     // separated by more than the suspect band
    Shared,   // meet only along images of common vertices or edges
    Suspect,  // clearance inside the suspect band
    Touch,    // boundaries meet where the polyhedron has no common feature
    Overlap,  // interiors intersect
};

std::string to_string(ContactKind kind);
ContactKind contact_kind_from_string(const std::string& s);

struct FaceContact {
    ContactKind kind = ContactKind::None;
    Vec2 witness{};
};

/// Compares two placed convex faces.  `fold` names the glued edge when the
/// faces are neighbours in the net (face_a must refer to `a`).
/// Throws std::invalid_argument for a non-simple or non-convex polygon.
FaceContact faces_overlap(const PlacedFace& a, const PlacedFace& b, const FoldEdge* fold = nullptr,
                          const OverlapTolerance& tol = {});

struct FaceViolation {
    FaceId a;
    FaceId b;
    ContactKind kind = ContactKind::Overlap;
    Vec2 witness{};
};

struct RayViolation {
    std::string ray;
    std::string other;  // another ray's label or a face id
    bool suspect = false;
    Vec2 witness{};
};

struct OverlapReport {
    std::vector<FaceViolation> pairs;     // Overlap and Touch contacts
    std::vector<FaceViolation> suspects;  // near-misses
    std::vector<RayViolation> ray_violations;

    bool has_violations() const;
    bool certified() const { return pairs.empty() && suspects.empty() && ray_violations.empty(); }
    /// 0 certified, 2 overlap or touch, 3 suspect-only.
    int exit_code() const;
};

/// Checks that the folds form a spanning tree whose glued edges coincide.
/// Throws std::invalid_argument describing the first defect.
void check_fold_tree(const PlanarLayout& layout, double eps = 1e-9);

/// All-pairs face comparison plus ray/ray and ray/face checks.  Violations are
/// sorted by face id so the report does not depend on face order.
OverlapReport certify_layout(const PlanarLayout& layout, const OverlapTolerance& tol = {});

}  // namespace capnet
