#pragma once

#include "capnet/cap_model.h"
#include "capnet/geometry.h"
#include "capnet/intersect.h"

#include <string>
#include <vector>

namespace capnet {

/// A face laid flat.  Vertices keep the order (and vertex ids) of the source
/// face, so edge e runs vertices[e] -> vertices[e+1] in both.
struct PlacedFace {
    FaceId id;
    std::vector<Vec2> vertices;
    std::vector<int> vertex_ids;
};

/// Two faces glued along an uncut edge: edge_a of face_a and edge_b of face_b
/// are the same 3D edge, traversed in opposite directions.
struct FoldEdge {
    std::size_t face_a = 0;
    std::size_t edge_a = 0;
    std::size_t face_b = 0;
    std::size_t edge_b = 0;
};

struct EdgeRef {
    std::size_t face = 0;
    std::size_t edge = 0;
};

/// A half-line added to separate pieces of the net.  `feature` names the 3D
/// extension the ray represents; two rays with the same feature are images of
/// the same extended edge and may coincide.
struct LayoutRay {
    Ray ray;
    int vertex_id = -1;
    std::string feature;
    std::string label;
};

enum class AdmittedBy { None, Semicircle, RadialMonotone };

struct Admission {
    bool admitted = false;
    AdmittedBy via = AdmittedBy::None;
    std::string detail;
};

std::string to_string(AdmittedBy via);
AdmittedBy admitted_by_from_string(const std::string& s);

struct PlanarLayout {
    int nx = 0;
    int ny = 0;
    int y_max = 1;
    int anchor_strip = 1;
    Admission admission;
    std::vector<PlacedFace> faces;
    std::vector<FoldEdge> folds;
    std::vector<EdgeRef> cuts;
    std::vector<LayoutRay> rays;

    std::size_t index_of(const FaceId& id) const;
};

/// The nx-1 quads of the strip between rows y and y+1, laid out with (1,y) at
/// the origin and the strip's left edge along +y.  Throws std::out_of_range for
/// a bad strip index and std::domain_error for a non-convex cap.
std::vector<PlacedFace> unfold_strip(const CapModel& cap, int y);

/// ok iff c_x(1) and c_y(1), seen in their vertical planes from their first
/// vertex, are radially monotone.  Records whether the semicircle condition
/// already suffices.
Admission admission_check(const CapModel& cap);

/// The full net: strips hung off the x=1..2 spine around the y_max strip, base
/// and x-sides attached at the anchor's left edge, y-sides at the spine ends.
/// Throws std::domain_error for a non-convex cap or a side face of zero height.
/// Unadmitted caps are still laid out, with the admission recorded.
PlanarLayout assemble_layout(const CapModel& cap);

/// Adds two rays at the free end of each strip, continuing its last boundary
/// edges, and one ray beyond each vertical side of S_y- and S_y+.
PlanarLayout extend_rays(PlanarLayout layout);

/// Cut edges implied by the fold list: every face edge not glued to another.
std::vector<EdgeRef> derive_cuts(const std::vector<PlacedFace>& faces, const std::vector<FoldEdge>& folds);

}  // namespace capnet
