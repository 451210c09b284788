#pragma once

#include "capnet/geometry.h"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace capnet {

/// Boundary heights of a lattice cap: cx[i] is the height over (i+1, 1) and
/// cy[j] the height over (1, j+1).  cx[0] and cy[0] both describe z(1,1).
struct CurveSpec {
    int nx = 0;
    int ny = 0;
    std::vector<double> cx;
    std::vector<double> cy;

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Throws std::invalid_argument when the spec is malformed.
void validate_curve_spec(const CurveSpec& spec);

enum class Axis { X, Y };

struct LatticeCell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticeCell&, const LatticeCell&) = default;
};

enum class FaceKind { Quad, Base, SideXMinus, SideXPlus, SideYMinus, SideYPlus };

/// Provenance of a face of the polyhedron.  Quads carry their lattice cell
/// (the lower-left corner); the base and side faces carry only their kind.
struct FaceId {
    FaceKind kind = FaceKind::Quad;
    int x = 0;
    int y = 0;

    static FaceId quad(int x, int y) { return {FaceKind::Quad, x, y}; }
    static FaceId of(FaceKind k) { return {k, 0, 0}; }

    std::string str() const;
    static FaceId parse(const std::string& s);

    friend auto operator<=>(const FaceId&, const FaceId&) = default;
};

/// A cap face over one lattice cell.  Corners a,b,c,d run counterclockwise seen
/// from above, starting at (x, y).  alpha is the angle at a (and c), beta at b (and d).
struct Quad {
    LatticeCell cell;
    std::array<Vec3, 4> corners;
    double alpha = 0.0;
    double beta = 0.0;
};

/// Any face of the polyhedron as a planar polygon, counterclockwise about its
/// outward normal, with global vertex ids.
struct Face3 {
    FaceId id;
    std::vector<Vec3> polygon;
    std::vector<int> vertex_ids;
    Vec3 outward;
};

/// The polyhedron over an nx x ny lattice: cap heights, quads, base and sides.
/// Lattice coordinates are 1-based.  The base lies at z = 0, or one unit below
/// the lowest cap vertex when some height is not positive, so every side face
/// has positive height (a flat cap at 0 becomes a unit slab).
class CapModel {
public:
    /// Heights in row-major order: heights[(y-1)*nx + (x-1)] = z(x, y).
    static CapModel from_heights(int nx, int ny, std::vector<double> heights);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double z(int x, int y) const { return heights_[index(x, y)]; }
    Vec3 vertex(int x, int y) const {
        return {static_cast<double>(x), static_cast<double>(y), z(x, y)};
    }
    int vertex_id(int x, int y) const { return static_cast<int>(index(x, y)); }
    const std::vector<double>& heights() const { return heights_; }

    /// Quads in row-major cell order, (nx-1)*(ny-1) of them.
    const std::vector<Quad>& quads() const { return quads_; }
    const Quad& quad(int x, int y) const {
        return quads_[static_cast<std::size_t>((y - 1) * (nx_ - 1) + (x - 1))];
    }

    double base_z() const { return base_z_; }
    /// Base corners over (1,1), (nx,1), (nx,ny), (1,ny) at z = base_z().
    const std::array<Vec3, 4>& base_corners() const { return base_corners_; }
    int base_vertex_id(int k) const { return nx_ * ny_ + k; }
    int vertex_count() const { return nx_ * ny_ + 4; }

    /// All faces: quads (row-major), then base, S_x-, S_x+, S_y-, S_y+.
    const std::vector<Face3>& faces() const { return faces_; }
    const Face3& face(const FaceId& id) const;

    double surface_area() const;

private:
    CapModel() = default;
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>((y - 1) * nx_ + (x - 1));
    }
    void derive();

    int nx_ = 0;
    int ny_ = 0;
    std::vector<double> heights_;
    std::vector<Quad> quads_;
    double base_z_ = 0.0;
    std::array<Vec3, 4> base_corners_{};
    std::vector<Face3> faces_;
};

/// An x-chain (fixed y, running in +x) or y-chain (fixed x, running in +y).
/// turns[k] is the signed turn at points[k+1] in the vertical plane, positive
/// when the chain bends downward as a cap does; interior[k] = pi - |turns[k]|.
struct Chain {
    Axis axis = Axis::X;
    int index = 1;
    std::vector<Vec3> points;
    std::vector<double> turns;
    std::vector<double> interior;

    /// Weakly convex in the cap sense: no turn below -tol.
    bool convex(double tol) const;
    /// Points as (h, z), h the running lattice coordinate.
    std::vector<Vec2> in_plane() const;
};

struct Violation {
    std::string message;
    int x = 0;
    int y = 0;
};

struct Verdict {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

/// Propagates z(x+1,y+1) = z(x+1,y) + z(x,y+1) - z(x,y) over the lattice.
CapModel build_cap(const CurveSpec& spec);

/// Throws std::out_of_range for an index outside the lattice.
Chain chain(const CapModel& cap, Axis axis, int index);

/// ok iff both boundary chains are weakly convex; warns on negative heights.
Verdict validate_convex_cap(const CapModel& cap);

/// Row index of the maximum height, identical for every column of a convex cap.
/// Plateaus resolve to the smallest index.  Throws std::domain_error when
/// columns disagree.
int y_max_index(const CapModel& cap);
int x_max_index(const CapModel& cap);

Verdict check_parallelograms(const CapModel& cap);

/// Each cell's four corners coplanar, relative to the largest height magnitude.
Verdict check_planarity(const CapModel& cap);

}  // namespace capnet
