#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace capnet {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2, Vec2) = default;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(Vec3, Vec3) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 rotate(Vec2 a, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Vec3 a, Vec3 b) { return norm(b - a); }

/// Unsigned angle in [0, pi] between two vectors.
inline double angle_between(Vec2 a, Vec2 b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); }
inline double angle_between(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

/// Signed counterclockwise angle in (-pi, pi] turning from a to b.
inline double signed_angle(Vec2 a, Vec2 b) { return std::atan2(cross(a, b), dot(a, b)); }

/// Orientation-preserving isometry of the plane: p -> R p + t.
class Rigid2 {
public:
    Rigid2() = default;
    Rigid2(double angle, Vec2 translation)
        : c_(std::cos(angle)), s_(std::sin(angle)), t_(translation) {}

    /// The unique rigid motion taking src0 to dst0 and the direction src0->src1
    /// to the direction dst0->dst1.
    static Rigid2 from_segments(Vec2 src0, Vec2 src1, Vec2 dst0, Vec2 dst1);

    Vec2 apply(Vec2 p) const { return Vec2{c_ * p.x - s_ * p.y, s_ * p.x + c_ * p.y} + t_; }
    Vec2 apply_direction(Vec2 d) const { return {c_ * d.x - s_ * d.y, s_ * d.x + c_ * d.y}; }

private:
    double c_ = 1.0;
    double s_ = 0.0;
    Vec2 t_{};
};

/// Signed area, positive for counterclockwise polygons.
double signed_area(std::span<const Vec2> poly);

/// Newell normal of a (nearly) planar 3D polygon; its length is twice the area.
Vec3 newell_normal(std::span<const Vec3> poly);

double polygon_area(std::span<const Vec3> poly);

/// Isometric image of a planar 3D polygon in the plane.  Orientation is chosen
/// so that a polygon counterclockwise about `outward` maps to a counterclockwise
/// 2D polygon.  Vertex `i` lands at the origin and edge i->i+1 along +x.
std::vector<Vec2> flatten_polygon(std::span<const Vec3> poly, Vec3 outward, std::size_t i = 0);

}  // namespace capnet
