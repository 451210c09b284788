#pragma once

// Closed-form corner angles of lattice quads meeting at a vertex placed at the
// origin.  Heights are measured relative to the origin's height: z1 over (1,0),
// z1p over (-1,0), z3 over (0,1), z3p over (0,-1).

namespace capnet {

/// Front edges of two side-by-side quads through the origin.
struct TwoQuadConfig {
    double z1p = 0.0;
    double z1 = 0.0;

    /// The front chain (-1,z1p),(0,0),(1,z1) bends downward or is straight.
    bool convex() const { return z1 <= -z1p; }
};

/// Four quads around the origin: the pair above (toward +y, height z3) and the
/// pair below (toward -y, height z3p).
struct FourQuadConfig {
    TwoQuadConfig front;
    double z3 = 0.0;
    double z3p = 0.0;
};

struct FourQuadTurns {
    double tau = 0.0;   // unfolded turn of the upper pair
    double tau0 = 0.0;  // unfolded turn of the lower pair
};

/// Angle at the origin of the quad over [0,1]^2 with heights z1 over (1,0) and
/// z3 over (0,1): the angle between (1,0,z1) and (0,1,z3).
double quad_alpha(double z1, double z3);

/// Angle in the vertical plane at the origin between (-1, z1p) and (1, z1).
double vertical_theta(double z1p, double z1);

/// alpha + beta', the total angle at the origin of the two quads above the
/// front chain; equals pi at z3 = 0 and tends to theta / 2pi - theta as
/// z3 -> -inf / +inf.
double two_quad_sum(const TwoQuadConfig& cfg, double z3);

/// Angle at the origin of the two lower quads, computed directly from the edge
/// vectors (1,0,z1), (-1,0,z1p) and (0,-1,z3p).
double lower_pair_angle(const TwoQuadConfig& cfg, double z3p);

/// tau = A - pi for the upper pair and tau0 = pi - B for the lower pair, with
/// B = 2pi - two_quad_sum(front, -z3p).  Requires z3p < 0 and |z3p| >= z3;
/// throws std::domain_error otherwise.
FourQuadTurns four_quad_turns(const FourQuadConfig& cfg);

/// Grid of heights used by the monotonicity sweeps: -3.0, -2.9, ..., 3.0.
inline constexpr double kGridMin = -3.0;
inline constexpr double kGridStep = 0.1;
inline constexpr int kGridCount = 61;
inline double grid_value(int i) { return kGridMin + kGridStep * i; }

}  // namespace capnet
