#include "capnet/quad_angles.h"

#include "capnet/geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace capnet {

double quad_alpha(double z1, double z3) {
    double c = z1 * z3 / (std::sqrt(1.0 + z1 * z1) * std::sqrt(1.0 + z3 * z3));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double vertical_theta(double z1p, double z1) { return angle_between(Vec2{-1.0, z1p}, Vec2{1.0, z1}); }

double two_quad_sum(const TwoQuadConfig& cfg, double z3) {
    // The left quad's origin corner sees (-1,0,z1p) and (0,1,z3); the dot
    // product is z1p*z3, the same form as the right quad.
    return quad_alpha(cfg.z1, z3) + quad_alpha(cfg.z1p, z3);
}

double lower_pair_angle(const TwoQuadConfig& cfg, double z3p) {
    Vec3 down{0.0, -1.0, z3p};
    return angle_between(Vec3{1.0, 0.0, cfg.z1}, down) + angle_between(Vec3{-1.0, 0.0, cfg.z1p}, down);
}

FourQuadTurns four_quad_turns(const FourQuadConfig& cfg) {
    if (!(cfg.z3p < 0.0)) throw std::domain_error("four_quad_turns: middle lower edge must be uphill (z3p < 0)");
    if (std::abs(cfg.z3p) < cfg.z3) throw std::domain_error("four_quad_turns: convexity needs |z3p| >= z3");
    double a = two_quad_sum(cfg.front, cfg.z3);
    double b = 2.0 * kPi - two_quad_sum(cfg.front, -cfg.z3p);
    return {a - kPi, kPi - b};
}

}  // namespace capnet
