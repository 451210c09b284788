#pragma once

#include "capnet/cap_model.h"
#include "capnet/monotonicity.h"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace capnet {

enum class Profile { Flat, Gentle, Semicircle, Sharp, Custom };

std::string to_string(Profile p);
Profile profile_from_string(const std::string& s);

/// Random source for every generator: std::mt19937_64 seeded with the 64-bit
/// seed, doubles formed from the top 53 bits of each draw.  Both pieces are
/// fully specified by the C++ standard, so seeds reproduce across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finaliser, used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

struct GenConfig {
    std::uint64_t seed = 0;
    int nx = 16;
    int ny = 16;
    Profile profile = Profile::Gentle;
    double max_turn_deg = 15.0;
    /// Minimum downhill slope of the final segment for Profile::Sharp.
    std::optional<double> plummet;
};

/// Convex (downward-bending) height sequence starting at height 0.
///   flat:       all zeros
///   gentle:     total turn below 85 degrees, so it fits its semicircle
///   semicircle: lattice samples of a (possibly flattened) semicircular arc
///   sharp:      a rising run ending in a plummet that breaks radial monotonicity
///   custom:     turns up to max_turn_deg, total turn below 170 degrees
/// Throws std::invalid_argument for infeasible parameters.
std::vector<double> gen_convex_curve(const GenConfig& cfg, int length);

/// Two boundary curves sharing their corner, lifted so the lowest cap height is 1.
CurveSpec gen_cap(const GenConfig& cfg);

/// Opens each joint turn (the first measured from `approach`) by a uniform
/// random fraction of its gap to a straight angle, keeping segment lengths.
/// Throws std::invalid_argument for a non-convex chain.
Straightening gen_straightening(const PlanarChain& chain, std::uint64_t seed, Vec2 approach = {1.0, 0.0});

/// Deterministic variant: fractions[k] in [0,1] for each joint.
Straightening gen_straightening(const PlanarChain& chain, std::span<const double> fractions,
                                Vec2 approach = {1.0, 0.0});

/// A counterclockwise-turning chain from the origin with approach (1,0) that is
/// radially monotone from the origin and stays in the positive quadrant.
/// Total turning may reach max_total_turn_deg, so many samples leave their
/// semicircle.
PlanarChain gen_monotone_chain(std::uint64_t seed, int segments, double max_total_turn_deg = 150.0);

}  // namespace capnet
