#include "capnet/generators.h"
#include "capnet/monotonicity.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace capnet;

namespace {

PlanarChain arc(double radius, double from_deg, double to_deg, int n, Vec2 center = {0, 0}) {
    std::vector<Vec2> pts;
    for (int i = 0; i <= n; ++i) {
        double t = (from_deg + (to_deg - from_deg) * i / n) * kPi / 180.0;
        pts.push_back(center + radius * Vec2{std::cos(t), std::sin(t)});
    }
    return PlanarChain(pts);
}

PlanarChain reversed(const PlanarChain& c) {
    std::vector<Vec2> pts(c.points().rbegin(), c.points().rend());
    return PlanarChain(pts);
}

// Curve c2: not radially monotone at a, opened about o.
Straightening c2_straightening() {
    PlanarChain c2({{0, 0}, {1, 0}, {0.9, 0.3}});
    Vec2 approach = rotate({1, 0}, -kPi / 6);
    std::vector<double> fractions{0.5, 0.0};
    return gen_straightening(c2, fractions, approach);
}

}  // namespace

TEST(PlanarChain, Construction) {
    EXPECT_THROW(PlanarChain({{0, 0}}), std::invalid_argument);
    EXPECT_THROW(PlanarChain({{0, 0}, {1, 0}, {1, 0}}), std::invalid_argument);
    PlanarChain c({{0, 0}, {1, 0}, {1, 1}});
    ASSERT_EQ(c.turns().size(), 1u);
    EXPECT_NEAR(c.turns()[0], kPi / 2, 1e-15);
    auto j = c.joint_turns({1, 1});
    ASSERT_EQ(j.size(), 2u);
    EXPECT_NEAR(j[0], -kPi / 4, 1e-15);
}

TEST(RadialMonotone, Examples) {
    EXPECT_TRUE(is_radially_monotone(PlanarChain({{0, 0}, {1, 0}, {2, 0}, {3, 0}})));
    auto bad = is_radially_monotone(PlanarChain({{0, 0}, {1, 0}, {0.9, 0.3}}));
    EXPECT_FALSE(bad);
    ASSERT_TRUE(bad.witness);
    EXPECT_EQ(*bad.witness, 1u);
    EXPECT_TRUE(is_radially_monotone(arc(1.0, 180, 90, 8, {1, 0})));
    EXPECT_THROW(is_radially_monotone(PlanarChain({{0, 0}, {1, 0}})), std::invalid_argument);
}

TEST(RadialMonotone, AllBases) {
    EXPECT_TRUE(is_radially_monotone_all_bases(PlanarChain({{0, 0}, {1, 0}, {2, 0}, {3, 0}})));
    EXPECT_FALSE(is_radially_monotone_all_bases(PlanarChain({{0, 0}, {1, 0}, {0.9, 0.3}})));
    std::vector<Vec2> stairs{{0, 0}};
    double heading = 0;
    for (int i = 0; i < 10; ++i) {
        heading += 9.0 * kPi / 180.0;
        stairs.push_back(stairs.back() + Vec2{std::cos(heading), std::sin(heading)});
    }
    EXPECT_TRUE(is_radially_monotone_all_bases(PlanarChain(stairs)));
}

TEST(RadialMonotone, DistancesGrow) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto c = gen_monotone_chain(seed, 8);
        for (std::size_t i = 1; i < c.size(); ++i) EXPECT_GE(norm(c[i]), norm(c[i - 1]) - 1e-12);
    }
}

TEST(Semicircle, Examples) {
    EXPECT_TRUE(semicircle_test(PlanarChain({{0, 0}, {1, 0}, {2, 0}})));
    EXPECT_FALSE(semicircle_test(PlanarChain({{-1, 0}, {0, 1.01}, {1, 0}})));
    EXPECT_TRUE(semicircle_test(PlanarChain({{-1, 0}, {0, 1.0}, {1, 0}})));
    EXPECT_THROW(semicircle_test(PlanarChain({{0, 0}, {1, 1}, {0, 0}})), std::invalid_argument);
}

TEST(Semicircle, MonotoneYetOutside) {
    PlanarChain c({{0, 0}, {3, 0}, {3, 1}, {2.9, 1.5}});
    EXPECT_TRUE(is_radially_monotone(c));
    EXPECT_FALSE(semicircle_test(c));
}

TEST(Semicircle, ImpliesMonotoneFromBothEnds) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        // Sorted angles on the upper semicircle, each vertex pulled inward.
        int n = 3 + static_cast<int>(u(rng) * 8);
        std::vector<double> t;
        for (int i = 0; i < n; ++i) t.push_back(kPi * u(rng));
        std::sort(t.begin(), t.end(), std::greater<>());
        std::vector<Vec2> pts{{-1, 0}};
        for (double a : t) pts.push_back((0.5 + 0.5 * u(rng)) * Vec2{std::cos(a), std::sin(a)});
        pts.push_back({1, 0});
        PlanarChain c(pts);
        if (!semicircle_test(c)) continue;
        // Convexity is part of the sufficient condition.
        auto turns = c.turns();
        if (std::any_of(turns.begin(), turns.end(), [](double x) { return x > 0; })) continue;
        EXPECT_TRUE(is_radially_monotone(c, 0));
        EXPECT_TRUE(is_radially_monotone(reversed(c), 0));
    }
}

TEST(Straightening, Validation) {
    PlanarChain c({{0, 0}, {1, 0}, {1.5, 0.8}, {1.6, 1.8}});
    EXPECT_TRUE(validate_straightening({c, c}).ok());
    PlanarChain straight({{0, 0}, {1, 0}, {1 + std::sqrt(0.89), 0}, {1 + std::sqrt(0.89) + std::sqrt(1.01), 0}});
    EXPECT_TRUE(validate_straightening({c, straight}).ok());

    std::vector<double> none{0, 0, 0};
    auto closed = gen_straightening(c, none);
    std::vector<Vec2> pts = closed.reconfigured.points();
    Vec2 d = pts[3] - pts[2];
    pts[3] = pts[2] + rotate(d, 0.2);
    auto v = validate_straightening({c, PlanarChain(pts)});
    ASSERT_FALSE(v.ok());
    EXPECT_EQ(v.violations[0].vertex, 2u);

    EXPECT_THROW(validate_straightening({c, PlanarChain({{0, 0}, {1, 0}})}), std::invalid_argument);
}

TEST(Straightening, GeneratorEndpoints) {
    PlanarChain c({{0, 0}, {1, 0.2}, {1.5, 0.8}, {1.6, 1.8}});
    std::vector<double> zeros(3, 0.0), ones(3, 1.0);
    auto id = gen_straightening(c, zeros);
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(distance(id.reconfigured[i], c[i]), 0.0, 1e-12);
    auto full = gen_straightening(c, ones);
    for (double t : full.reconfigured.joint_turns({1, 0})) EXPECT_NEAR(t, 0.0, 1e-12);
    EXPECT_TRUE(validate_straightening(full).ok());
    EXPECT_THROW(gen_straightening(PlanarChain({{0, 0}, {1, 0}, {2, 1}, {3, 1}}), 1), std::invalid_argument);
}

TEST(Disjointness, IdentityIsExcluded) {
    PlanarChain c({{0, 0}, {1, 0.2}, {1.5, 0.8}});
    auto v = straightening_disjointness({c, c});
    EXPECT_FALSE(v.ok());
    ASSERT_FALSE(v.unmet.empty());
    EXPECT_NE(v.unmet[0].find("identity"), std::string::npos);
}

TEST(Disjointness, MonotoneChainOpenedAtOrigin) {
    PlanarChain c({{0, 0}, {1, 0.3}, {1.6, 1.2}, {1.7, 2.2}});
    std::vector<double> f{0.5, 0.0, 0.0};
    auto s = gen_straightening(c, f);
    auto v = straightening_disjointness(s);
    EXPECT_TRUE(v.unmet.empty());
    EXPECT_FALSE(v.intersects);
}

TEST(Disjointness, NonMonotoneChainCrosses) {
    auto s = c2_straightening();
    EXPECT_TRUE(validate_straightening(s).ok());
    auto v = straightening_disjointness(s);
    ASSERT_EQ(v.unmet.size(), 1u);
    EXPECT_NE(v.unmet[0].find("radially monotone"), std::string::npos);
    EXPECT_TRUE(v.intersects);
    ASSERT_TRUE(v.witness);
    EXPECT_GT(norm(*v.witness), 0.5);
}

TEST(Disjointness, RandomMonotonePairs) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto c = gen_monotone_chain(seed, 2 + static_cast<int>(seed % 11));
        auto s = gen_straightening(c, mix_seed(seed, 99));
        auto v = straightening_disjointness(s);
        EXPECT_TRUE(v.ok()) << "seed " << seed << (v.unmet.empty() ? "" : ": " + v.unmet[0]);
    }
}
