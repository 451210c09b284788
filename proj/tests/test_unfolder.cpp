#include "capnet/generators.h"
#include "capnet/overlap.h"
#include "capnet/quad_angles.h"
#include "capnet/unfolder.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace capnet;

namespace {

CapModel cap_of(std::vector<double> cx, std::vector<double> cy) {
    int nx = static_cast<int>(cx.size()), ny = static_cast<int>(cy.size());
    return build_cap({nx, ny, std::move(cx), std::move(cy)});
}

CapModel generated(std::uint64_t seed, Profile p, int n = 16) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.nx = cfg.ny = n;
    cfg.profile = p;
    return build_cap(gen_cap(cfg));
}

// Lower boundary of a placed strip: corner a of every quad, then b of the last.
std::vector<Vec2> lower_boundary(const std::vector<PlacedFace>& strip) {
    std::vector<Vec2> pts;
    for (const auto& f : strip) pts.push_back(f.vertices[0]);
    pts.push_back(strip.back().vertices[1]);
    return pts;
}

void expect_congruent(const PlacedFace& placed, const Face3& face) {
    const std::size_t n = face.polygon.size();
    ASSERT_EQ(placed.vertices.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(distance(placed.vertices[i], placed.vertices[(i + 1) % n]),
                    distance(face.polygon[i], face.polygon[(i + 1) % n]), 1e-9);
        EXPECT_NEAR(distance(placed.vertices[i], placed.vertices[(i + 2) % n]),
                    distance(face.polygon[i], face.polygon[(i + 2) % n]), 1e-9);
    }
}

}  // namespace

TEST(UnfoldStrip, FlatRowOfSquares) {
    auto cap = cap_of({0, 0, 0, 0}, {0, 0, 0});
    auto strip = unfold_strip(cap, 1);
    ASSERT_EQ(strip.size(), 3u);
    for (std::size_t i = 0; i < strip.size(); ++i) {
        EXPECT_NEAR(strip[i].vertices[0].x, static_cast<double>(i), 1e-12);
        EXPECT_NEAR(strip[i].vertices[0].y, 0.0, 1e-12);
        EXPECT_NEAR(std::abs(signed_area(strip[i].vertices)), 1.0, 1e-12);
    }
    auto pts = lower_boundary(strip);
    PlanarChain c(pts);
    for (double t : c.turns()) EXPECT_NEAR(t, 0.0, 1e-12);
}

TEST(UnfoldStrip, LeftEdgeAlongY) {
    auto cap = cap_of({1, 2, 2.5}, {1, 1.5, 1.7});
    auto strip = unfold_strip(cap, 2);
    EXPECT_NEAR(norm(strip[0].vertices[0]), 0.0, 1e-15);
    EXPECT_NEAR(strip[0].vertices[3].x, 0.0, 1e-15);
    EXPECT_GT(strip[0].vertices[3].y, 0.0);
}

TEST(UnfoldStrip, Errors) {
    auto cap = cap_of({0, 0, 0}, {0, 0});
    EXPECT_THROW(unfold_strip(cap, 0), std::out_of_range);
    EXPECT_THROW(unfold_strip(cap, 2), std::out_of_range);
    EXPECT_THROW(unfold_strip(cap_of({1, 0, 1}, {1, 1}), 1), std::domain_error);
}

TEST(UnfoldStrip, TentTurnMatchesTwoQuadSum) {
    auto cap = cap_of({0, 1, 0}, {0, 0.5});
    auto strip = unfold_strip(cap, 1);
    PlanarChain lower(lower_boundary(strip));
    double z = cap.z(2, 1);
    TwoQuadConfig cfg{cap.z(1, 1) - z, cap.z(3, 1) - z};
    double expected = two_quad_sum(cfg, cap.z(2, 2) - z) - kPi;
    EXPECT_NEAR(-lower.turns()[0], expected, 1e-12);
    EXPECT_GT(std::abs(expected), 1e-3);
}

TEST(UnfoldStrip, TurnsBoundedByChainTurns) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto cap = generated(seed, seed % 2 ? Profile::Custom : Profile::Gentle, 8);
        for (int y = 1; y < cap.ny(); ++y) {
            auto strip = unfold_strip(cap, y);
            for (int x = 1; x < cap.nx(); ++x) {
                expect_congruent(strip[static_cast<std::size_t>(x - 1)], cap.face(FaceId::quad(x, y)));
            }
            auto chain3 = chain(cap, Axis::X, y);
            auto turns = PlanarChain(lower_boundary(strip)).turns();
            for (std::size_t k = 0; k < turns.size(); ++k) {
                EXPECT_LE(std::abs(turns[k]), std::abs(chain3.turns[k]) + 1e-9);
                int x = static_cast<int>(k) + 2;
                double z = cap.z(x, y);
                double sum = two_quad_sum({cap.z(x - 1, y) - z, cap.z(x + 1, y) - z}, cap.z(x, y + 1) - z);
                EXPECT_NEAR(-turns[k], sum - kPi, 1e-9);
            }
        }
    }
}

TEST(Admission, Examples) {
    auto flat = admission_check(cap_of({1, 1, 1}, {1, 1, 1}));
    EXPECT_TRUE(flat.admitted);
    EXPECT_EQ(flat.via, AdmittedBy::Semicircle);
    auto gentle = admission_check(generated(4, Profile::Gentle));
    EXPECT_TRUE(gentle.admitted);
    EXPECT_EQ(gentle.via, AdmittedBy::Semicircle);
    EXPECT_FALSE(admission_check(generated(4, Profile::Sharp)).admitted);
    EXPECT_FALSE(admission_check(cap_of({1, 0, 1}, {1, 1})).admitted);
}

TEST(Admission, MonotoneOutsideSemicircle) {
    auto a = admission_check(cap_of({3, 4.2, 4.8, 4.0, 2.6, 0.4}, {3, 3.5}));
    EXPECT_TRUE(a.admitted);
    EXPECT_EQ(a.via, AdmittedBy::RadialMonotone);
    EXPECT_EQ(admitted_by_from_string(to_string(a.via)), a.via);
}

TEST(Layout, FlatThreeByThree) {
    auto cap = cap_of({1, 1, 1}, {1, 1, 1});
    auto layout = assemble_layout(cap);
    EXPECT_EQ(layout.faces.size(), 4u + 5u);
    EXPECT_EQ(layout.folds.size(), layout.faces.size() - 1);
    EXPECT_EQ(layout.y_max, 1);
    EXPECT_EQ(layout.anchor_strip, 1);
    EXPECT_NO_THROW(check_fold_tree(layout));
    EXPECT_TRUE(certify_layout(layout).certified());
    for (std::size_t i = 0; i < cap.faces().size(); ++i) {
        EXPECT_EQ(layout.faces[i].id, cap.faces()[i].id);
        expect_congruent(layout.faces[i], cap.faces()[i]);
    }
}

TEST(Layout, FlatAtZeroIsSlab) {
    auto layout = assemble_layout(cap_of({0, 0, 0}, {0, 0, 0}));
    EXPECT_TRUE(certify_layout(layout).certified());
}

TEST(Layout, AnchorAtTopRow) {
    auto cap = cap_of({1, 1.5, 1.8}, {1, 2, 2.5, 2.7});
    auto layout = assemble_layout(cap);
    EXPECT_EQ(layout.y_max, 4);
    EXPECT_EQ(layout.anchor_strip, 3);
    EXPECT_TRUE(certify_layout(layout).certified());
}

TEST(Layout, AnchorStripSitsAtOrigin) {
    auto cap = generated(2, Profile::Gentle, 10);
    auto layout = assemble_layout(cap);
    const auto& q = layout.faces[layout.index_of(FaceId::quad(1, layout.anchor_strip))];
    EXPECT_NEAR(norm(q.vertices[0]), 0.0, 1e-12);
    EXPECT_NEAR(q.vertices[3].x, 0.0, 1e-12);
}

TEST(Layout, IsometricAndAreaPreserving) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto cap = generated(seed, Profile::Gentle, 12);
        auto layout = assemble_layout(cap);
        double placed = 0.0;
        for (std::size_t i = 0; i < layout.faces.size(); ++i) {
            expect_congruent(layout.faces[i], cap.face(layout.faces[i].id));
            placed += signed_area(layout.faces[i].vertices);
        }
        EXPECT_NEAR(placed / cap.surface_area(), 1.0, 1e-9);
        EXPECT_NO_THROW(check_fold_tree(layout));
        EXPECT_EQ(layout.cuts.size() + 2 * layout.folds.size(),
                  [&] {
                      std::size_t e = 0;
                      for (const auto& f : layout.faces) e += f.vertices.size();
                      return e;
                  }());
    }
}

TEST(Layout, FoldsJoinSameEdge) {
    auto cap = generated(1, Profile::Semicircle, 9);
    auto layout = assemble_layout(cap);
    for (const auto& f : layout.folds) {
        const auto& a = layout.faces[f.face_a];
        const auto& b = layout.faces[f.face_b];
        std::size_t na = a.vertices.size(), nb = b.vertices.size();
        EXPECT_EQ(a.vertex_ids[f.edge_a], b.vertex_ids[(f.edge_b + 1) % nb]);
        EXPECT_EQ(a.vertex_ids[(f.edge_a + 1) % na], b.vertex_ids[f.edge_b]);
        EXPECT_NEAR(distance(a.vertices[f.edge_a], b.vertices[(f.edge_b + 1) % nb]), 0.0, 1e-9);
    }
}

TEST(Layout, NonConvexRejected) {
    EXPECT_THROW(assemble_layout(cap_of({1, 0, 1}, {1, 1})), std::domain_error);
}

TEST(Rays, FlatRaysAreHorizontal) {
    auto layout = extend_rays(assemble_layout(cap_of({1, 1, 1, 1}, {1, 1, 1})));
    ASSERT_EQ(layout.rays.size(), 2u * 2u + 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(layout.rays[i].ray.direction.y, 0.0, 1e-12);
        EXPECT_NEAR(layout.rays[i].ray.direction.x, 1.0, 1e-12);
    }
    EXPECT_TRUE(certify_layout(layout).certified());
}
