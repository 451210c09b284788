#include "capnet/generators.h"
#include "capnet/overlap.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace capnet;

namespace {

PlacedFace square(FaceId id, Vec2 o, std::vector<int> ids) {
    return {id, {o, o + Vec2{1, 0}, o + Vec2{1, 1}, o + Vec2{0, 1}}, std::move(ids)};
}

CapModel cap_of(std::vector<double> cx, std::vector<double> cy) {
    int nx = static_cast<int>(cx.size()), ny = static_cast<int>(cy.size());
    return build_cap({nx, ny, std::move(cx), std::move(cy)});
}

PlanarLayout sharp_layout() {
    for (std::uint64_t seed = 0;; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.profile = Profile::Sharp;
        auto layout = assemble_layout(build_cap(gen_cap(cfg)));
        if (!certify_layout(layout).pairs.empty()) return layout;
    }
}

}  // namespace

TEST(FacesOverlap, DeclaredNeighbours) {
    auto a = square(FaceId::quad(1, 1), {0, 0}, {0, 1, 4, 3});
    auto b = square(FaceId::quad(2, 1), {1, 0}, {1, 2, 5, 4});
    FoldEdge fold{0, 1, 1, 3};
    EXPECT_EQ(faces_overlap(a, b, &fold).kind, ContactKind::Shared);
    EXPECT_EQ(faces_overlap(a, b).kind, ContactKind::Shared);
}

TEST(FacesOverlap, ShiftedInward) {
    auto a = square(FaceId::quad(1, 1), {0, 0}, {0, 1, 4, 3});
    auto b = square(FaceId::quad(2, 1), {0.5, 0}, {1, 2, 5, 4});
    auto c = faces_overlap(a, b);
    ASSERT_EQ(c.kind, ContactKind::Overlap);
    EXPECT_GT(c.witness.x, 0.5);
    EXPECT_LT(c.witness.x, 1.0);
}

TEST(FacesOverlap, TouchWithoutCommonFeature) {
    auto a = square(FaceId::quad(1, 1), {0, 0}, {0, 1, 4, 3});
    auto b = square(FaceId::quad(3, 3), {1, 1}, {10, 11, 12, 13});
    EXPECT_EQ(faces_overlap(a, b).kind, ContactKind::Touch);
    auto c = square(FaceId::quad(3, 3), {1, 0.5}, {10, 11, 12, 13});
    EXPECT_EQ(faces_overlap(a, c).kind, ContactKind::Touch);
}

TEST(FacesOverlap, SharedVertexOnly) {
    auto a = square(FaceId::quad(1, 1), {0, 0}, {0, 1, 4, 3});
    auto b = square(FaceId::quad(2, 2), {1, 1}, {4, 5, 8, 7});
    EXPECT_EQ(faces_overlap(a, b).kind, ContactKind::Shared);
}

TEST(FacesOverlap, SuspectBand) {
    auto a = square(FaceId::quad(1, 1), {0, 0}, {0, 1, 4, 3});
    auto b = square(FaceId::quad(3, 3), {1 + 5e-8, 0.2}, {10, 11, 12, 13});
    EXPECT_EQ(faces_overlap(a, b).kind, ContactKind::Suspect);
    auto far = square(FaceId::quad(3, 3), {1 + 1e-6, 0.2}, {10, 11, 12, 13});
    EXPECT_EQ(faces_overlap(a, far).kind, ContactKind::None);
}

TEST(FacesOverlap, RejectsBadPolygons) {
    auto a = square(FaceId::quad(1, 1), {0, 0}, {0, 1, 4, 3});
    PlacedFace cw{FaceId::quad(2, 1), {{0, 0}, {0, 1}, {1, 1}, {1, 0}}, {0, 1, 2, 3}};
    EXPECT_THROW(faces_overlap(a, cw), std::invalid_argument);
    PlacedFace dart{FaceId::quad(2, 1), {{0, 0}, {2, 0}, {1, 0.5}, {1, 2}}, {0, 1, 2, 3}};
    EXPECT_THROW(faces_overlap(a, dart), std::invalid_argument);
}

TEST(FacesOverlap, StripPairsNeverOverlap) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.nx = cfg.ny = 8;
        cfg.profile = Profile::Custom;
        cfg.max_turn_deg = 25;
        auto cap = build_cap(gen_cap(cfg));
        for (int y = 1; y < cap.ny(); ++y) {
            auto strip = unfold_strip(cap, y);
            for (std::size_t i = 0; i < strip.size(); ++i)
                for (std::size_t j = i + 1; j < strip.size(); ++j) {
                    auto k = faces_overlap(strip[i], strip[j]).kind;
                    EXPECT_TRUE(k == ContactKind::None || k == ContactKind::Shared) << to_string(k);
                }
        }
    }
}

TEST(Certify, FlatFourByFour) {
    auto r = certify_layout(extend_rays(assemble_layout(cap_of({1, 1, 1, 1}, {1, 1, 1, 1}))));
    EXPECT_TRUE(r.certified());
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Certify, SharpCapOverlapsAndIsOrderIndependent) {
    auto layout = sharp_layout();
    auto r = certify_layout(layout);
    EXPECT_EQ(r.exit_code(), 2);
    EXPECT_TRUE(std::is_sorted(r.pairs.begin(), r.pairs.end(),
                               [](const FaceViolation& a, const FaceViolation& b) {
                                   return std::tie(a.a, a.b) < std::tie(b.a, b.b);
                               }));

    // Reverse the face order and remap folds.
    PlanarLayout rev = layout;
    const std::size_t n = rev.faces.size();
    std::reverse(rev.faces.begin(), rev.faces.end());
    for (auto& f : rev.folds) {
        f.face_a = n - 1 - f.face_a;
        f.face_b = n - 1 - f.face_b;
    }
    rev.cuts = derive_cuts(rev.faces, rev.folds);
    auto r2 = certify_layout(rev);
    ASSERT_EQ(r.pairs.size(), r2.pairs.size());
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
        EXPECT_EQ(r.pairs[i].a, r2.pairs[i].a);
        EXPECT_EQ(r.pairs[i].b, r2.pairs[i].b);
        EXPECT_EQ(r.pairs[i].kind, r2.pairs[i].kind);
    }
}

TEST(Certify, SuspectOnlyExitCode) {
    OverlapReport r;
    r.suspects.push_back({FaceId::quad(1, 1), FaceId::quad(2, 2), ContactKind::Suspect, {}});
    EXPECT_FALSE(r.has_violations());
    EXPECT_EQ(r.exit_code(), 3);
    r.pairs.push_back({FaceId::quad(1, 1), FaceId::quad(2, 2), ContactKind::Overlap, {}});
    EXPECT_EQ(r.exit_code(), 2);
}

TEST(Certify, NearMissRayIsSuspect) {
    PlanarLayout l;
    l.faces.push_back(square(FaceId::quad(1, 1), {0, 0}, {0, 1, 4, 3}));
    l.faces.push_back(square(FaceId::quad(2, 1), {1, 0}, {1, 2, 5, 4}));
    l.folds.push_back({0, 1, 1, 3});
    EXPECT_TRUE(certify_layout(l).certified());
    l.rays.push_back({{{-1, -5e-8}, {1, 0}}, -1, "probe", "probe ray"});
    auto r = certify_layout(l);
    EXPECT_FALSE(r.has_violations());
    EXPECT_EQ(r.exit_code(), 3);
}

TEST(FoldTree, RejectsBrokenTrees) {
    auto layout = assemble_layout(cap_of({1, 1.2, 1.3}, {1, 1.1, 1.15}));
    EXPECT_NO_THROW(check_fold_tree(layout));
    auto missing = layout;
    missing.folds.pop_back();
    EXPECT_THROW(check_fold_tree(missing), std::invalid_argument);
    auto moved = layout;
    for (auto& p : moved.faces.back().vertices) p += Vec2{0.1, 0};
    EXPECT_THROW(check_fold_tree(moved), std::invalid_argument);
    auto cycle = layout;
    cycle.folds.back() = cycle.folds.front();
    EXPECT_THROW(check_fold_tree(cycle), std::invalid_argument);
}

TEST(Certify, CrossingRaysReported) {
    auto layout = assemble_layout(cap_of({1, 1, 1}, {1, 1, 1}));
    layout.rays.push_back({{{5, 5}, {1, 0}}, -1, "a", "ray a"});
    layout.rays.push_back({{{6, 4}, {0, 1}}, -1, "b", "ray b"});
    auto r = certify_layout(layout);
    ASSERT_FALSE(r.ray_violations.empty());
    EXPECT_EQ(r.exit_code(), 2);
}
