#include "capnet/commands.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace capnet;

namespace {

struct Sandbox {
    std::filesystem::path dir;
    std::ostringstream out, err;
    Streams io{out, err};

    Sandbox() {
        dir = std::filesystem::temp_directory_path() /
              ("capnet_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir);
    }
    ~Sandbox() { std::filesystem::remove_all(dir); }
    std::filesystem::path operator/(const std::string& name) const { return dir / name; }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
};

GenConfig gen(std::uint64_t seed, Profile p) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.profile = p;
    return cfg;
}

}  // namespace

TEST(Commands, BuildAndValidate) {
    Sandbox s;
    s.write("spec.json", R"({"nx":3,"ny":2,"cx":[0,1,1.5],"cy":[0,2]})");
    EXPECT_EQ(cmd_build(s / "spec.json", s / "cap.json", s.io), kExitOk);
    auto cap = read_json_file(s / "cap.json");
    EXPECT_DOUBLE_EQ(cap["z"][1][2].get<double>(), 3.5);
    EXPECT_NE(s.out.str().find("convex"), std::string::npos);
    EXPECT_EQ(cmd_validate(s / "cap.json", s.io), kExitOk);
}

TEST(Commands, MalformedInput) {
    Sandbox s;
    s.write("bad.json", "{ nx: ");
    EXPECT_EQ(cmd_build(s / "bad.json", s / "cap.json", s.io), kExitInput);
    EXPECT_FALSE(s.err.str().empty());
    s.write("mismatch.json", R"({"nx":2,"ny":2,"cx":[0,0],"cy":[1,0]})");
    EXPECT_EQ(cmd_build(s / "mismatch.json", std::nullopt, s.io), kExitInput);
    EXPECT_EQ(cmd_build(s / "missing.json", std::nullopt, s.io), kExitInput);
}

TEST(Commands, UnfoldFlat) {
    Sandbox s;
    s.write("flat.json", R"({"nx":3,"ny":3,"cx":[0,0,0],"cy":[0,0,0]})");
    UnfoldOptions o;
    o.output = s / "layout.json";
    o.svg = s / "net.svg";
    EXPECT_EQ(cmd_unfold(s / "flat.json", o, s.io), kExitOk);
    EXPECT_TRUE(std::filesystem::exists(s / "net.svg"));
    EXPECT_EQ(cmd_check(s / "layout.json", std::nullopt, s.io), kExitOk);
}

TEST(Commands, UnfoldRefusesAndOverrides) {
    Sandbox s;
    EXPECT_EQ(cmd_gen(gen(2, Profile::Sharp), s / "sharp.json", s.io), kExitOk);
    UnfoldOptions o;
    o.output = s / "layout.json";
    EXPECT_EQ(cmd_unfold(s / "sharp.json", o, s.io), kExitRefused);
    EXPECT_EQ(cmd_validate(s / "sharp.json", s.io), kExitRefused);
    o.allow_unadmitted = true;
    o.report = s / "report.json";
    o.svg = s / "net.svg";
    EXPECT_EQ(cmd_unfold(s / "sharp.json", o, s.io), kExitOverlap);
    auto report = read_json_file(s / "report.json");
    EXPECT_FALSE(report["pairs"].empty());
    EXPECT_EQ(cmd_check(s / "layout.json", s / "check.json", s.io), kExitOverlap);
    EXPECT_EQ(cmd_render(s / "layout.json", s / "again.svg", {}, s / "report.json", s.io), kExitOk);
}

TEST(Commands, UnfoldNonConvex) {
    Sandbox s;
    s.write("bowl.json", R"({"nx":3,"ny":2,"cx":[1,0,1],"cy":[1,1]})");
    EXPECT_EQ(cmd_unfold(s / "bowl.json", {}, s.io), kExitInput);
    EXPECT_EQ(cmd_validate(s / "bowl.json", s.io), kExitInput);
}

TEST(Commands, CheckSuspectOnly) {
    Sandbox s;
    // Two glued squares and a probe ray 5e-8 below their bottom edges.
    s.write("near.json", R"J({"nx":3,"ny":2,"faces":[
        {"id":"Q(1,1)","vertices":[[0,0],[1,0],[1,1],[0,1]],"vertexIds":[0,1,4,3]},
        {"id":"Q(2,1)","vertices":[[1,0],[2,0],[2,1],[1,1]],"vertexIds":[1,2,5,4]}],
      "folds":[{"faceA":0,"edgeA":1,"faceB":1,"edgeB":3}],
      "rays":[{"origin":[-1,-5e-8],"direction":[1,0],"vertexId":-1,"feature":"p","label":"probe"}]})J");
    EXPECT_EQ(cmd_check(s / "near.json", std::nullopt, s.io), kExitSuspect);
    s.write("broken.json", R"J({"nx":3,"ny":2,"faces":[
        {"id":"Q(1,1)","vertices":[[0,0],[1,0],[1,1],[0,1]],"vertexIds":[0,1,4,3]},
        {"id":"Q(2,1)","vertices":[[1,0],[2,0],[2,1],[1,1]],"vertexIds":[1,2,5,4]}],
      "folds":[]})J");
    EXPECT_EQ(cmd_check(s / "broken.json", std::nullopt, s.io), kExitInput);
}

TEST(Commands, GenToStdoutAndObj) {
    Sandbox s;
    EXPECT_EQ(cmd_gen(gen(1, Profile::Gentle), std::nullopt, s.io), kExitOk);
    auto spec = json::parse(s.out.str());
    EXPECT_EQ(spec["nx"], 16);
    s.write("spec.json", s.out.str());
    EXPECT_EQ(cmd_export_obj(s / "spec.json", s / "cap.obj", s.io), kExitOk);
    EXPECT_EQ(import_obj(s / "cap.obj").faces.size(), 15u * 15u + 5u);
}
