#pragma once

#include "capnet/cap_model.h"
#include "capnet/overlap.h"
#include "capnet/unfolder.h"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace capnet {

using json = nlohmann::json;

/// Malformed or unreadable input file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
void write_json_file(const std::filesystem::path& path, const json& j);

json to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const json& j);

/// {nx, ny, z: rows y=1..ny, vertices: cap vertices [x,y,z], faces: cap quads
/// as vertex index lists, warnings}.  Reading uses nx, ny and z only.
json to_json(const CapModel& cap);
CapModel cap_from_json(const json& j);

json to_json(const PlanarLayout& layout);
PlanarLayout layout_from_json(const json& j);

json to_json(const OverlapReport& report);
OverlapReport report_from_json(const json& j);

struct ObjMesh {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;  // 0-based vertex indices
};

/// Cap vertices, then the four base corners; cap quads, base, then sides.
std::string obj_text(const CapModel& cap);
void export_obj(const CapModel& cap, const std::filesystem::path& path);
ObjMesh parse_obj(const std::string& text);
ObjMesh import_obj(const std::filesystem::path& path);

struct Palette {
    std::string quad = "#f3e2bf";
    std::string base = "#c9dcef";
    std::string side = "#d3ebcb";
    std::string edge = "#5a4a32";
    std::string ray = "#b03030";
    std::string violation = "#e0007a";
};

struct RenderOptions {
    double scale = 24.0;  // pixels per lattice unit
    bool show_rays = true;
    Palette palette;
    double margin = 16.0;  // pixels
};

/// Throws std::invalid_argument when scale <= 0.
std::string render_svg(const PlanarLayout& layout, const RenderOptions& opts = {},
                       const OverlapReport* report = nullptr);
void export_svg(const PlanarLayout& layout, const RenderOptions& opts, const std::filesystem::path& path,
                const OverlapReport* report = nullptr);

}  // namespace capnet
