#pragma once

#include "capnet/generators.h"
#include "capnet/io.h"

#include <filesystem>
#include <optional>
#include <ostream>

namespace capnet {

/// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitOverlap = 2;
inline constexpr int kExitSuspect = 3;
inline constexpr int kExitRefused = 4;

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

using Path = std::filesystem::path;

/// A cap file, or a curve spec file built on the fly.
CapModel load_cap(const Path& path);

int cmd_gen(const GenConfig& cfg, const std::optional<Path>& output, Streams io);
int cmd_build(const Path& spec, const std::optional<Path>& output, Streams io);
/// 0 for a valid admitted cap, 4 when valid but not admitted, 1 otherwise.
int cmd_validate(const Path& cap, Streams io);

struct UnfoldOptions {
    std::optional<Path> output;
    std::optional<Path> svg;
    std::optional<Path> report;
    bool rays = false;
    bool allow_unadmitted = false;
    RenderOptions render;
};
int cmd_unfold(const Path& cap, const UnfoldOptions& opts, Streams io);

int cmd_check(const Path& layout, const std::optional<Path>& report, Streams io);
int cmd_render(const Path& layout, const Path& svg, const RenderOptions& opts, const std::optional<Path>& report,
               Streams io);
int cmd_export_obj(const Path& cap, const Path& output, Streams io);

}  // namespace capnet
