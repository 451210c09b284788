#include "capnet/commands.h"

#include <exception>

namespace capnet {

namespace {

template <class F>
int run(Streams io, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

void emit(const json& j, const std::optional<Path>& output, Streams io) {
    if (output) {
        write_json_file(*output, j);
    } else {
        io.out << j.dump(2) << "\n";
    }
}

void summarize(const CapModel& cap, const Verdict& v, Streams io) {
    io.out << "cap " << cap.nx() << "x" << cap.ny() << ": " << cap.quads().size() << " quads, "
           << (v.ok() ? "convex" : "NOT convex") << "\n";
    for (const auto& m : v.violations) io.out << "  violation: " << m.message << "\n";
    for (const auto& w : v.warnings) io.out << "  warning: " << w << "\n";
}

void print_report(const OverlapReport& r, Streams io) {
    io.out << "faces: " << r.pairs.size() << " violating pairs, " << r.suspects.size() << " suspect; rays: "
           << r.ray_violations.size() << " issues\n";
    for (const auto& v : r.pairs) {
        io.out << "  " << to_string(v.kind) << " " << v.a.str() << " " << v.b.str() << " at (" << v.witness.x
               << ", " << v.witness.y << ")\n";
    }
    for (const auto& v : r.suspects) io.out << "  suspect " << v.a.str() << " " << v.b.str() << "\n";
    for (const auto& v : r.ray_violations) {
        io.out << "  " << (v.suspect ? "suspect ray " : "ray ") << v.ray << " vs " << v.other << "\n";
    }
    io.out << (r.certified() ? "certified" : "NOT certified") << "\n";
}

}  // namespace

CapModel load_cap(const Path& path) {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("z")) return cap_from_json(j);
    if (j.is_object() && j.contains("cx")) return build_cap(curve_spec_from_json(j));
    throw FormatError(path.string() + ": neither a cap nor a curve spec");
}

int cmd_gen(const GenConfig& cfg, const std::optional<Path>& output, Streams io) {
    return run(io, [&] {
        emit(to_json(gen_cap(cfg)), output, io);
        return kExitOk;
    });
}

int cmd_build(const Path& spec, const std::optional<Path>& output, Streams io) {
    return run(io, [&] {
        CapModel cap = build_cap(curve_spec_from_json(read_json_file(spec)));
        if (output) {
            write_json_file(*output, to_json(cap));
            summarize(cap, validate_convex_cap(cap), io);
        } else {
            io.out << to_json(cap).dump(2) << "\n";
            summarize(cap, validate_convex_cap(cap), {io.err, io.err});
        }
        return kExitOk;
    });
}

int cmd_validate(const Path& path, Streams io) {
    return run(io, [&] {
        CapModel cap = load_cap(path);
        Verdict v = validate_convex_cap(cap);
        summarize(cap, v, io);
        for (const auto& check : {check_parallelograms(cap), check_planarity(cap)}) {
            for (const auto& m : check.violations) io.out << "  violation: " << m.message << "\n";
        }
        if (!v.ok()) return kExitInput;
        io.out << "y_max row " << y_max_index(cap) << "\n";
        Admission a = admission_check(cap);
        io.out << "admission: " << (a.admitted ? "admitted via " + to_string(a.via) : "refused") << " ("
               << a.detail << ")\n";
        return a.admitted ? kExitOk : kExitRefused;
    });
}

int cmd_unfold(const Path& path, const UnfoldOptions& opts, Streams io) {
    return run(io, [&] {
        CapModel cap = load_cap(path);
        Verdict v = validate_convex_cap(cap);
        if (!v.ok()) {
            io.err << "error: cap is not convex: " << v.violations.front().message << "\n";
            return kExitInput;
        }
        PlanarLayout layout = assemble_layout(cap);
        if (!layout.admission.admitted && !opts.allow_unadmitted) {
            io.err << "refused: " << layout.admission.detail << " (pass --allow-unadmitted to unfold anyway)\n";
            return kExitRefused;
        }
        if (opts.rays) layout = extend_rays(std::move(layout));
        OverlapReport report = certify_layout(layout);
        if (opts.output) {
            write_json_file(*opts.output, to_json(layout));
        } else {
            io.out << to_json(layout).dump(2) << "\n";
        }
        if (opts.report) write_json_file(*opts.report, to_json(report));
        if (opts.svg) export_svg(layout, opts.render, *opts.svg, &report);
        print_report(report, opts.output ? io : Streams{io.err, io.err});
        return report.exit_code();
    });
}

int cmd_check(const Path& path, const std::optional<Path>& report_path, Streams io) {
    return run(io, [&] {
        PlanarLayout layout = layout_from_json(read_json_file(path));
        check_fold_tree(layout);
        OverlapReport report = certify_layout(layout);
        if (report_path) {
            write_json_file(*report_path, to_json(report));
            print_report(report, io);
        } else {
            io.out << to_json(report).dump(2) << "\n";
        }
        return report.exit_code();
    });
}

int cmd_render(const Path& path, const Path& svg, const RenderOptions& opts, const std::optional<Path>& report_path,
               Streams io) {
    return run(io, [&] {
        PlanarLayout layout = layout_from_json(read_json_file(path));
        std::optional<OverlapReport> report;
        if (report_path) report = report_from_json(read_json_file(*report_path));
        export_svg(layout, opts, svg, report ? &*report : nullptr);
        return kExitOk;
    });
}

int cmd_export_obj(const Path& path, const Path& output, Streams io) {
    return run(io, [&] {
        export_obj(load_cap(path), output);
        return kExitOk;
    });
}

}  // namespace capnet
