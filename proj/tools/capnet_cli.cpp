#include "capnet/commands.h"
#include "capnet/tolerance.h"

#include <CLI11.hpp>

#include <iostream>

using namespace capnet;

int main(int argc, char** argv) {
    CLI::App app{"capnet: edge unfolding of lattice quadrilateral convex caps"};
    app.require_subcommand(1);
    std::optional<double> tolerance;
    app.add_option("--tolerance", tolerance, "Geometric tolerance (overrides CAPNET_TOLERANCE)")
        ->check(CLI::PositiveNumber);

    Streams io{std::cout, std::cerr};
    std::function<int()> action;

    GenConfig gen;
    std::string profile = "gentle";
    std::optional<double> plummet;
    std::optional<Path> gen_out;
    auto* g = app.add_subcommand("gen", "Generate a random curve spec");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--nx", gen.nx, "Lattice width")->check(CLI::Range(2, 4096));
    g->add_option("--ny", gen.ny, "Lattice height")->check(CLI::Range(2, 4096));
    g->add_option("--profile", profile, "flat|gentle|semicircle|sharp|custom")
        ->check(CLI::IsMember({"flat", "gentle", "semicircle", "sharp", "custom"}));
    g->add_option("--max-turn", gen.max_turn_deg, "Per-vertex turn bound in degrees");
    g->add_option("--plummet", plummet, "Minimum final downhill slope (sharp profile)");
    g->add_option("-o,--output", gen_out, "Output file (default stdout)");
    g->callback([&] {
        action = [&] {
            gen.profile = profile_from_string(profile);
            gen.plummet = plummet;
            return cmd_gen(gen, gen_out, io);
        };
    });

    Path input;
    std::optional<Path> output;
    auto* b = app.add_subcommand("build", "Propagate a curve spec into a full cap");
    b->add_option("spec", input, "Curve spec JSON")->required();
    b->add_option("-o,--output", output, "Cap JSON (default stdout)");
    b->callback([&] { action = [&] { return cmd_build(input, output, io); }; });

    auto* v = app.add_subcommand("validate", "Check convexity, face geometry and admission");
    v->add_option("cap", input, "Cap or curve spec JSON")->required();
    v->callback([&] { action = [&] { return cmd_validate(input, io); }; });

    UnfoldOptions unfold;
    std::optional<Path> svg;
    std::optional<Path> report;
    double scale = RenderOptions{}.scale;
    bool no_rays = false;
    auto* u = app.add_subcommand("unfold", "Lay out the net and certify it");
    u->add_option("cap", input, "Cap or curve spec JSON")->required();
    u->add_option("-o,--output", unfold.output, "Layout JSON (default stdout)");
    u->add_flag("--rays", unfold.rays, "Add separating rays at the strip ends and y-sides");
    u->add_flag("--allow-unadmitted", unfold.allow_unadmitted, "Unfold caps that fail admission");
    u->add_option("--svg", unfold.svg, "Also render the net");
    u->add_option("--report", unfold.report, "Write the overlap report JSON");
    u->add_option("--scale", scale, "Pixels per lattice unit")->check(CLI::PositiveNumber);
    u->callback([&] {
        action = [&] {
            unfold.render.scale = scale;
            return cmd_unfold(input, unfold, io);
        };
    });

    auto* c = app.add_subcommand("check", "Certify a layout");
    c->add_option("layout", input, "Layout JSON")->required();
    c->add_option("-o,--output", report, "Report JSON (default stdout)");
    c->callback([&] { action = [&] { return cmd_check(input, report, io); }; });

    auto* r = app.add_subcommand("render", "Render a layout as SVG");
    r->add_option("layout", input, "Layout JSON")->required();
    r->add_option("-o,--output", svg, "SVG file")->required();
    r->add_option("--report", report, "Report JSON whose violating faces are highlighted");
    r->add_option("--scale", scale, "Pixels per lattice unit")->check(CLI::PositiveNumber);
    r->add_flag("--no-rays", no_rays, "Omit rays");
    r->callback([&] {
        action = [&] {
            RenderOptions opts;
            opts.scale = scale;
            opts.show_rays = !no_rays;
            return cmd_render(input, *svg, opts, report, io);
        };
    });

    Path obj;
    auto* e = app.add_subcommand("export-obj", "Write the solid as an OBJ mesh");
    e->add_option("cap", input, "Cap or curve spec JSON")->required();
    e->add_option("-o,--output", obj, "OBJ file")->required();
    e->callback([&] { action = [&] { return cmd_export_obj(input, obj, io); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : kExitInput;
    }
    if (tolerance) set_default_tolerance(*tolerance);
    return action ? action() : kExitInput;
}
