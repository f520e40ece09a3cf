// Command-line front end: enumerate the two-ray-game tables, divisorial
// contractions, defects, the non-Fano blowup search and the genus-bound
// scan, diff them against the embedded golden data, and report a
// machine-readable verdict. Exit codes: 0 pass, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>
#include <iostream>

#include "tworay/cli.hpp"

namespace {

struct Args {
    std::string format = "md";
    bool no_geometric = false;
    bool no_curated = false;
    std::int64_t g_min = -1;
    std::int64_t g_max = -1;

    tworay::cli::GlobalOptions options() const {
        tworay::cli::GlobalOptions o;
        o.format = tworay::parse_format(format);
        o.no_geometric = no_geometric;
        o.no_curated = no_curated;
        if (g_min >= 0) o.g_min = g_min;
        if (g_max >= 0) o.g_max = g_max;
        return o;
    }
};

void add_global_flags(CLI::App* cmd, Args& args) {
    cmd->add_option("--format", args.format, "Output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    cmd->add_flag("--no-geometric", args.no_geometric,
                  "Disable the geometric prune rules (report the raw arithmetic superset)");
    cmd->add_flag("--no-curated", args.no_curated, "Disable the curated degree constraints");
    cmd->add_option("--g-min", args.g_min, "Lower end of the genus range");
    cmd->add_option("--g-max", args.g_max, "Upper end of the genus range");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-integer two-ray-game verification engine for Fano threefolds of "
                 "Picard rank one"};
    app.require_subcommand(1);

    Args args;
    std::string scenario;
    bool emit_golden = false;
    std::int64_t gbound_max = 40;
    int bounds_scale = 1;

    auto* tables = app.add_subcommand("tables", "Two-ray-game table for a scenario");
    tables->add_option("scenario", scenario, "point, conic or line")->required();
    tables->add_flag("--emit-golden", emit_golden, "Dump the embedded golden rows");
    add_global_flags(tables, args);

    auto* divcont = app.add_subcommand("divcont", "Divisorial-contraction solutions");
    divcont->add_option("scenario", scenario, "point, conic or line")->required();
    add_global_flags(divcont, args);

    auto* defect = app.add_subcommand("defect", "Flopping-curve defect check");
    defect->add_option("scenario", scenario, "point, conic or line")->required();
    add_global_flags(defect, args);

    auto* nonfano = app.add_subcommand("nonfano", "Non-Fano blowup search verdict");
    add_global_flags(nonfano, args);

    auto* gbound = app.add_subcommand("gbound", "Genus-bound scan over the conic scenario");
    gbound->add_option("--g-max", gbound_max, "Scan genus range up to this bound")
        ->check(CLI::Range(std::int64_t{13}, std::int64_t{100000}));
    gbound->add_option("--format", args.format, "Output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run every verification check");
    verify->add_option("--bounds-scale", bounds_scale, "Bound enlargement factor")
        ->check(CLI::Range(1, 8));
    verify->add_option("--format", args.format, "Output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return tworay::cli::kUsage;
    }

    using namespace tworay::cli;
    try {
        const GlobalOptions opts = args.options();
        if (tables->parsed()) return cmd_tables(parse_kind(scenario), opts, emit_golden, std::cout);
        if (divcont->parsed()) return cmd_divcont(parse_kind(scenario), opts, std::cout);
        if (defect->parsed()) return cmd_defect(parse_kind(scenario), opts, std::cout);
        if (nonfano->parsed()) return cmd_nonfano(opts, std::cout);
        if (gbound->parsed()) return cmd_gbound(gbound_max, opts, std::cout);
        if (verify->parsed()) return cmd_verify(bounds_scale, opts, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
