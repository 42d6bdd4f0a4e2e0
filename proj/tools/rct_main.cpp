// Command-line front end: validate / analyze / optimize / render /
// sweep-size / feasibility over library + floorplan documents.
//
// Exit codes: 0 clean, 1 model violation, 2 I/O or schema failure,
// 3 search guard exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "rct/report.hpp"
#include "rct/svg.hpp"

using namespace rct;

namespace {

struct Options {
    std::string library;
    std::string floorplan;
    std::string corner;
    std::string method;
    std::string objective;
    std::string window;
    std::string assignment;
    std::string out;
    std::string format = "text";
    std::uint64_t oracle_limit = 0;
    bool oracle_limit_set = false;
    // sweep-size
    std::string type_id;
    int rows = 1;
};

WindowSpec parse_window_spec(const std::string& text) {
    WindowSpec w;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> w.cols >> sep >> w.rows) || sep != 'x')
        throw SchemaError("--window: expected COLSxROWS[:SCxSR], got '" + text + "'");
    if (in.peek() == ':') {
        in.get();
        if (!(in >> w.stride_cols >> sep >> w.stride_rows) || sep != 'x')
            throw SchemaError("--window: expected COLSxROWS[:SCxSR], got '" + text + "'");
    }
    if (!in.eof() && in.peek() != EOF)
        throw SchemaError("--window: trailing characters in '" + text + "'");
    if (w.cols < 1 || w.rows < 1 || w.stride_cols < 1 || w.stride_rows < 1)
        throw SchemaError("--window: dimensions and strides must be >= 1");
    return w;
}

struct Loaded {
    BlockLibrary lib;
    Floorplan fp;
    RegionModel region;
    RctTopology topo;
};

Loaded load_inputs(const Options& opts) {
    Loaded in;
    in.lib = load_block_library_file(opts.library);
    in.fp = load_floorplan_file(opts.floorplan, in.lib);
    if (!opts.corner.empty()) {
        if (in.lib.corner_index(opts.corner) < 0)
            throw ModelError("--corner: unknown corner '" + opts.corner + "'");
        in.fp.corner_of_record = opts.corner;
    }
    if (!opts.window.empty()) {
        if (opts.window == "none")
            in.fp.window.reset();
        else if (opts.window == "all")
            in.fp.window = WindowSpec{in.fp.cols, in.fp.rows, 1, 1};
        else
            in.fp.window = parse_window_spec(opts.window);
    }
    in.region = build_region(in.fp, in.lib);
    in.topo = route_rct(in.region);
    return in;
}

void require_clean(const Loaded& in) {
    StructuralReport report = verify_topology(in.topo, in.region);
    if (!report.clean())
        throw ModelError("topology verification failed: " + report.violations.front().message);
}

void emit(const Options& opts, const std::string& text) {
    if (opts.out.empty())
        std::cout << text;
    else
        write_text_file(opts.out, text);
}

void emit_doc(const Options& opts, const Json& doc, const std::string& text_rendering) {
    if (opts.format == "json")
        emit(opts, doc.dump(2) + "\n");
    else if (opts.format == "text")
        emit(opts, text_rendering);
    else
        throw SchemaError("--format must be text or json");
}

TapAssignment assignment_from_file(const std::string& path, const RegionModel& region) {
    Json doc = load_json_file(path);
    const Json& indices = require_member(doc, "indices", "assignment");
    if (!indices.is_array() || static_cast<int>(indices.size()) != region.node_count())
        throw ModelError("assignment: expected " + std::to_string(region.node_count()) +
                         " tap indices");
    TapAssignment a;
    int m = region.tap_line.tap_count();
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (!indices[i].is_number_integer())
            throw SchemaError("assignment.indices[" + std::to_string(i) + "]: expected an integer");
        int idx = indices[i].get<int>();
        if (idx < 1 || idx > m)
            throw ModelError("assignment.indices[" + std::to_string(i) + "]: tap " +
                             std::to_string(idx) + " out of range 1.." + std::to_string(m));
        a.indices.push_back(idx);
    }
    return a;
}

// Objective actually in force for an optimize/analyze run.
std::string resolve_objective(const Options& opts, const RegionModel& region) {
    std::string objective = opts.objective;
    if (objective.empty())
        objective = region.floorplan.window ? "windowed" : "G";
    if (objective == "windowed" && !region.floorplan.window)
        throw SchemaError("--objective windowed needs a window (floorplan or --window)");
    return objective;
}

struct OptimizeOutcome {
    TapAssignment assignment;
    SearchStats stats;
    std::optional<Ratio> cost;
};

OptimizeOutcome run_method(const Loaded& in, const std::string& method,
                           const std::string& objective, const Options& opts) {
    const RegionModel& region = in.region;
    int corner = region.corner_of_record;
    DelayProfile profile = natural_delays(region, in.topo, corner);

    auto pair_set = [&]() -> PairSet {
        if (objective == "windowed")
            return window_pairs(region, *region.floorplan.window);
        return all_pairs(region.node_count());
    };

    OptimizeOutcome out;
    if (method == "local") {
        out.assignment = local_optimize(profile, region.tap_line, corner);
        ArrivalProfile arrivals = arrival_times(profile, region.tap_line, out.assignment, corner);
        out.cost = l_abs_mean(arrivals);
        out.stats = SearchStats{"local", static_cast<std::uint64_t>(region.node_count()) *
                                             static_cast<std::uint64_t>(
                                                 region.tap_line.tap_count())};
        return out;
    }
    if (method == "global") {
        if (objective == "L")
            throw SchemaError("--objective L is minimized by --method local (or oracle)");
        PrunedCandidates candidates = ideal_taps_and_prune(profile, region.tap_line, corner);
        GlobalSearchOptions options;
        options.sweep_order = column_sweep_order(region);
        OptimizeResult r =
            global_optimize(profile, region.tap_line, corner, candidates, pair_set(), options);
        out.assignment = r.assignment;
        out.cost = r.cost;
        out.stats = r.stats;
        return out;
    }
    if (method == "oracle") {
        if (!opts.oracle_limit_set)
            throw SchemaError("--method oracle requires an explicit --oracle-limit");
        Objective obj = objective == "L" ? Objective::l_abs_mean : Objective::g_abs_mean;
        OptimizeResult r = brute_force_oracle(profile, region.tap_line, corner, pair_set(), obj,
                                              opts.oracle_limit);
        out.assignment = r.assignment;
        out.cost = r.cost;
        out.stats = r.stats;
        return out;
    }
    throw SchemaError("--method: unknown value '" + method + "'");
}

int cmd_validate(const Options& opts) {
    StructuralReport report;
    try {
        Loaded in = load_inputs(opts);
        report = verify_topology(in.topo, in.region);
    } catch (const ModelError& e) {
        report.violations.push_back(StructuralViolation{"model", e.what()});
    }
    emit_doc(opts, validate_report(report), render_text_validate(report));
    return report.clean() ? 0 : 1;
}

int cmd_analyze(const Options& opts) {
    Loaded in = load_inputs(opts);
    require_clean(in);

    TapAssignment assignment;
    std::string method;
    if (!opts.assignment.empty()) {
        if (!opts.method.empty())
            throw SchemaError("--assignment and --method are mutually exclusive");
        assignment = assignment_from_file(opts.assignment, in.region);
        method = "file";
    } else {
        method = opts.method.empty() ? "local" : opts.method;
        if (method != "local" && method != "global")
            throw SchemaError("analyze --method must be local or global");
        std::string objective = resolve_objective(opts, in.region);
        assignment = run_method(in, method, objective, opts).assignment;
    }
    Analysis analysis = analyze(in.region, in.topo, assignment, method);
    emit_doc(opts, analyze_report(in.region, in.topo, analysis),
             render_text_analysis(in.region, analysis));
    return 0;
}

int cmd_optimize(const Options& opts) {
    Loaded in = load_inputs(opts);
    require_clean(in);

    std::string method = opts.method.empty() ? "global" : opts.method;
    std::string objective = resolve_objective(opts, in.region);
    OptimizeOutcome outcome = run_method(in, method, objective, opts);

    DelayProfile profile = natural_delays(in.region, in.topo, in.region.corner_of_record);
    PrunedCandidates candidates =
        ideal_taps_and_prune(profile, in.region.tap_line, in.region.corner_of_record);
    Analysis analysis = analyze(in.region, in.topo, outcome.assignment, method);
    Json doc = optimize_report(in.region, analysis, candidates, outcome.stats, outcome.cost);
    doc["objective"] = objective;

    if (method == "oracle") {
        // Side-by-side optimum of the full space, the pruned space and the
        // local recipe under the same objective.
        auto describe = [&](const TapAssignment& a, const Ratio& cost,
                            const SearchStats& stats) {
            Json j;
            j["assignment"] = a.indices;
            j["cost"] = ratio_to_json(cost);
            j["search_method"] = stats.method;
            return j;
        };
        Json comparison;
        comparison["oracle"] = describe(outcome.assignment, *outcome.cost, outcome.stats);

        OptimizeOutcome pruned = run_method(in, "global", objective == "L" ? "G" : objective, opts);
        TapAssignment local = local_optimize(profile, in.region.tap_line,
                                             in.region.corner_of_record);
        ArrivalProfile local_arr = arrival_times(profile, in.region.tap_line, local,
                                                 in.region.corner_of_record);
        Ratio local_cost;
        if (objective == "L") {
            local_cost = l_abs_mean(local_arr);
            ArrivalProfile pruned_arr = arrival_times(profile, in.region.tap_line,
                                                      pruned.assignment,
                                                      in.region.corner_of_record);
            pruned.cost = l_abs_mean(pruned_arr);
        } else {
            PairSet pairs = objective == "windowed"
                                ? window_pairs(in.region, *in.region.floorplan.window)
                                : all_pairs(in.region.node_count());
            local_cost = g_abs_mean(local_arr, pairs);
        }
        comparison["pruned_global"] = describe(pruned.assignment, *pruned.cost, pruned.stats);
        comparison["local"] =
            describe(local, local_cost, SearchStats{"local", 0});
        doc["comparison"] = std::move(comparison);
    }

    std::ostringstream text;
    text << "method " << method << ", objective " << objective << ", search "
         << outcome.stats.method << "\n"
         << render_text_analysis(in.region, analysis);
    emit_doc(opts, doc, text.str());
    return 0;
}

int cmd_render(const Options& opts) {
    Loaded in = load_inputs(opts);
    require_clean(in);

    std::string method = opts.method.empty() ? "local" : opts.method;
    if (method != "local" && method != "global")
        throw SchemaError("render --method must be local or global");
    std::string objective = resolve_objective(opts, in.region);
    TapAssignment assignment = run_method(in, method, objective, opts).assignment;
    DelayProfile profile = natural_delays(in.region, in.topo, in.region.corner_of_record);
    ArrivalProfile arrivals =
        arrival_times(profile, in.region.tap_line, assignment, in.region.corner_of_record);

    std::string format = opts.format == "text" ? "both" : opts.format;
    bool want_dot = format == "dot" || format == "both";
    bool want_svg = format == "svg" || format == "both";
    if (!want_dot && !want_svg)
        throw SchemaError("render --format must be dot, svg or both");

    if (opts.out.empty()) {
        if (format == "both")
            throw SchemaError("render --format both requires --out BASE");
        std::cout << (want_dot ? to_dot(in.topo, in.region)
                               : to_svg(in.region, in.topo, assignment, arrivals));
        return 0;
    }
    if (want_dot)
        write_text_file(opts.out + ".dot", to_dot(in.topo, in.region));
    if (want_svg)
        write_text_file(opts.out + ".svg", to_svg(in.region, in.topo, assignment, arrivals));
    return 0;
}

int cmd_sweep_size(const Options& opts) {
    BlockLibrary lib = load_block_library_file(opts.library);
    const BlockType* bt = lib.find_type(opts.type_id);
    if (!bt)
        throw ModelError("--type: unknown type '" + opts.type_id + "'");
    std::string corner = opts.corner.empty() ? lib.corners.front() : opts.corner;
    int ci = lib.corner_index(corner);
    if (ci < 0)
        throw ModelError("--corner: unknown corner '" + corner + "'");
    if (opts.rows < 1)
        throw SchemaError("--rows must be >= 1");

    int cols = size_sweep(*bt, opts.rows, ci);
    Json doc;
    doc["schema"] = "rct-sweep/1";
    doc["type"] = opts.type_id;
    doc["rows"] = opts.rows;
    doc["corner"] = corner;
    doc["max_columns"] = cols;
    emit_doc(opts, doc, "max feasible columns: " + std::to_string(cols) + "\n");
    return 0;
}

int cmd_feasibility(const Options& opts) {
    Loaded in = load_inputs(opts);
    require_clean(in);

    TapAssignment all_one;
    all_one.indices.assign(static_cast<std::size_t>(in.region.node_count()), 1);
    Analysis analysis = analyze(in.region, in.topo, all_one, "tap-1");

    std::ostringstream text;
    for (std::size_t c = 0; c < in.region.library.corners.size(); ++c) {
        const FeasibilityReport& f = analysis.corners[c].feasibility;
        text << "[" << in.region.library.corners[c] << "] "
             << (f.feasible ? "feasible" : "infeasible") << ": max T_nat "
             << format_ns(f.max_natural) << " ns vs tap range " << format_ns(f.tap_range)
             << " ns";
        if (!f.offending_nodes.empty()) {
            text << "; offending nodes:";
            for (int id : f.offending_nodes)
                text << " " << id;
        }
        text << "\n";
    }
    emit_doc(opts, feasibility_report_json(in.region, analysis), text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regional clock tree modeling and tap-selection optimization\n"
                 "for grids of abutted, pre-characterized blocks"};
    app.require_subcommand(1);

    Options opts;
    auto add_common = [&](CLI::App* cmd, bool needs_floorplan = true) {
        cmd->add_option("--library", opts.library, "block library JSON")->required();
        if (needs_floorplan)
            cmd->add_option("--floorplan", opts.floorplan, "floorplan JSON")->required();
        cmd->add_option("--corner", opts.corner, "override the corner of record");
        cmd->add_option("--out", opts.out, "write output to this path instead of stdout");
        cmd->add_option("--format", opts.format, "text | json (render: dot | svg | both)");
    };

    CLI::App* validate = app.add_subcommand("validate", "check library, floorplan and topology");
    add_common(validate);

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "delays, arrivals, costs, feasibility");
    add_common(analyze_cmd);
    analyze_cmd->add_option("--method", opts.method, "local | global (assignment derivation)");
    analyze_cmd->add_option("--assignment", opts.assignment, "use tap indices from this JSON file");
    analyze_cmd->add_option("--objective", opts.objective, "L | G | windowed");
    analyze_cmd->add_option("--window", opts.window, "override window: CxR[:SCxSR] | all | none");

    CLI::App* optimize = app.add_subcommand("optimize", "select delay-line taps");
    add_common(optimize);
    optimize->add_option("--method", opts.method, "local | global | oracle");
    optimize->add_option("--objective", opts.objective, "L | G | windowed");
    optimize->add_option("--window", opts.window, "override window: CxR[:SCxSR] | all | none");
    optimize->add_option("--oracle-limit", opts.oracle_limit,
                         "max configurations the oracle may enumerate");

    CLI::App* render = app.add_subcommand("render", "emit DOT and SVG diagrams");
    add_common(render);
    render->add_option("--method", opts.method, "local | global (annotation assignment)");
    render->add_option("--objective", opts.objective, "L | G | windowed");
    render->add_option("--window", opts.window, "override window: CxR[:SCxSR] | all | none");

    CLI::App* sweep = app.add_subcommand("sweep-size", "max feasible columns for a block type");
    add_common(sweep, false);
    sweep->add_option("--type", opts.type_id, "block type id")->required();
    sweep->add_option("--rows", opts.rows, "number of block rows")->required();

    CLI::App* feasibility = app.add_subcommand("feasibility", "region-size feasibility per corner");
    add_common(feasibility);
    feasibility->add_option("--window", opts.window, "override window: CxR[:SCxSR] | all | none");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    opts.oracle_limit_set = optimize->count("--oracle-limit") > 0;

    try {
        if (validate->parsed())
            return cmd_validate(opts);
        if (analyze_cmd->parsed())
            return cmd_analyze(opts);
        if (optimize->parsed())
            return cmd_optimize(opts);
        if (render->parsed())
            return cmd_render(opts);
        if (sweep->parsed())
            return cmd_sweep_size(opts);
        if (feasibility->parsed())
            return cmd_feasibility(opts);
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
