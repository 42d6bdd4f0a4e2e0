#include "rct/report.hpp"

#include <sstream>

namespace rct {

Analysis analyze(const RegionModel& region, const RctTopology& topo,
                 const TapAssignment& assignment, const std::string& method) {
    Analysis a;
    a.assignment = assignment;
    a.method = method;
    if (region.floorplan.window)
        a.window = window_pairs(region, *region.floorplan.window);
    for (int c = 0; c < region.library.corner_count(); ++c) {
        CornerAnalysis ca;
        ca.profile = natural_delays(region, topo, c);
        ca.arrivals = arrival_times(ca.profile, region.tap_line, assignment, c);
        ca.cost = make_cost_report(ca.arrivals, a.window ? &*a.window : nullptr);
        ca.feasibility = feasibility_max_size(ca.profile, region.tap_line, c);
        a.corners.push_back(std::move(ca));
    }
    a.electrical = aggregate_electrical(region);
    return a;
}

Json ratio_to_json(const Ratio& r) {
    Json j;
    j["num_fs"] = r.num;
    j["den"] = r.den;
    j["fs_rounded"] = round_half_even(r.num, r.den);
    j["ps_rounded"] = round_half_even(r.num, r.den * 1000);
    return j;
}

Json cost_to_json(const CostReport& c) {
    Json j;
    j["l_abs_mean"] = ratio_to_json(c.l);
    j["g_abs_mean"] = ratio_to_json(c.g_all);
    if (c.g_window)
        j["g_window"] = ratio_to_json(*c.g_window);
    j["skew_fs"] = c.skew.fs;
    j["skew_ps"] = format_ps(c.skew);
    return j;
}

namespace {

Json region_to_json(const RegionModel& region) {
    Json j;
    j["cols"] = region.floorplan.cols;
    j["rows"] = region.floorplan.rows;
    j["nodes"] = region.node_count();
    j["entry_node"] = region.entry_id();
    j["furthest_node"] = region.furthest_id();
    j["entry_corner"] = to_string(region.floorplan.entry_corner);
    j["orientation"] = to_string(region.floorplan.orientation);
    j["corner_of_record"] = region.library.corners[static_cast<std::size_t>(region.corner_of_record)];
    return j;
}

Json feasibility_to_json(const FeasibilityReport& f) {
    Json j;
    j["feasible"] = f.feasible;
    j["max_natural_fs"] = f.max_natural.fs;
    j["tap_range_fs"] = f.tap_range.fs;
    j["reference_arrival_fs"] = f.reference_arrival.fs;
    j["offending_nodes"] = f.offending_nodes;
    return j;
}

Json window_to_json(const RegionModel& region, const std::optional<PairSet>& window) {
    if (!window || !region.floorplan.window)
        return Json(nullptr);
    Json j;
    j["cols"] = region.floorplan.window->cols;
    j["rows"] = region.floorplan.window->rows;
    j["stride_cols"] = region.floorplan.window->stride_cols;
    j["stride_rows"] = region.floorplan.window->stride_rows;
    j["n_prime"] = window->n_prime;
    j["pair_count"] = window->pairs.size();
    return j;
}

Json electrical_to_json(const RegionModel& region, const ElectricalReport& e) {
    Json j;
    j["rct_cap_ff"] = format_ff(e.rct_cap_af);
    j["lct_cap_ff"] = format_ff(e.lct_cap_af);
    Json frac;
    frac["num"] = e.rct_fraction.num;
    frac["den"] = e.rct_fraction.den;
    j["rct_fraction"] = std::move(frac);
    Json slew, ok;
    for (std::size_t c = 0; c < region.library.corners.size(); ++c) {
        slew[region.library.corners[c]] = format_ps(e.worst_slew[c]);
        ok[region.library.corners[c]] = static_cast<bool>(e.slew_ok[c]);
    }
    j["worst_slew_ps"] = std::move(slew);
    j["slew_ok"] = std::move(ok);
    j["slew_rule_ok"] = e.slew_rule_ok;
    return j;
}

} // namespace

Json validate_report(const StructuralReport& report) {
    Json j;
    j["schema"] = "rct-validate/1";
    j["clean"] = report.clean();
    Json violations = Json::array();
    for (const StructuralViolation& v : report.violations) {
        Json e;
        e["code"] = v.code;
        e["message"] = v.message;
        violations.push_back(std::move(e));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json analyze_report(const RegionModel& region, const RctTopology& topo,
                    const Analysis& analysis) {
    (void)topo;
    Json j;
    j["schema"] = "rct-analyze/1";
    j["region"] = region_to_json(region);
    Json assignment;
    assignment["method"] = analysis.method;
    assignment["indices"] = analysis.assignment.indices;
    j["assignment"] = std::move(assignment);
    j["corners"] = region.library.corners;

    Json nodes = Json::array();
    for (int id = 1; id <= region.node_count(); ++id) {
        const RegionNode& n = region.node(id);
        Json e;
        e["id"] = id;
        e["type"] = region.library.type(n.type_index).id;
        e["col"] = n.col;
        e["row"] = n.row;
        e["row_class"] = to_string(n.row_class);
        e["tap"] = analysis.assignment.at(id);
        Json nat, arr, diff;
        for (std::size_t c = 0; c < region.library.corners.size(); ++c) {
            const std::string& corner = region.library.corners[c];
            nat[corner] = analysis.corners[c].profile.at(id).fs;
            arr[corner] = analysis.corners[c].arrivals.at(id).fs;
            diff[corner] = analysis.corners[c].cost.diff_to_furthest_fs[static_cast<std::size_t>(id - 1)];
        }
        e["t_nat_fs"] = std::move(nat);
        e["arrival_fs"] = std::move(arr);
        e["diff_to_furthest_fs"] = std::move(diff);
        nodes.push_back(std::move(e));
    }
    j["nodes"] = std::move(nodes);

    Json cost, feas;
    for (std::size_t c = 0; c < region.library.corners.size(); ++c) {
        cost[region.library.corners[c]] = cost_to_json(analysis.corners[c].cost);
        feas[region.library.corners[c]] = feasibility_to_json(analysis.corners[c].feasibility);
    }
    j["cost"] = std::move(cost);
    j["feasibility"] = std::move(feas);
    j["electrical"] = electrical_to_json(region, analysis.electrical);
    j["window"] = window_to_json(region, analysis.window);
    return j;
}

Json optimize_report(const RegionModel& region, const Analysis& analysis,
                     const PrunedCandidates& candidates, const SearchStats& stats,
                     const std::optional<Ratio>& objective_cost) {
    Json j;
    j["schema"] = "rct-optimize/1";
    j["region"] = region_to_json(region);
    j["method"] = analysis.method;
    j["assignment"] = analysis.assignment.indices;
    if (objective_cost)
        j["objective_cost"] = ratio_to_json(*objective_cost);
    Json search;
    search["method"] = stats.method;
    search["configurations_examined"] = stats.configurations_examined;
    j["search"] = std::move(search);

    Json nodes = Json::array();
    for (int id = 1; id <= region.node_count(); ++id) {
        Json e;
        e["id"] = id;
        e["tap"] = analysis.assignment.at(id);
        e["ideal_fs"] = candidates.ideal[static_cast<std::size_t>(id - 1)].fs;
        e["candidates"] = candidates.candidates[static_cast<std::size_t>(id - 1)];
        e["clamped"] = static_cast<bool>(candidates.clamped[static_cast<std::size_t>(id - 1)]);
        nodes.push_back(std::move(e));
    }
    j["nodes"] = std::move(nodes);

    Json cost, feas;
    for (std::size_t c = 0; c < region.library.corners.size(); ++c) {
        cost[region.library.corners[c]] = cost_to_json(analysis.corners[c].cost);
        feas[region.library.corners[c]] = feasibility_to_json(analysis.corners[c].feasibility);
    }
    j["cost"] = std::move(cost);
    j["feasibility"] = std::move(feas);
    j["window"] = window_to_json(region, analysis.window);
    return j;
}

Json feasibility_report_json(const RegionModel& region, const Analysis& analysis) {
    Json j;
    j["schema"] = "rct-feasibility/1";
    j["region"] = region_to_json(region);
    Json feas;
    for (std::size_t c = 0; c < region.library.corners.size(); ++c)
        feas[region.library.corners[c]] = feasibility_to_json(analysis.corners[c].feasibility);
    j["feasibility"] = std::move(feas);
    return j;
}

std::string render_text_validate(const StructuralReport& report) {
    std::ostringstream out;
    if (report.clean()) {
        out << "clean: no structural violations\n";
    } else {
        out << report.violations.size() << " violation(s):\n";
        for (const StructuralViolation& v : report.violations)
            out << "  [" << v.code << "] " << v.message << "\n";
    }
    return out.str();
}

std::string render_text_analysis(const RegionModel& region, const Analysis& analysis) {
    std::ostringstream out;
    const std::string& record = region.library.corners[static_cast<std::size_t>(region.corner_of_record)];
    out << "region " << region.floorplan.cols << "x" << region.floorplan.rows << ", "
        << region.node_count() << " nodes, corner of record " << record << "\n";
    out << "assignment (" << analysis.method << "):";
    for (int idx : analysis.assignment.indices)
        out << " " << idx;
    out << "\n";
    for (std::size_t c = 0; c < region.library.corners.size(); ++c) {
        const CornerAnalysis& ca = analysis.corners[c];
        out << "[" << region.library.corners[c] << "] max T_nat "
            << format_ns(ca.profile.max()) << " ns, skew " << format_ps(ca.cost.skew)
            << " ps, L " << ratio_to_json(ca.cost.l)["ps_rounded"].get<std::int64_t>()
            << " ps, G " << ratio_to_json(ca.cost.g_all)["ps_rounded"].get<std::int64_t>()
            << " ps";
        if (ca.cost.g_window)
            out << ", G(window) "
                << ratio_to_json(*ca.cost.g_window)["ps_rounded"].get<std::int64_t>() << " ps";
        out << ", " << (ca.feasibility.feasible ? "feasible" : "infeasible") << "\n";
    }
    out << "capacitance rct " << format_ff(analysis.electrical.rct_cap_af) << " fF, lct "
        << format_ff(analysis.electrical.lct_cap_af) << " fF\n";
    return out.str();
}

} // namespace rct
