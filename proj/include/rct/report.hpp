#pragma once

#include <map>
#include <string>

#include "rct/optimize.hpp"

namespace rct {

// Per-corner slice of an analysis: natural delays and, when an assignment
// is present, arrivals plus costs and feasibility.
struct CornerAnalysis {
    DelayProfile profile;
    ArrivalProfile arrivals;
    CostReport cost;
    FeasibilityReport feasibility;
};

// Full multi-corner analysis of a region under one tap assignment. The
// assignment is chosen on the corner of record; the other corners report
// the skew it achieves under their characterization.
struct Analysis {
    TapAssignment assignment;
    std::string method; // how the assignment was obtained
    std::vector<CornerAnalysis> corners; // library corner order
    ElectricalReport electrical;
    std::optional<PairSet> window; // pair set of the floorplan window, if any
};

Analysis analyze(const RegionModel& region, const RctTopology& topo,
                 const TapAssignment& assignment, const std::string& method);

Json ratio_to_json(const Ratio& r);
Json cost_to_json(const CostReport& c);

Json validate_report(const StructuralReport& report);
Json analyze_report(const RegionModel& region, const RctTopology& topo, const Analysis& analysis);
Json optimize_report(const RegionModel& region, const Analysis& analysis,
                     const PrunedCandidates& candidates, const SearchStats& stats,
                     const std::optional<Ratio>& objective_cost);
Json feasibility_report_json(const RegionModel& region, const Analysis& analysis);

std::string render_text_validate(const StructuralReport& report);
std::string render_text_analysis(const RegionModel& region, const Analysis& analysis);

} // namespace rct
