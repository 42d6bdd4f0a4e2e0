#include "rct/delay.hpp"

#include <algorithm>

namespace rct {

TimeFs DelayProfile::max() const {
    TimeFs m{0};
    for (TimeFs t : natural)
        m = std::max(m, t);
    return m;
}

DelayProfile natural_delays(const RegionModel& region, const RctTopology& topo, int corner) {
    int n = region.node_count();
    DelayProfile profile;
    profile.natural.assign(static_cast<std::size_t>(n), TimeFs{0});

    std::vector<std::vector<const TopologyEdge*>> out(static_cast<std::size_t>(n + 1));
    for (const TopologyEdge& e : topo.edges) {
        if (e.parent < 1 || e.parent > n || e.child < 1 || e.child > n)
            throw ModelError("natural_delays: edge references unknown node");
        out[static_cast<std::size_t>(e.parent)].push_back(&e);
    }

    std::vector<int> stack{region.entry_id()};
    std::vector<bool> done(static_cast<std::size_t>(n + 1), false);
    done[static_cast<std::size_t>(region.entry_id())] = true;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        for (const TopologyEdge* e : out[static_cast<std::size_t>(id)]) {
            if (done[static_cast<std::size_t>(e->child)])
                throw ModelError("natural_delays: node " + std::to_string(e->child) +
                                 " has multiple drivers");
            const RegionNode& child = region.node(e->child);
            TimeFs chord = region.library.type(child.type_index)
                               .chord(e->variant, child.row_class, corner);
            profile.natural[static_cast<std::size_t>(e->child - 1)] =
                profile.natural[static_cast<std::size_t>(id - 1)] + chord;
            done[static_cast<std::size_t>(e->child)] = true;
            stack.push_back(e->child);
        }
    }
    for (int id = 1; id <= n; ++id)
        if (!done[static_cast<std::size_t>(id)])
            throw ModelError("natural_delays: node " + std::to_string(id) +
                             " unreachable from the entry");
    return profile;
}

ArrivalProfile arrival_times(const DelayProfile& profile, const TapLine& taps,
                             const TapAssignment& assignment, int corner) {
    if (assignment.indices.size() != profile.natural.size())
        throw ModelError("arrival_times: assignment length " +
                         std::to_string(assignment.indices.size()) + " does not match " +
                         std::to_string(profile.natural.size()) + " nodes");
    ArrivalProfile arrivals;
    arrivals.arrival.reserve(profile.natural.size());
    for (std::size_t i = 0; i < profile.natural.size(); ++i)
        arrivals.arrival.push_back(profile.natural[i] + taps.tap(corner, assignment.indices[i]));
    return arrivals;
}

FeasibilityReport feasibility_max_size(const DelayProfile& profile, const TapLine& taps,
                                       int corner) {
    FeasibilityReport report;
    report.max_natural = profile.max();
    report.tap_range = taps.range(corner);
    report.feasible = report.max_natural <= report.tap_range;

    int n = static_cast<int>(profile.natural.size());
    report.reference_arrival = profile.at(n) + taps.min_tap(corner);
    TimeFs lo = taps.min_tap(corner);
    TimeFs hi = taps.max_tap(corner);
    for (int id = 1; id <= n; ++id) {
        TimeFs ideal = report.reference_arrival - profile.at(id);
        bool in_range = lo <= ideal && ideal <= hi;
        report.ideal_in_range.push_back(in_range);
        if (!in_range)
            report.offending_nodes.push_back(id);
    }
    return report;
}

int size_sweep(const BlockType& bt, int rows, int corner) {
    if (rows < 1)
        throw ModelError("size_sweep: rows must be >= 1");
    TimeFs range = bt.taps.range(corner);

    auto row_class = [&](int band) {
        return (band == 0 || band == rows - 1) ? RowClass::edge : RowClass::middle;
    };

    // Single column: a pure vertical chain of V_to_V chords.
    TimeFs chain{0};
    for (int b = 1; b < rows; ++b)
        chain += bt.chord(ChordVariant::v_to_v, row_class(b), corner);
    if (chain > range)
        return 0;
    int best = 1;

    // Two or more columns: spine of V_to_H chords, branches of H_to_H; the
    // per-band natural delay of the last column grows by one H chord per
    // added column.
    std::vector<TimeFs> last(static_cast<std::size_t>(rows), TimeFs{0});
    TimeFs spine{0};
    for (int b = 1; b < rows; ++b) {
        spine += bt.chord(ChordVariant::v_to_h, row_class(b), corner);
        last[static_cast<std::size_t>(b)] = spine;
    }
    for (int cols = 2;; ++cols) {
        TimeFs worst{0};
        for (int b = 0; b < rows; ++b) {
            last[static_cast<std::size_t>(b)] +=
                bt.chord(ChordVariant::h_to_h, row_class(b), corner);
            worst = std::max(worst, last[static_cast<std::size_t>(b)]);
        }
        if (worst > range)
            return best;
        best = cols;
    }
}

ElectricalReport aggregate_electrical(const RegionModel& region) {
    ElectricalReport report;
    int corners = region.library.corner_count();
    report.worst_slew.assign(static_cast<std::size_t>(corners), TimeFs{0});
    report.slew_ok.assign(static_cast<std::size_t>(corners), true);

    for (const RegionNode& n : region.nodes) {
        const BlockType& bt = region.library.type(n.type_index);
        report.rct_cap_af += bt.fragment_cap_af;
        report.lct_cap_af += bt.lct_cap_af;
        for (int c = 0; c < corners; ++c) {
            TimeFs slew = bt.slew_at_lct_entry[static_cast<std::size_t>(c)];
            report.worst_slew[static_cast<std::size_t>(c)] =
                std::max(report.worst_slew[static_cast<std::size_t>(c)], slew);
            if (slew > bt.max_slew_rule)
                report.slew_ok[static_cast<std::size_t>(c)] = false;
        }
    }
    std::int64_t total = report.rct_cap_af + report.lct_cap_af;
    report.rct_fraction = total == 0 ? Ratio{0, 1} : Ratio::of(report.rct_cap_af, total);
    for (bool ok : report.slew_ok)
        report.slew_rule_ok = report.slew_rule_ok && ok;
    return report;
}

} // namespace rct
