#pragma once

#include <vector>

#include "rct/region.hpp"
#include "rct/topology.hpp"

namespace rct {

// Natural propagation delay per node: the exact sum of chord delays on the
// unique entry -> node tree path. natural[0] (the entry) is always zero.
struct DelayProfile {
    std::vector<TimeFs> natural; // index id-1

    TimeFs at(int id) const { return natural[static_cast<std::size_t>(id - 1)]; }
    TimeFs max() const;
};

// One selected tap index per node, 1-based; indices[N-1] is pinned to 1 by
// every optimizer in this project.
struct TapAssignment {
    std::vector<int> indices; // index id-1

    int at(int id) const { return indices[static_cast<std::size_t>(id - 1)]; }
};

// Clock arrival at each block's LCT entry: natural delay plus the selected
// tap delay, exact.
struct ArrivalProfile {
    std::vector<TimeFs> arrival; // index id-1

    TimeFs at(int id) const { return arrival[static_cast<std::size_t>(id - 1)]; }
};

DelayProfile natural_delays(const RegionModel& region, const RctTopology& topo, int corner);

ArrivalProfile arrival_times(const DelayProfile& profile, const TapLine& taps,
                             const TapAssignment& assignment, int corner);

struct FeasibilityReport {
    bool feasible = false;
    TimeFs max_natural{0};
    TimeFs tap_range{0};
    TimeFs reference_arrival{0};         // T_LCT of node N at tap 1
    std::vector<bool> ideal_in_range;    // per node, index id-1
    std::vector<int> offending_nodes;    // ids whose ideal tap delay is out of range
};

// A region is feasible when the tap range covers the natural-delay spread;
// this is equivalent to every node's ideal tap delay lying inside
// [t_tap_1, t_tap_M], which is reported per node as well.
FeasibilityReport feasibility_max_size(const DelayProfile& profile, const TapLine& taps,
                                       int corner);

// Largest column count of a homogeneous spine-and-branch region of `rows`
// block rows that stays feasible. Accumulates natural delays column by
// column instead of rebuilding regions. Returns 0 when even one column is
// infeasible (only possible for rows > 1 with a zero tap range).
int size_sweep(const BlockType& bt, int rows, int corner);

struct ElectricalReport {
    std::int64_t rct_cap_af = 0;
    std::int64_t lct_cap_af = 0;
    Ratio rct_fraction;               // rct / (rct + lct)
    std::vector<TimeFs> worst_slew;   // per corner
    std::vector<bool> slew_ok;        // per corner
    bool slew_rule_ok = true;
};

ElectricalReport aggregate_electrical(const RegionModel& region);

} // namespace rct
