#pragma once

#include <string>
#include <vector>

#include "rct/region.hpp"

namespace rct {

enum class InputSelect : int { none = 0, h_in = 1, v_in = 2 };

const char* to_string(InputSelect s);

// Power-up configuration of one block's RCT fragment: which entry point
// carries the clock and which exit gates are open. A disabled exit is tied
// to constant zero.
struct FragmentConfig {
    int node = 0;
    InputSelect input_select = InputSelect::none;
    bool enable_h_out = false;
    bool enable_v_out = false;
};

struct TopologyEdge {
    int parent = 0;
    int child = 0;
    ChordVariant variant = ChordVariant::h_to_h;
};

// The composed regional clock tree: one fragment configuration per node and
// the parent -> child clock edges. Edges are emitted band by band, spine
// edge first, so the list is topologically ordered for routed trees.
struct RctTopology {
    std::vector<FragmentConfig> configs; // index id-1
    std::vector<TopologyEdge> edges;
};

// Compose the RCT for a region: a vertical spine down the entry column
// feeding one horizontal branch per block row. The chord delay of an edge
// is charged to the child block, keyed by the child's entry point and the
// direction it propagates the clock on (horizontal inside a multi-column
// row, vertical in a single-column region).
RctTopology route_rct(const RegionModel& region);

struct StructuralViolation {
    std::string code;
    std::string message;
};

struct StructuralReport {
    std::vector<StructuralViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Check structural legality of a topology (routed or hand-built): single
// driver per node, tree shape, gated exits, abutting edges, entry at the
// floorplan corner. Violations are report items, never exceptions.
StructuralReport verify_topology(const RctTopology& topo, const RegionModel& region);

// Graphviz rendering; node and edge order is deterministic. Edge labels
// carry the chord variant and its delay at the corner of record.
std::string to_dot(const RctTopology& topo, const RegionModel& region);

} // namespace rct
