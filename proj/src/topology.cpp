#include "rct/topology.hpp"

#include <algorithm>
#include <sstream>

namespace rct {

const char* to_string(InputSelect s) {
    switch (s) {
    case InputSelect::none: return "NONE";
    case InputSelect::h_in: return "H_in";
    case InputSelect::v_in: return "V_in";
    }
    return "?";
}

namespace {

ChordVariant make_variant(bool in_vertical, bool out_vertical) {
    if (in_vertical)
        return out_vertical ? ChordVariant::v_to_v : ChordVariant::v_to_h;
    return out_vertical ? ChordVariant::h_to_v : ChordVariant::h_to_h;
}

bool variant_input_vertical(ChordVariant v) {
    return v == ChordVariant::v_to_h || v == ChordVariant::v_to_v;
}

} // namespace

RctTopology route_rct(const RegionModel& region) {
    const auto& bands = region.bands;
    if (bands.empty())
        throw ModelError("route_rct: empty region");
    for (const auto& band : bands)
        if (band.empty())
            throw ModelError("route_rct: unsupported floorplan shape (empty block row)");

    RctTopology topo;
    topo.configs.resize(static_cast<std::size_t>(region.node_count()));

    for (std::size_t b = 0; b < bands.size(); ++b) {
        const auto& band = bands[b];
        int width = static_cast<int>(band.size());
        for (int pos = 0; pos < width; ++pos) {
            FragmentConfig cfg;
            cfg.node = band[static_cast<std::size_t>(pos)];
            cfg.input_select = (pos > 0) ? InputSelect::h_in
                               : (b > 0) ? InputSelect::v_in
                                         : InputSelect::none;
            cfg.enable_h_out = pos + 1 < width;
            cfg.enable_v_out = pos == 0 && b + 1 < bands.size();
            topo.configs[static_cast<std::size_t>(cfg.node - 1)] = cfg;
        }

        if (b > 0) {
            // Spine edge into this band's head. The chord is charged to the
            // head block: vertical entry, propagated horizontally unless the
            // region is a single column.
            int head = band[0];
            int parent = bands[b - 1][0];
            topo.edges.push_back(
                TopologyEdge{parent, head, make_variant(true, width < 2)});
        }
        for (int pos = 1; pos < width; ++pos)
            topo.edges.push_back(TopologyEdge{band[static_cast<std::size_t>(pos - 1)],
                                              band[static_cast<std::size_t>(pos)],
                                              ChordVariant::h_to_h});
    }
    return topo;
}

namespace {

struct Geometry {
    bool down;  // rows propagate downward
    bool right; // columns propagate rightward
};

Geometry geometry(const Floorplan& fp) {
    return Geometry{fp.orientation == Orientation::top_down_left_right ||
                        fp.orientation == Orientation::top_down_right_left,
                    fp.orientation == Orientation::top_down_left_right ||
                        fp.orientation == Orientation::bottom_up_left_right};
}

bool ranges_overlap(int a0, int a1, int b0, int b1) {
    return std::max(a0, b0) < std::min(a1, b1);
}

// True when `child` abuts `parent` on the parent's horizontal exit side.
bool h_neighbor(const RegionModel& region, const RegionNode& parent, const RegionNode& child,
                const Geometry& g) {
    const BlockType& pt = region.library.type(parent.type_index);
    const BlockType& ct = region.library.type(child.type_index);
    if (!ranges_overlap(parent.row, parent.row + pt.height, child.row, child.row + ct.height))
        return false;
    return g.right ? child.col == parent.col + pt.width : parent.col == child.col + ct.width;
}

// True when `child` abuts `parent` on the parent's vertical exit side.
bool v_neighbor(const RegionModel& region, const RegionNode& parent, const RegionNode& child,
                const Geometry& g) {
    const BlockType& pt = region.library.type(parent.type_index);
    const BlockType& ct = region.library.type(child.type_index);
    if (!ranges_overlap(parent.col, parent.col + pt.width, child.col, child.col + ct.width))
        return false;
    return g.down ? child.row == parent.row + pt.height : parent.row == child.row + ct.height;
}

} // namespace

StructuralReport verify_topology(const RctTopology& topo, const RegionModel& region) {
    StructuralReport report;
    auto violation = [&](const std::string& code, const std::string& message) {
        report.violations.push_back(StructuralViolation{code, message});
    };

    int n = region.node_count();
    if (static_cast<int>(topo.configs.size()) != n) {
        violation("config-count", "expected " + std::to_string(n) + " fragment configs, got " +
                                      std::to_string(topo.configs.size()));
        return report;
    }

    if (static_cast<int>(topo.edges.size()) != n - 1)
        violation("tree-edge-count", "a tree over " + std::to_string(n) + " nodes needs " +
                                         std::to_string(n - 1) + " edges, got " +
                                         std::to_string(topo.edges.size()));

    Geometry g = geometry(region.floorplan);
    std::vector<int> driver(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n + 1));
    std::vector<bool> h_used(static_cast<std::size_t>(n), false);
    std::vector<bool> v_used(static_cast<std::size_t>(n), false);

    for (const TopologyEdge& e : topo.edges) {
        if (e.parent < 1 || e.parent > n || e.child < 1 || e.child > n) {
            violation("edge-node-range", "edge " + std::to_string(e.parent) + "->" +
                                             std::to_string(e.child) + " references unknown node");
            continue;
        }
        driver[static_cast<std::size_t>(e.child - 1)]++;
        children[static_cast<std::size_t>(e.parent)].push_back(e.child);

        const RegionNode& parent = region.node(e.parent);
        const RegionNode& child = region.node(e.child);
        bool horizontal = h_neighbor(region, parent, child, g);
        bool vertical = !horizontal && v_neighbor(region, parent, child, g);
        if (!horizontal && !vertical) {
            violation("non-abutting-edge", "edge " + std::to_string(e.parent) + "->" +
                                               std::to_string(e.child) +
                                               " does not follow an abutting exit");
            continue;
        }
        if (horizontal)
            h_used[static_cast<std::size_t>(e.parent - 1)] = true;
        else
            v_used[static_cast<std::size_t>(e.parent - 1)] = true;

        const FragmentConfig& pcfg = topo.configs[static_cast<std::size_t>(e.parent - 1)];
        if (horizontal && !pcfg.enable_h_out)
            violation("edge-from-gated-exit", "node " + std::to_string(e.parent) +
                                                  " drives H_out but it is gated");
        if (vertical && !pcfg.enable_v_out)
            violation("edge-from-gated-exit", "node " + std::to_string(e.parent) +
                                                  " drives V_out but it is gated");

        const FragmentConfig& ccfg = topo.configs[static_cast<std::size_t>(e.child - 1)];
        InputSelect expected = horizontal ? InputSelect::h_in : InputSelect::v_in;
        if (ccfg.input_select != expected)
            violation("input-select-mismatch",
                      "node " + std::to_string(e.child) + " is driven on " +
                          (horizontal ? "H_in" : "V_in") + " but selects " +
                          to_string(ccfg.input_select));
        if (variant_input_vertical(e.variant) != vertical)
            violation("variant-mismatch", "edge " + std::to_string(e.parent) + "->" +
                                              std::to_string(e.child) + " labeled " +
                                              to_string(e.variant) + " but the child enters on " +
                                              (horizontal ? "H_in" : "V_in"));
    }

    for (int id = 1; id <= n; ++id) {
        const FragmentConfig& cfg = topo.configs[static_cast<std::size_t>(id - 1)];
        if (cfg.node != id)
            violation("config-order", "config at slot " + std::to_string(id) + " names node " +
                                          std::to_string(cfg.node));
        int drivers = driver[static_cast<std::size_t>(id - 1)];
        if (id == region.entry_id()) {
            if (drivers != 0)
                violation("entry-driven", "entry node has " + std::to_string(drivers) +
                                              " incoming edges");
            if (cfg.input_select != InputSelect::none)
                violation("entry-input-select",
                          std::string("entry node must select no input, got ") +
                              to_string(cfg.input_select));
        } else {
            if (drivers == 0)
                violation("undriven-input", "node " + std::to_string(id) + " selects " +
                                                to_string(cfg.input_select) +
                                                " but no neighbor drives it");
            else if (drivers > 1)
                violation("multiple-drivers", "node " + std::to_string(id) + " has " +
                                                  std::to_string(drivers) + " drivers");
            if (cfg.input_select == InputSelect::none)
                violation("no-input-selected", "node " + std::to_string(id) +
                                                   " selects no clock input");
        }
        if (cfg.enable_h_out && !h_used[static_cast<std::size_t>(id - 1)])
            violation("dangling-enabled-exit", "node " + std::to_string(id) +
                                                   " enables H_out but no neighbor consumes it");
        if (cfg.enable_v_out && !v_used[static_cast<std::size_t>(id - 1)])
            violation("dangling-enabled-exit", "node " + std::to_string(id) +
                                                   " enables V_out but no neighbor consumes it");
    }

    // Reachability from the entry (acyclicity follows from single drivers +
    // full reachability + edge count).
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    std::vector<int> stack{region.entry_id()};
    seen[static_cast<std::size_t>(region.entry_id())] = true;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        for (int c : children[static_cast<std::size_t>(id)])
            if (c >= 1 && c <= n && !seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                stack.push_back(c);
            }
    }
    for (int id = 1; id <= n; ++id)
        if (!seen[static_cast<std::size_t>(id)])
            violation("unreachable-node",
                      "node " + std::to_string(id) + " is not reachable from the entry");

    // The entry node must sit on the floorplan's entry corner cell.
    const RegionNode& entry = region.node(region.entry_id());
    const BlockType& et = region.library.type(entry.type_index);
    int cc = (region.floorplan.entry_corner == EntryCorner::top_left ||
              region.floorplan.entry_corner == EntryCorner::bottom_left)
                 ? 0
                 : region.floorplan.cols - 1;
    int cr = (region.floorplan.entry_corner == EntryCorner::top_left ||
              region.floorplan.entry_corner == EntryCorner::top_right)
                 ? 0
                 : region.floorplan.rows - 1;
    if (!(entry.col <= cc && cc < entry.col + et.width && entry.row <= cr &&
          cr < entry.row + et.height))
        violation("entry-corner-mismatch", "entry node does not cover the " +
                                               std::string(to_string(
                                                   region.floorplan.entry_corner)) +
                                               " corner cell");

    return report;
}

std::string to_dot(const RctTopology& topo, const RegionModel& region) {
    std::ostringstream out;
    out << "digraph rct {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (int id = 1; id <= region.node_count(); ++id) {
        const RegionNode& n = region.node(id);
        out << "  n" << id << " [label=\"" << id << " (" << n.col << "," << n.row << ")\"];\n";
    }
    std::vector<TopologyEdge> edges = topo.edges;
    std::sort(edges.begin(), edges.end(), [](const TopologyEdge& a, const TopologyEdge& b) {
        return a.parent != b.parent ? a.parent < b.parent : a.child < b.child;
    });
    for (const TopologyEdge& e : edges) {
        const RegionNode& child = region.node(e.child);
        TimeFs delay = region.library.type(child.type_index)
                           .chord(e.variant, child.row_class, region.corner_of_record);
        out << "  n" << e.parent << " -> n" << e.child << " [label=\"" << to_string(e.variant)
            << " " << format_ns(delay) << "ns\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rct
