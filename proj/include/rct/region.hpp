#pragma once

#include <vector>

#include "rct/floorplan.hpp"
#include "rct/library.hpp"

namespace rct {

struct RegionNode {
    int id = 0;         // final id, 1..N; 1 = entry, N = furthest
    int type_index = 0; // into BlockLibrary::types
    int col = 0;        // leftmost cell of the footprint
    int row = 0;        // topmost cell of the footprint
    int band = 0;       // block row index in propagation order
    int pos = 0;        // position within the band in propagation order
    RowClass row_class = RowClass::edge;
};

// Immutable region instance on the synchoros grid. Node ids are final:
// id 1 is the entry node, id N is the node with maximal natural delay under
// the corner of record (ties resolved toward the last node in propagation
// order).
struct RegionModel {
    BlockLibrary library;
    Floorplan floorplan;
    std::vector<RegionNode> nodes;        // index id-1
    std::vector<std::vector<int>> bands;  // [band][pos] -> node id
    int corner_of_record = 0;             // resolved corner index
    TapLine tap_line;                     // shared by every placed type

    int node_count() const { return static_cast<int>(nodes.size()); }
    int entry_id() const { return 1; }
    int furthest_id() const { return node_count(); }
    const RegionNode& node(int id) const { return nodes[static_cast<std::size_t>(id - 1)]; }
    const BlockType& node_type(int id) const { return library.type(node(id).type_index); }
};

RegionModel build_region(const Floorplan& fp, const BlockLibrary& lib);

} // namespace rct
