#include "rct/region.hpp"

#include <algorithm>
#include <map>

#include "rct/delay.hpp"
#include "rct/topology.hpp"

namespace rct {

namespace {

bool top_down(Orientation o) {
    return o == Orientation::top_down_left_right || o == Orientation::top_down_right_left;
}

bool left_right(Orientation o) {
    return o == Orientation::top_down_left_right || o == Orientation::bottom_up_left_right;
}

} // namespace

RegionModel build_region(const Floorplan& fp, const BlockLibrary& lib) {
    RegionModel region;
    region.library = lib;
    region.floorplan = fp;
    region.corner_of_record = lib.corner_index(fp.corner_of_record);
    if (region.corner_of_record < 0)
        throw ModelError("corner_of_record '" + fp.corner_of_record + "' not in library");

    if (fp.placements.empty())
        throw ModelError("floorplan has no placements");

    // Every node drives the same delay-line design; tap selection is only
    // meaningful if the placed types agree on it.
    const BlockType* tap_source = nullptr;
    for (const Placement& p : fp.placements) {
        const BlockType* bt = lib.find_type(p.type_id);
        if (!bt)
            throw ModelError("placement references unknown type '" + p.type_id + "'");
        if (!tap_source)
            tap_source = bt;
        else if (!(tap_source->taps == bt->taps))
            throw ModelError("types '" + tap_source->id + "' and '" + bt->id +
                             "' are placed together but have different delay lines");
    }
    region.tap_line = tap_source->taps;

    // Block rows, keyed by top grid row. load_floorplan guarantees each is a
    // complete row of uniform height.
    std::map<int, std::vector<const Placement*>> by_row;
    for (const Placement& p : fp.placements)
        by_row[p.row].push_back(&p);

    std::vector<std::vector<const Placement*>> bands;
    for (auto& [row, list] : by_row) {
        std::sort(list.begin(), list.end(),
                  [](const Placement* a, const Placement* b) { return a->col < b->col; });
        if (!left_right(fp.orientation))
            std::reverse(list.begin(), list.end());
        bands.push_back(std::move(list));
    }
    if (!top_down(fp.orientation))
        std::reverse(bands.begin(), bands.end());

    // Provisional model in propagation order (id = propagation index + 1).
    RegionModel prov;
    prov.library = lib;
    prov.floorplan = fp;
    prov.corner_of_record = region.corner_of_record;
    prov.tap_line = region.tap_line;
    int prop = 0;
    for (std::size_t b = 0; b < bands.size(); ++b) {
        std::vector<int> band_ids;
        for (std::size_t pos = 0; pos < bands[b].size(); ++pos) {
            const Placement& p = *bands[b][pos];
            const BlockType& bt = *lib.find_type(p.type_id);
            RegionNode n;
            n.id = ++prop;
            n.type_index = lib.type_index(p.type_id);
            n.col = p.col;
            n.row = p.row;
            n.band = static_cast<int>(b);
            n.pos = static_cast<int>(pos);
            n.row_class = (p.row == 0 || p.row + bt.height == fp.rows) ? RowClass::edge
                                                                       : RowClass::middle;
            prov.nodes.push_back(n);
            band_ids.push_back(n.id);
        }
        prov.bands.push_back(std::move(band_ids));
    }

    RctTopology topo = route_rct(prov);
    DelayProfile profile = natural_delays(prov, topo, prov.corner_of_record);

    // Furthest node: maximal natural delay, ties resolved toward the last
    // node in propagation order. Its id becomes N; everything else keeps
    // propagation order.
    int n = prov.node_count();
    int furthest = 0;
    for (int i = 0; i < n; ++i)
        if (profile.natural[static_cast<std::size_t>(i)] >= profile.natural[static_cast<std::size_t>(furthest)])
            furthest = i;

    std::vector<int> final_id(static_cast<std::size_t>(n), 0);
    int next = 1;
    for (int i = 0; i < n; ++i)
        if (i != furthest)
            final_id[static_cast<std::size_t>(i)] = next++;
    final_id[static_cast<std::size_t>(furthest)] = n;

    region.nodes.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        RegionNode node = prov.nodes[static_cast<std::size_t>(i)];
        node.id = final_id[static_cast<std::size_t>(i)];
        region.nodes[static_cast<std::size_t>(node.id - 1)] = node;
    }
    for (const auto& band : prov.bands) {
        std::vector<int> ids;
        for (int old_id : band)
            ids.push_back(final_id[static_cast<std::size_t>(old_id - 1)]);
        region.bands.push_back(std::move(ids));
    }
    return region;
}

} // namespace rct
