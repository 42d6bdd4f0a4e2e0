#pragma once

#include <string>

#include "rct/delay.hpp"

namespace rct {

// Static SVG of the region grid with the spine and branch edges drawn and
// each node annotated with its id, selected tap and arrival at the corner
// of record. Element order is deterministic: block rects in id order, the
// spine polyline, branch polylines in band order, node annotations in id
// order.
std::string to_svg(const RegionModel& region, const RctTopology& topo,
                   const TapAssignment& assignment, const ArrivalProfile& arrivals);

} // namespace rct
