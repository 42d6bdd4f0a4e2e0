#include "rct/svg.hpp"

#include <sstream>

namespace rct {

namespace {

constexpr int kCell = 110;
constexpr int kMargin = 20;

struct Center {
    int x, y;
};

Center center(const RegionModel& region, const RegionNode& n) {
    const BlockType& bt = region.library.type(n.type_index);
    return Center{kMargin + n.col * kCell + bt.width * kCell / 2,
                  kMargin + n.row * kCell + bt.height * kCell / 2};
}

} // namespace

std::string to_svg(const RegionModel& region, const RctTopology& topo,
                   const TapAssignment& assignment, const ArrivalProfile& arrivals) {
    (void)topo; // the drawing follows the band structure the router used
    int w = 2 * kMargin + region.floorplan.cols * kCell;
    int h = 2 * kMargin + region.floorplan.rows * kCell;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
        << "\" font-family=\"monospace\" font-size=\"14\">\n";

    for (int id = 1; id <= region.node_count(); ++id) {
        const RegionNode& n = region.node(id);
        const BlockType& bt = region.library.type(n.type_index);
        out << "  <rect class=\"block\" x=\"" << kMargin + n.col * kCell << "\" y=\""
            << kMargin + n.row * kCell << "\" width=\"" << bt.width * kCell << "\" height=\""
            << bt.height * kCell << "\" fill=\"#f4f4f4\" stroke=\"#555\"/>\n";
    }

    if (region.bands.size() > 1) {
        out << "  <polyline class=\"spine\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\""
            << " points=\"";
        for (std::size_t b = 0; b < region.bands.size(); ++b) {
            Center c = center(region, region.node(region.bands[b][0]));
            out << (b ? " " : "") << c.x << "," << c.y;
        }
        out << "\"/>\n";
    }
    for (const auto& band : region.bands) {
        if (band.size() < 2)
            continue;
        out << "  <polyline class=\"branch\" fill=\"none\" stroke=\"#2471a3\" stroke-width=\"2\""
            << " points=\"";
        for (std::size_t p = 0; p < band.size(); ++p) {
            Center c = center(region, region.node(band[p]));
            out << (p ? " " : "") << c.x << "," << c.y;
        }
        out << "\"/>\n";
    }

    for (int id = 1; id <= region.node_count(); ++id) {
        const RegionNode& n = region.node(id);
        Center c = center(region, n);
        out << "  <g class=\"node\">\n";
        out << "    <text x=\"" << c.x - kCell / 2 + 8 << "\" y=\"" << c.y - 14 << "\">#" << id
            << " tap=" << assignment.at(id) << "</text>\n";
        out << "    <text x=\"" << c.x - kCell / 2 + 8 << "\" y=\"" << c.y + 24 << "\">"
            << format_ns(arrivals.at(id)) << "ns</text>\n";
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace rct
