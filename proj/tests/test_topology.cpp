#include <map>

#include "doctest.h"

#include "helpers.hpp"

using namespace rct;

TEST_CASE("8x3 routing: 3 branches of 8 leaves, spine V_to_*, branches H_to_H") {
    RegionModel region = test::uniform_region(8, 3);
    RctTopology topo = route_rct(region);

    REQUIRE(topo.edges.size() == 23);
    CHECK(region.bands.size() == 3);
    for (const auto& band : region.bands)
        CHECK(band.size() == 8);

    int spine = 0, branch = 0;
    for (const TopologyEdge& e : topo.edges) {
        const RegionNode& p = region.node(e.parent);
        const RegionNode& c = region.node(e.child);
        if (p.band != c.band) {
            ++spine;
            CHECK(c.pos == 0);
            // multi-column rows propagate the spine entry horizontally
            CHECK(e.variant == ChordVariant::v_to_h);
        } else {
            ++branch;
            CHECK(e.variant == ChordVariant::h_to_h);
        }
    }
    CHECK(spine == 2);
    CHECK(branch == 21);

    CHECK(verify_topology(topo, region).clean());
}

TEST_CASE("3x1 region is a pure horizontal chain") {
    RegionModel region = test::uniform_region(3, 1);
    RctTopology topo = route_rct(region);
    REQUIRE(topo.edges.size() == 2);
    for (const TopologyEdge& e : topo.edges)
        CHECK(e.variant == ChordVariant::h_to_h);
    // the only legal tree over a 3-chain: 1->2->3
    CHECK(topo.edges[0].parent == 1);
    CHECK(topo.edges[0].child == 2);
    CHECK(topo.edges[1].parent == 2);
    CHECK(topo.edges[1].child == 3);
}

TEST_CASE("1x1 region routes to zero edges") {
    RegionModel region = test::uniform_region(1, 1);
    RctTopology topo = route_rct(region);
    CHECK(topo.edges.empty());
    CHECK(topo.configs.size() == 1);
    CHECK(topo.configs[0].input_select == InputSelect::none);
    CHECK_FALSE(topo.configs[0].enable_h_out);
    CHECK_FALSE(topo.configs[0].enable_v_out);
    CHECK(verify_topology(topo, region).clean());
}

TEST_CASE("single-column region uses V_to_V chords") {
    RegionModel region = test::uniform_region(1, 4);
    RctTopology topo = route_rct(region);
    REQUIRE(topo.edges.size() == 3);
    for (const TopologyEdge& e : topo.edges)
        CHECK(e.variant == ChordVariant::v_to_v);
    CHECK(verify_topology(topo, region).clean());
}

TEST_CASE("routing verifies clean on every grid 1..30 x 1..6 and orientation") {
    for (const char* entry : {"top_left", "top_right", "bottom_left", "bottom_right"})
        for (int cols = 1; cols <= 30; ++cols)
            for (int rows = 1; rows <= 6; ++rows) {
                RegionModel region = test::uniform_region(cols, rows, entry);
                RctTopology topo = route_rct(region);
                StructuralReport report = verify_topology(topo, region);
                if (!report.clean()) {
                    CAPTURE(entry);
                    CAPTURE(cols);
                    CAPTURE(rows);
                    REQUIRE(report.violations.empty());
                }
            }
}

TEST_CASE("mirror symmetry: top_right routing is the column mirror of top_left") {
    const int cols = 5, rows = 3;
    RegionModel left = test::uniform_region(cols, rows, "top_left");
    RegionModel right = test::uniform_region(cols, rows, "top_right");
    RctTopology tl = route_rct(left);
    RctTopology tr = route_rct(right);

    // map a grid position to its node id
    auto at = [&](const RegionModel& region, int col, int row) {
        for (const RegionNode& n : region.nodes)
            if (n.col == col && n.row == row)
                return n.id;
        FAIL("node lookup failed");
        return -1;
    };

    REQUIRE(tl.edges.size() == tr.edges.size());
    std::map<std::pair<int, int>, ChordVariant> mirrored;
    for (const TopologyEdge& e : tr.edges) {
        const RegionNode& p = right.node(e.parent);
        const RegionNode& c = right.node(e.child);
        mirrored[{at(left, cols - 1 - p.col, p.row), at(left, cols - 1 - c.col, c.row)}] =
            e.variant;
    }
    for (const TopologyEdge& e : tl.edges) {
        auto it = mirrored.find({e.parent, e.child});
        REQUIRE(it != mirrored.end());
        CHECK(it->second == e.variant);
    }
}

TEST_CASE("hand-built violations are itemized") {
    RegionModel region = test::uniform_region(2, 2);
    RctTopology good = route_rct(region);

    SUBCASE("dangling enabled exit") {
        RctTopology bad = good;
        // enable V_out on a last-row node: no neighbor consumes it
        const auto& band = region.bands[1];
        bad.configs[static_cast<std::size_t>(band[1] - 1)].enable_v_out = true;
        StructuralReport report = verify_topology(bad, region);
        REQUIRE_FALSE(report.clean());
        bool found = false;
        for (const auto& v : report.violations)
            found = found || v.code == "dangling-enabled-exit";
        CHECK(found);
    }

    SUBCASE("undriven input") {
        RctTopology bad = good;
        // drop the edge driving the second node of the first band
        int victim = region.bands[0][1];
        std::erase_if(bad.edges, [&](const TopologyEdge& e) { return e.child == victim; });
        StructuralReport report = verify_topology(bad, region);
        REQUIRE_FALSE(report.clean());
        bool undriven = false, dangling = false, count = false;
        for (const auto& v : report.violations) {
            undriven = undriven || v.code == "undriven-input";
            dangling = dangling || v.code == "dangling-enabled-exit";
            count = count || v.code == "tree-edge-count";
        }
        CHECK(undriven);
        CHECK(dangling); // the parent's H_out now drives nothing
        CHECK(count);
    }

    SUBCASE("edge from a gated exit") {
        RctTopology bad = good;
        bad.configs[0].enable_h_out = false;
        StructuralReport report = verify_topology(bad, region);
        REQUIRE_FALSE(report.clean());
        bool found = false;
        for (const auto& v : report.violations)
            found = found || v.code == "edge-from-gated-exit";
        CHECK(found);
    }

    SUBCASE("input select mismatch") {
        RctTopology bad = good;
        int head = region.bands[1][0]; // driven on V_in
        bad.configs[static_cast<std::size_t>(head - 1)].input_select = InputSelect::h_in;
        StructuralReport report = verify_topology(bad, region);
        REQUIRE_FALSE(report.clean());
        bool found = false;
        for (const auto& v : report.violations)
            found = found || v.code == "input-select-mismatch";
        CHECK(found);
    }

    SUBCASE("non-abutting edge") {
        RctTopology bad = good;
        // rewire the last node to be driven diagonally from the entry
        int victim = region.bands[1][1];
        std::erase_if(bad.edges, [&](const TopologyEdge& e) { return e.child == victim; });
        bad.edges.push_back(TopologyEdge{1, victim, ChordVariant::h_to_h});
        StructuralReport report = verify_topology(bad, region);
        REQUIRE_FALSE(report.clean());
        bool found = false;
        for (const auto& v : report.violations)
            found = found || v.code == "non-abutting-edge";
        CHECK(found);
    }
}

TEST_CASE("DOT output contains every node and edge deterministically") {
    RegionModel region = test::uniform_region(3, 2);
    RctTopology topo = route_rct(region);
    std::string dot = to_dot(topo, region);
    CHECK(dot == to_dot(topo, region));
    for (int id = 1; id <= 6; ++id)
        CHECK(dot.find("n" + std::to_string(id) + " ") != std::string::npos);
    std::size_t arrows = 0;
    for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1))
        ++arrows;
    CHECK(arrows == topo.edges.size());
}

TEST_CASE("mirror symmetry: bottom_left routing is the row mirror of top_left") {
    const int cols = 4, rows = 3;
    RegionModel top = test::uniform_region(cols, rows, "top_left");
    RegionModel bottom = test::uniform_region(cols, rows, "bottom_left");
    RctTopology tt = route_rct(top);
    RctTopology tb = route_rct(bottom);

    auto at = [&](const RegionModel& region, int col, int row) {
        for (const RegionNode& n : region.nodes)
            if (n.col == col && n.row == row)
                return n.id;
        FAIL("node lookup failed");
        return -1;
    };

    REQUIRE(tt.edges.size() == tb.edges.size());
    std::map<std::pair<int, int>, ChordVariant> mirrored;
    for (const TopologyEdge& e : tb.edges) {
        const RegionNode& p = bottom.node(e.parent);
        const RegionNode& c = bottom.node(e.child);
        mirrored[{at(top, p.col, rows - 1 - p.row), at(top, c.col, rows - 1 - c.row)}] =
            e.variant;
    }
    for (const TopologyEdge& e : tt.edges) {
        auto it = mirrored.find({e.parent, e.child});
        REQUIRE(it != mirrored.end());
        CHECK(it->second == e.variant);
    }
}
