#include "doctest.h"

#include "helpers.hpp"

using namespace rct;

TEST_CASE("8x3 floorplan builds a 24-node region with the stated row classes") {
    RegionModel region = test::uniform_region(8, 3);
    REQUIRE(region.node_count() == 24);
    CHECK(region.entry_id() == 1);
    CHECK(region.furthest_id() == 24);

    int edge = 0, middle = 0;
    for (const RegionNode& n : region.nodes)
        (n.row_class == RowClass::edge ? edge : middle)++;
    CHECK(edge == 16);
    CHECK(middle == 8);

    // entry at the top-left cell
    const RegionNode& entry = region.node(1);
    CHECK(entry.col == 0);
    CHECK(entry.row == 0);
}

TEST_CASE("single-node region: entry and furthest coincide") {
    RegionModel region = test::uniform_region(1, 1);
    CHECK(region.node_count() == 1);
    CHECK(region.entry_id() == region.furthest_id());
}

TEST_CASE("2x1 region orders nodes entry first") {
    RegionModel region = test::uniform_region(2, 1);
    REQUIRE(region.node_count() == 2);
    CHECK(region.node(1).col == 0);
    CHECK(region.node(2).col == 1);
}

TEST_CASE("overlapping placements are rejected") {
    BlockLibrary lib = load_block_library(test::uniform_library(0.5, {1.0}));
    Json fp = test::grid_floorplan(2, 1);
    fp["placements"][1] = Json::array({"u", 0, 0});
    try {
        load_floorplan(fp, lib);
        FAIL("expected ModelError");
    } catch (const ModelError& e) {
        CHECK(std::string(e.what()).find("overlaps") != std::string::npos);
    }
}

TEST_CASE("uncovered cells are rejected") {
    BlockLibrary lib = load_block_library(test::uniform_library(0.5, {1.0}));
    Json fp = test::grid_floorplan(2, 2);
    fp["placements"].erase(3);
    try {
        load_floorplan(fp, lib);
        FAIL("expected ModelError");
    } catch (const ModelError& e) {
        CHECK(std::string(e.what()).find("uncovered cell") != std::string::npos);
    }
}

TEST_CASE("unknown type id is rejected") {
    BlockLibrary lib = load_block_library(test::uniform_library(0.5, {1.0}));
    Json fp = test::grid_floorplan(1, 1);
    fp["placements"][0][0] = "nope";
    CHECK_THROWS_AS(load_floorplan(fp, lib), ModelError);
}

TEST_CASE("orientation must propagate away from the entry corner") {
    BlockLibrary lib = load_block_library(test::uniform_library(0.5, {1.0}));
    Json fp = test::grid_floorplan(2, 2);
    fp["orientation"] = "bottom_up_right_left";
    CHECK_THROWS_AS(load_floorplan(fp, lib), ModelError);
}

TEST_CASE("straddling and mixed-height block rows are rejected") {
    // 2x2 grid: one 1x2 block in column 0, two 1x1 blocks in column 1.
    Json lib_doc = test::uniform_library(0.5, {1.0});
    Json tall = lib_doc["types"][0];
    tall["id"] = "tall";
    tall["height"] = 2;
    lib_doc["types"].push_back(tall);
    BlockLibrary lib = load_block_library(lib_doc);

    Json fp;
    fp["cols"] = 2;
    fp["rows"] = 2;
    fp["placements"] = Json::array(
        {Json::array({"tall", 0, 0}), Json::array({"u", 1, 0}), Json::array({"u", 1, 1})});
    fp["entry_corner"] = "top_left";
    fp["orientation"] = "top_down_left_right";
    fp["corner_of_record"] = "TT";
    try {
        load_floorplan(fp, lib);
        FAIL("expected ModelError");
    } catch (const ModelError& e) {
        CHECK(std::string(e.what()).find("unsupported floorplan shape") != std::string::npos);
    }
}

TEST_CASE("space invariance: same type, identical characterization") {
    RegionModel region = test::uniform_region(4, 2);
    const RegionNode& a = region.node(2);
    const RegionNode& b = region.node(7);
    REQUIRE(a.type_index == b.type_index);
    const BlockType& ta = region.library.type(a.type_index);
    const BlockType& tb = region.library.type(b.type_index);
    CHECK(ta == tb);
    CHECK(&ta == &tb); // one characterization shared by all instances
}

TEST_CASE("floorplan round-trips through serialization") {
    BlockLibrary lib =
        load_block_library_file(std::string(FIXTURES_DIR) + "/silago_lib.json");
    Floorplan fp = load_floorplan_file(std::string(FIXTURES_DIR) + "/region_8x3.json", lib);
    Json out = floorplan_to_json(fp);
    Floorplan again = load_floorplan(out, lib);
    CHECK(fp == again);
    CHECK(floorplan_to_json(again) == out);
}

TEST_CASE("region model is identical after a floorplan round-trip") {
    BlockLibrary lib =
        load_block_library_file(std::string(FIXTURES_DIR) + "/silago_lib.json");
    Floorplan fp = load_floorplan_file(std::string(FIXTURES_DIR) + "/region_8x3.json", lib);
    RegionModel r1 = build_region(fp, lib);
    RegionModel r2 = build_region(load_floorplan(floorplan_to_json(fp), lib), lib);
    REQUIRE(r1.node_count() == r2.node_count());
    for (int id = 1; id <= r1.node_count(); ++id) {
        CHECK(r1.node(id).col == r2.node(id).col);
        CHECK(r1.node(id).row == r2.node(id).row);
        CHECK(r1.node(id).type_index == r2.node(id).type_index);
        CHECK(r1.node(id).row_class == r2.node(id).row_class);
    }
}
