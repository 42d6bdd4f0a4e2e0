#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rct/library.hpp"

namespace rct {

enum class EntryCorner : int { top_left = 0, top_right = 1, bottom_left = 2, bottom_right = 3 };

// Clock propagation orientation: row sweep direction then column sweep
// direction. Must match the entry corner (the clock propagates away from
// the corner at which it enters).
enum class Orientation : int {
    top_down_left_right = 0,
    top_down_right_left = 1,
    bottom_up_left_right = 2,
    bottom_up_right_left = 3,
};

const char* to_string(EntryCorner c);
const char* to_string(Orientation o);
EntryCorner entry_corner_from_string(const std::string& s);
Orientation orientation_from_string(const std::string& s);
Orientation orientation_for_corner(EntryCorner c);

// Sliding window (in grid cells) within which blocks share combinational
// paths and therefore need their clock arrivals balanced.
struct WindowSpec {
    int cols = 0;
    int rows = 0;
    int stride_cols = 1;
    int stride_rows = 1;

    bool operator==(const WindowSpec&) const = default;
};

struct Placement {
    std::string type_id;
    int col = 0; // leftmost cell, 0-based
    int row = 0; // topmost cell, 0-based

    bool operator==(const Placement&) const = default;
};

struct Floorplan {
    int cols = 0;
    int rows = 0;
    std::vector<Placement> placements;
    EntryCorner entry_corner = EntryCorner::top_left;
    Orientation orientation = Orientation::top_down_left_right;
    std::string corner_of_record;
    std::optional<WindowSpec> window;

    bool operator==(const Floorplan&) const = default;
};

// Parse and validate a floorplan document against a loaded library:
// placements must tile the grid exactly and must form complete block rows
// of uniform height (the shape the router supports).
Floorplan load_floorplan(const Json& doc, const BlockLibrary& lib);
Floorplan load_floorplan_file(const std::string& path, const BlockLibrary& lib);
Json floorplan_to_json(const Floorplan& fp);

} // namespace rct
