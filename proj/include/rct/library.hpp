#pragma once

#include <array>
#include <string>
#include <vector>

#include "rct/json_util.hpp"
#include "rct/time.hpp"

namespace rct {

// The four chord variants of a block's RCT fragment: clock input edge
// (H = horizontal entry, V = vertical entry) paired with the edge it is
// propagated on.
enum class ChordVariant : int { h_to_h = 0, h_to_v = 1, v_to_h = 2, v_to_v = 3 };
inline constexpr int kChordVariantCount = 4;

enum class RowClass : int { edge = 0, middle = 1 };
inline constexpr int kRowClassCount = 2;

const char* to_string(ChordVariant v);
const char* to_string(RowClass rc);

// Programmable delay line: strictly increasing tap delays, characterized
// per corner. Tap indices are 1-based throughout.
struct TapLine {
    std::vector<std::vector<TimeFs>> delays; // [corner][tap]

    int tap_count() const { return delays.empty() ? 0 : static_cast<int>(delays[0].size()); }
    TimeFs tap(int corner, int index1) const;
    TimeFs min_tap(int corner) const { return tap(corner, 1); }
    TimeFs max_tap(int corner) const { return tap(corner, tap_count()); }
    TimeFs range(int corner) const { return max_tap(corner) - min_tap(corner); }

    bool operator==(const TapLine&) const = default;
};

// A characterized SiLago block type. Two instances of the same type are
// characterized identically; position only selects the row class used for
// chord lookups.
struct BlockType {
    std::string id;
    int width = 1;  // grid cells
    int height = 1; // grid cells
    std::array<std::array<std::vector<TimeFs>, kRowClassCount>, kChordVariantCount>
        chords; // [variant][row class] -> delay per corner
    TapLine taps;
    std::int64_t fragment_cap_af = 0; // RCT fragment switching capacitance
    std::int64_t lct_cap_af = 0;      // local clock tree capacitance behind the tap
    std::vector<TimeFs> slew_at_lct_entry; // per corner
    TimeFs max_slew_rule{0};

    TimeFs chord(ChordVariant v, RowClass rc, int corner) const;

    bool operator==(const BlockType&) const = default;
};

struct BlockLibrary {
    std::vector<std::string> corners; // declaration order fixes report order
    std::vector<BlockType> types;

    int corner_count() const { return static_cast<int>(corners.size()); }
    int corner_index(const std::string& name) const;
    int type_index(const std::string& id) const;
    const BlockType& type(int index) const { return types[static_cast<std::size_t>(index)]; }
    const BlockType* find_type(const std::string& id) const;

    bool operator==(const BlockLibrary&) const = default;
};

// Parse and validate a library document. Errors carry the JSON path of the
// offending value.
BlockLibrary load_block_library(const Json& doc);
BlockLibrary load_block_library_file(const std::string& path);
Json library_to_json(const BlockLibrary& lib);

} // namespace rct
