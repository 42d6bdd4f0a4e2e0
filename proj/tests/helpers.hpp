#pragma once

#include <random>
#include <string>
#include <vector>

#include "rct/delay.hpp"
#include "rct/region.hpp"
#include "rct/topology.hpp"

namespace rct::test {

// Library with one unit-square type, a single TT corner, every chord equal
// to `chord_ns` and the given tap delays.
inline Json uniform_library(double chord_ns, const std::vector<double>& taps_ns) {
    Json chords;
    for (const char* v : {"H_to_H", "H_to_V", "V_to_H", "V_to_V"}) {
        Json cell;
        cell["edge"]["TT"] = chord_ns;
        cell["middle"]["TT"] = chord_ns;
        chords[v] = cell;
    }
    Json type;
    type["id"] = "u";
    type["width"] = 1;
    type["height"] = 1;
    type["chords"] = chords;
    type["taps"]["TT"] = taps_ns;
    type["fragment_cap_ff"] = 10;
    type["lct_cap_ff"] = 90;
    type["slew_ps"]["TT"] = 50;
    type["max_slew_ps"] = 100;

    Json lib;
    lib["corners"] = Json::array({"TT"});
    lib["types"] = Json::array({type});
    return lib;
}

inline Json grid_floorplan(int cols, int rows, const std::string& entry = "top_left") {
    Json fp;
    fp["cols"] = cols;
    fp["rows"] = rows;
    Json placements = Json::array();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            placements.push_back(Json::array({"u", c, r}));
    fp["placements"] = placements;
    fp["entry_corner"] = entry;
    fp["orientation"] = to_string(orientation_for_corner(entry_corner_from_string(entry)));
    fp["corner_of_record"] = "TT";
    return fp;
}

inline RegionModel uniform_region(int cols, int rows, const std::string& entry = "top_left",
                                  double chord_ns = 0.5,
                                  std::vector<double> taps_ns = {1.0, 1.2, 1.4, 1.6, 1.8, 2.0}) {
    BlockLibrary lib = load_block_library(uniform_library(chord_ns, taps_ns));
    Floorplan fp = load_floorplan(grid_floorplan(cols, rows, entry), lib);
    return build_region(fp, lib);
}

// Single-corner tap line from femtosecond values.
inline TapLine tap_line(std::vector<std::int64_t> fs) {
    TapLine t;
    t.delays.emplace_back();
    for (std::int64_t v : fs)
        t.delays[0].emplace_back(v);
    return t;
}

inline DelayProfile profile_fs(std::vector<std::int64_t> fs) {
    DelayProfile p;
    for (std::int64_t v : fs)
        p.natural.emplace_back(v);
    return p;
}

// Random instance for optimizer properties: entry at 0, positive natural
// delays with the maximum moved to the last node, and a strictly
// increasing tap line.
struct RandomInstance {
    DelayProfile profile;
    TapLine taps;
};

inline RandomInstance random_instance(std::mt19937& rng, int max_n = 6, int max_m = 8) {
    std::uniform_int_distribution<int> n_dist(2, max_n);
    std::uniform_int_distribution<int> m_dist(1, max_m);
    int n = n_dist(rng);
    int m = m_dist(rng);

    std::uniform_int_distribution<std::int64_t> nat_dist(1, 2'000'000);
    std::vector<std::int64_t> nat{0};
    for (int i = 1; i < n; ++i)
        nat.push_back(nat_dist(rng));
    auto max_it = std::max_element(nat.begin() + 1, nat.end());
    std::swap(*max_it, nat.back());

    std::uniform_int_distribution<std::int64_t> start_dist(0, 2'000'000);
    std::uniform_int_distribution<std::int64_t> step_dist(1, 300'000);
    std::vector<std::int64_t> taps{start_dist(rng) + 1};
    for (int i = 1; i < m; ++i)
        taps.push_back(taps.back() + step_dist(rng));

    return RandomInstance{profile_fs(nat), tap_line(taps)};
}

} // namespace rct::test
