#include "rct/library.hpp"

#include <algorithm>

namespace rct {

const char* to_string(ChordVariant v) {
    switch (v) {
    case ChordVariant::h_to_h: return "H_to_H";
    case ChordVariant::h_to_v: return "H_to_V";
    case ChordVariant::v_to_h: return "V_to_H";
    case ChordVariant::v_to_v: return "V_to_V";
    }
    return "?";
}

const char* to_string(RowClass rc) {
    return rc == RowClass::edge ? "edge" : "middle";
}

TimeFs TapLine::tap(int corner, int index1) const {
    if (corner < 0 || corner >= static_cast<int>(delays.size()))
        throw ModelError("tap lookup: corner index out of range");
    const auto& taps = delays[static_cast<std::size_t>(corner)];
    if (index1 < 1 || index1 > static_cast<int>(taps.size()))
        throw ModelError("tap index " + std::to_string(index1) + " out of range 1.." +
                         std::to_string(taps.size()));
    return taps[static_cast<std::size_t>(index1 - 1)];
}

TimeFs BlockType::chord(ChordVariant v, RowClass rc, int corner) const {
    const auto& per_corner = chords[static_cast<std::size_t>(v)][static_cast<std::size_t>(rc)];
    if (corner < 0 || corner >= static_cast<int>(per_corner.size()))
        throw ModelError("block '" + id + "': no " + to_string(v) + "/" + to_string(rc) +
                         " chord delay for corner index " + std::to_string(corner));
    return per_corner[static_cast<std::size_t>(corner)];
}

int BlockLibrary::corner_index(const std::string& name) const {
    for (std::size_t i = 0; i < corners.size(); ++i)
        if (corners[i] == name)
            return static_cast<int>(i);
    return -1;
}

int BlockLibrary::type_index(const std::string& id) const {
    for (std::size_t i = 0; i < types.size(); ++i)
        if (types[i].id == id)
            return static_cast<int>(i);
    return -1;
}

const BlockType* BlockLibrary::find_type(const std::string& id) const {
    int i = type_index(id);
    return i < 0 ? nullptr : &types[static_cast<std::size_t>(i)];
}

namespace {

constexpr ChordVariant kVariants[] = {ChordVariant::h_to_h, ChordVariant::h_to_v,
                                      ChordVariant::v_to_h, ChordVariant::v_to_v};
constexpr RowClass kRowClasses[] = {RowClass::edge, RowClass::middle};

std::vector<std::string> corner_list(const Json& doc) {
    // An explicit top-level "corners" array fixes names and order; otherwise
    // the order of the first type's taps object is used.
    if (auto it = doc.find("corners"); it != doc.end()) {
        if (!it->is_array() || it->empty())
            throw SchemaError("corners: expected a non-empty array");
        std::vector<std::string> names;
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& c = (*it)[i];
            if (!c.is_string())
                throw SchemaError("corners[" + std::to_string(i) + "]: expected a string");
            names.push_back(c.get<std::string>());
        }
        return names;
    }
    const Json& types = require_member(doc, "types", "library");
    if (!types.is_array() || types.empty())
        throw SchemaError("library.types: expected a non-empty array");
    const Json& taps = require_member(types[0], "taps", "types[0]");
    if (!taps.is_object() || taps.empty())
        throw SchemaError("types[0].taps: expected an object keyed by corner");
    std::vector<std::string> names;
    for (auto it = taps.begin(); it != taps.end(); ++it)
        names.push_back(it.key());
    return names;
}

std::vector<TimeFs> per_corner_times(const Json& obj, const std::vector<std::string>& corners,
                                     int scale_digits, const std::string& path) {
    if (!obj.is_object())
        throw SchemaError(path + ": expected an object keyed by corner");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(corners.begin(), corners.end(), it.key()) == corners.end())
            throw ModelError(path + "." + it.key() + ": unknown corner");
    std::vector<TimeFs> out;
    for (const auto& corner : corners) {
        auto it = obj.find(corner);
        if (it == obj.end())
            throw ModelError(path + ": missing corner '" + corner + "'");
        out.emplace_back(scaled_from_json(*it, scale_digits, path + "." + corner));
    }
    return out;
}

} // namespace

BlockLibrary load_block_library(const Json& doc) {
    if (!doc.is_object())
        throw SchemaError("library: expected an object");

    BlockLibrary lib;
    lib.corners = corner_list(doc);

    const Json& types = require_member(doc, "types", "library");
    if (!types.is_array() || types.empty())
        throw SchemaError("library.types: expected a non-empty array");

    for (std::size_t ti = 0; ti < types.size(); ++ti) {
        const std::string tpath = "types[" + std::to_string(ti) + "]";
        const Json& t = types[ti];
        BlockType bt;
        bt.id = require_string(t, "id", tpath);
        if (lib.type_index(bt.id) >= 0)
            throw ModelError(tpath + ".id: duplicate type id '" + bt.id + "'");
        bt.width = static_cast<int>(require_int(t, "width", tpath));
        bt.height = static_cast<int>(require_int(t, "height", tpath));
        if (bt.width < 1 || bt.height < 1)
            throw SchemaError(tpath + ": width and height must be >= 1");

        const Json& chords = require_member(t, "chords", tpath);
        for (ChordVariant v : kVariants) {
            const std::string vpath = tpath + ".chords." + to_string(v);
            const Json& vobj = require_member(chords, to_string(v), tpath + ".chords");
            for (RowClass rc : kRowClasses) {
                const std::string rcpath = vpath + "." + to_string(rc);
                const Json& rcobj = require_member(vobj, to_string(rc), vpath);
                auto delays = per_corner_times(rcobj, lib.corners, 6, rcpath);
                for (std::size_t ci = 0; ci < delays.size(); ++ci)
                    if (delays[ci].fs <= 0)
                        throw ModelError(rcpath + "." + lib.corners[ci] +
                                         ": chord delay must be strictly positive");
                bt.chords[static_cast<std::size_t>(v)][static_cast<std::size_t>(rc)] =
                    std::move(delays);
            }
        }

        const Json& taps = require_member(t, "taps", tpath);
        if (!taps.is_object())
            throw SchemaError(tpath + ".taps: expected an object keyed by corner");
        for (auto it = taps.begin(); it != taps.end(); ++it)
            if (std::find(lib.corners.begin(), lib.corners.end(), it.key()) == lib.corners.end())
                throw ModelError(tpath + ".taps." + it.key() + ": unknown corner");
        int tap_count = -1;
        bt.taps.delays.resize(lib.corners.size());
        for (std::size_t ci = 0; ci < lib.corners.size(); ++ci) {
            const std::string cpath = tpath + ".taps." + lib.corners[ci];
            auto it = taps.find(lib.corners[ci]);
            if (it == taps.end())
                throw ModelError(tpath + ".taps: missing corner '" + lib.corners[ci] + "'");
            if (!it->is_array() || it->empty())
                throw SchemaError(cpath + ": expected a non-empty array");
            std::vector<TimeFs> line;
            for (std::size_t k = 0; k < it->size(); ++k) {
                TimeFs d{scaled_from_json((*it)[k], 6, cpath + "[" + std::to_string(k) + "]")};
                if (d.fs <= 0)
                    throw ModelError(cpath + "[" + std::to_string(k) +
                                     "]: tap delay must be strictly positive");
                if (!line.empty() && d <= line.back())
                    throw ModelError(cpath + "[" + std::to_string(k) +
                                     "]: non-monotone tap line (" + format_ns(d) +
                                      " ns after " + format_ns(line.back()) + " ns)");
                line.push_back(d);
            }
            if (tap_count < 0)
                tap_count = static_cast<int>(line.size());
            else if (tap_count != static_cast<int>(line.size()))
                throw ModelError(cpath + ": tap count differs between corners");
            bt.taps.delays[ci] = std::move(line);
        }

        bt.fragment_cap_af =
            scaled_from_json(require_member(t, "fragment_cap_ff", tpath), 3,
                             tpath + ".fragment_cap_ff");
        bt.lct_cap_af =
            scaled_from_json(require_member(t, "lct_cap_ff", tpath), 3, tpath + ".lct_cap_ff");
        if (bt.fragment_cap_af < 0 || bt.lct_cap_af < 0)
            throw SchemaError(tpath + ": capacitance must be non-negative");

        bt.slew_at_lct_entry =
            per_corner_times(require_member(t, "slew_ps", tpath), lib.corners, 3,
                             tpath + ".slew_ps");
        bt.max_slew_rule =
            TimeFs{scaled_from_json(require_member(t, "max_slew_ps", tpath), 3,
                                    tpath + ".max_slew_ps")};

        lib.types.push_back(std::move(bt));
    }
    return lib;
}

BlockLibrary load_block_library_file(const std::string& path) {
    return load_block_library(load_json_file(path));
}

Json library_to_json(const BlockLibrary& lib) {
    Json doc;
    doc["schema"] = "rct-library/1";
    doc["corners"] = lib.corners;
    Json types = Json::array();
    for (const auto& t : lib.types) {
        Json jt;
        jt["id"] = t.id;
        jt["width"] = t.width;
        jt["height"] = t.height;
        Json chords;
        for (ChordVariant v : kVariants) {
            Json vobj;
            for (RowClass rc : kRowClasses) {
                Json rcobj;
                const auto& per_corner =
                    t.chords[static_cast<std::size_t>(v)][static_cast<std::size_t>(rc)];
                for (std::size_t ci = 0; ci < lib.corners.size(); ++ci)
                    rcobj[lib.corners[ci]] = format_ns(per_corner[ci]);
                vobj[to_string(rc)] = std::move(rcobj);
            }
            chords[to_string(v)] = std::move(vobj);
        }
        jt["chords"] = std::move(chords);
        Json taps;
        for (std::size_t ci = 0; ci < lib.corners.size(); ++ci) {
            Json line = Json::array();
            for (TimeFs d : t.taps.delays[ci])
                line.push_back(format_ns(d));
            taps[lib.corners[ci]] = std::move(line);
        }
        jt["taps"] = std::move(taps);
        jt["fragment_cap_ff"] = format_ff(t.fragment_cap_af);
        jt["lct_cap_ff"] = format_ff(t.lct_cap_af);
        Json slew;
        for (std::size_t ci = 0; ci < lib.corners.size(); ++ci)
            slew[lib.corners[ci]] = format_ps(t.slew_at_lct_entry[ci]);
        jt["slew_ps"] = std::move(slew);
        jt["max_slew_ps"] = format_ps(t.max_slew_rule);
        types.push_back(std::move(jt));
    }
    doc["types"] = std::move(types);
    return doc;
}

} // namespace rct
