#include "rct/floorplan.hpp"

namespace rct {

const char* to_string(EntryCorner c) {
    switch (c) {
    case EntryCorner::top_left: return "top_left";
    case EntryCorner::top_right: return "top_right";
    case EntryCorner::bottom_left: return "bottom_left";
    case EntryCorner::bottom_right: return "bottom_right";
    }
    return "?";
}

const char* to_string(Orientation o) {
    switch (o) {
    case Orientation::top_down_left_right: return "top_down_left_right";
    case Orientation::top_down_right_left: return "top_down_right_left";
    case Orientation::bottom_up_left_right: return "bottom_up_left_right";
    case Orientation::bottom_up_right_left: return "bottom_up_right_left";
    }
    return "?";
}

EntryCorner entry_corner_from_string(const std::string& s) {
    for (int i = 0; i < 4; ++i)
        if (s == to_string(static_cast<EntryCorner>(i)))
            return static_cast<EntryCorner>(i);
    throw SchemaError("entry_corner: unknown value '" + s + "'");
}

Orientation orientation_from_string(const std::string& s) {
    for (int i = 0; i < 4; ++i)
        if (s == to_string(static_cast<Orientation>(i)))
            return static_cast<Orientation>(i);
    throw SchemaError("orientation: unknown value '" + s + "'");
}

Orientation orientation_for_corner(EntryCorner c) {
    switch (c) {
    case EntryCorner::top_left: return Orientation::top_down_left_right;
    case EntryCorner::top_right: return Orientation::top_down_right_left;
    case EntryCorner::bottom_left: return Orientation::bottom_up_left_right;
    case EntryCorner::bottom_right: return Orientation::bottom_up_right_left;
    }
    return Orientation::top_down_left_right;
}

namespace {

// Placements must tile the grid exactly and decompose into horizontal bands
// of uniform block height; anything else is rejected here rather than half
// -supported by the router.
void validate_shape(const Floorplan& fp, const BlockLibrary& lib) {
    std::vector<int> owner(static_cast<std::size_t>(fp.cols) * fp.rows, -1);
    for (std::size_t pi = 0; pi < fp.placements.size(); ++pi) {
        const Placement& p = fp.placements[pi];
        const std::string ppath = "placements[" + std::to_string(pi) + "]";
        const BlockType* bt = lib.find_type(p.type_id);
        if (!bt)
            throw ModelError(ppath + ": unknown type_id '" + p.type_id + "'");
        if (p.col < 0 || p.row < 0 || p.col + bt->width > fp.cols || p.row + bt->height > fp.rows)
            throw ModelError(ppath + ": block extends outside the grid");
        for (int r = p.row; r < p.row + bt->height; ++r)
            for (int c = p.col; c < p.col + bt->width; ++c) {
                int& cell = owner[static_cast<std::size_t>(r) * fp.cols + c];
                if (cell >= 0)
                    throw ModelError(ppath + ": overlaps placements[" + std::to_string(cell) +
                                      "] at cell (" + std::to_string(c) + "," +
                                      std::to_string(r) + ")");
                cell = static_cast<int>(pi);
            }
    }
    for (int r = 0; r < fp.rows; ++r)
        for (int c = 0; c < fp.cols; ++c)
            if (owner[static_cast<std::size_t>(r) * fp.cols + c] < 0)
                throw ModelError("placements: uncovered cell (" + std::to_string(c) + "," +
                                  std::to_string(r) + ")");

    // Complete-rows decomposition.
    int r = 0;
    while (r < fp.rows) {
        int band_height = -1;
        for (const Placement& p : fp.placements) {
            const BlockType& bt = *lib.find_type(p.type_id);
            if (p.row <= r && r < p.row + bt.height) {
                if (p.row != r)
                    throw ModelError("unsupported floorplan shape: block '" + p.type_id +
                                      "' at (" + std::to_string(p.col) + "," +
                                      std::to_string(p.row) + ") straddles the block row at " +
                                      std::to_string(r));
                if (band_height < 0)
                    band_height = bt.height;
                else if (band_height != bt.height)
                    throw ModelError("unsupported floorplan shape: mixed block heights in the "
                                      "block row at grid row " + std::to_string(r));
            }
        }
        r += band_height;
    }
}

} // namespace

Floorplan load_floorplan(const Json& doc, const BlockLibrary& lib) {
    if (!doc.is_object())
        throw SchemaError("floorplan: expected an object");

    Floorplan fp;
    fp.cols = static_cast<int>(require_int(doc, "cols", "floorplan"));
    fp.rows = static_cast<int>(require_int(doc, "rows", "floorplan"));
    if (fp.cols < 1 || fp.rows < 1)
        throw SchemaError("floorplan: cols and rows must be >= 1");

    const Json& placements = require_member(doc, "placements", "floorplan");
    if (!placements.is_array() || placements.empty())
        throw SchemaError("floorplan.placements: expected a non-empty array");
    for (std::size_t i = 0; i < placements.size(); ++i) {
        const std::string ppath = "placements[" + std::to_string(i) + "]";
        const Json& p = placements[i];
        if (!p.is_array() || p.size() != 3 || !p[0].is_string() || !p[1].is_number_integer() ||
            !p[2].is_number_integer())
            throw SchemaError(ppath + ": expected [type_id, col, row]");
        fp.placements.push_back(
            Placement{p[0].get<std::string>(), p[1].get<int>(), p[2].get<int>()});
    }

    fp.entry_corner = entry_corner_from_string(require_string(doc, "entry_corner", "floorplan"));
    fp.orientation = orientation_from_string(require_string(doc, "orientation", "floorplan"));
    if (fp.orientation != orientation_for_corner(fp.entry_corner))
        throw ModelError("floorplan: orientation '" + std::string(to_string(fp.orientation)) +
                          "' does not propagate away from entry corner '" +
                          to_string(fp.entry_corner) + "'");

    fp.corner_of_record = require_string(doc, "corner_of_record", "floorplan");
    if (lib.corner_index(fp.corner_of_record) < 0)
        throw ModelError("floorplan.corner_of_record: unknown corner '" + fp.corner_of_record +
                          "'");

    if (auto it = doc.find("window"); it != doc.end() && !it->is_null()) {
        WindowSpec w;
        w.cols = static_cast<int>(require_int(*it, "cols", "floorplan.window"));
        w.rows = static_cast<int>(require_int(*it, "rows", "floorplan.window"));
        w.stride_cols = static_cast<int>(require_int(*it, "stride_cols", "floorplan.window"));
        w.stride_rows = static_cast<int>(require_int(*it, "stride_rows", "floorplan.window"));
        if (w.cols < 1 || w.rows < 1 || w.stride_cols < 1 || w.stride_rows < 1)
            throw SchemaError("floorplan.window: dimensions and strides must be >= 1");
        fp.window = w;
    }

    validate_shape(fp, lib);

    // Tiling guarantees the entry corner cell is covered; keep the check for
    // floorplans constructed programmatically.
    return fp;
}

Floorplan load_floorplan_file(const std::string& path, const BlockLibrary& lib) {
    return load_floorplan(load_json_file(path), lib);
}

Json floorplan_to_json(const Floorplan& fp) {
    Json doc;
    doc["schema"] = "rct-floorplan/1";
    doc["cols"] = fp.cols;
    doc["rows"] = fp.rows;
    Json placements = Json::array();
    for (const Placement& p : fp.placements)
        placements.push_back(Json::array({p.type_id, p.col, p.row}));
    doc["placements"] = std::move(placements);
    doc["entry_corner"] = to_string(fp.entry_corner);
    doc["orientation"] = to_string(fp.orientation);
    doc["corner_of_record"] = fp.corner_of_record;
    if (fp.window) {
        Json w;
        w["cols"] = fp.window->cols;
        w["rows"] = fp.window->rows;
        w["stride_cols"] = fp.window->stride_cols;
        w["stride_rows"] = fp.window->stride_rows;
        doc["window"] = std::move(w);
    }
    return doc;
}

} // namespace rct
