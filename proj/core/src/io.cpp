#include "tessella/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace tessella {

namespace {

using nlohmann::json;

json cells_to_json(const std::vector<Cell>& cells) {
  json arr = json::array();
  for (const Cell& c : cells) {
    json jc = json::array();
    for (int i = 0; i < c.dim; ++i) jc.push_back(c[i]);
    arr.push_back(std::move(jc));
  }
  return arr;
}

std::vector<Cell> cells_from_json(const json& arr, int dim) {
  if (!arr.is_array()) throw ParseError("\"cells\" must be an array");
  std::vector<Cell> cells;
  cells.reserve(arr.size());
  for (const json& jc : arr) {
    if (!jc.is_array() || jc.size() != static_cast<std::size_t>(dim))
      throw ParseError("cell with inconsistent dimension (expected " + std::to_string(dim) + ")");
    Cell c = Cell::zero(dim);
    for (int i = 0; i < dim; ++i) {
      if (!jc[static_cast<std::size_t>(i)].is_number_integer()) throw ParseError("cell coordinates must be integers");
      c[i] = jc[static_cast<std::size_t>(i)].get<int>();
    }
    cells.push_back(c);
  }
  return cells;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

int json_dim(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("missing integer \"dim\"");
  int dim = j["dim"].get<int>();
  if (dim < 1 || dim > kMaxDim) throw ParseError("\"dim\" out of range [1, " + std::to_string(kMaxDim) + "]");
  return dim;
}

}  // namespace

Polyomino parse_region_ascii(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().find('#') == std::string::npos) lines.pop_back();
  std::size_t skip = 0;
  while (skip < lines.size() && lines[skip].find('#') == std::string::npos) ++skip;
  lines.erase(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(skip));
  if (lines.empty()) throw ParseError("empty region");
  int rows = static_cast<int>(lines.size());
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r) {
    const std::string& row = lines[static_cast<std::size_t>(r)];
    for (int c = 0; c < static_cast<int>(row.size()); ++c) {
      char ch = row[static_cast<std::size_t>(c)];
      if (ch == '#')
        cells.push_back(Cell::xy(c, rows - 1 - r));
      else if (ch != '.' && ch != ' ')
        throw ParseError(std::string("unexpected character '") + ch + "' in region text");
    }
  }
  if (cells.empty()) throw ParseError("empty region");
  return Polyomino(2, std::move(cells));
}

std::string emit_region_ascii(const Polyomino& region) {
  if (region.dim() != 2) throw std::invalid_argument("ascii region format is 2D only");
  if (region.empty()) throw std::invalid_argument("cannot emit an empty region");
  auto [mn, mx] = region.bounding_box();
  std::string out;
  for (int y = mx.y(); y >= mn.y(); --y) {
    for (int x = mn.x(); x <= mx.x(); ++x) out += region.contains(Cell::xy(x, y)) ? '#' : '.';
    out += '\n';
  }
  return out;
}

Polyomino parse_region_json(const std::string& text) {
  json j = parse_json_text(text);
  if (!j.is_object()) throw ParseError("region JSON must be an object");
  int dim = json_dim(j);
  if (!j.contains("cells")) throw ParseError("missing \"cells\"");
  std::vector<Cell> cells = cells_from_json(j["cells"], dim);
  if (cells.empty()) throw ParseError("empty region");
  try {
    return Polyomino(dim, std::move(cells));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_region_json(const Polyomino& region) {
  json j;
  j["dim"] = region.dim();
  j["cells"] = cells_to_json(region.cells());
  return j.dump();
}

Polyomino parse_region(const std::string& text, TextFormat format) {
  return format == TextFormat::ascii ? parse_region_ascii(text) : parse_region_json(text);
}

std::string emit_region(const Polyomino& region, TextFormat format) {
  return format == TextFormat::ascii ? emit_region_ascii(region) : emit_region_json(region);
}

std::string emit_tiling_json(const Tiling& t) {
  json j;
  j["region"] = parse_json_text(emit_region_json(t.region));
  json tiles = json::array();
  for (const Placement& p : t.placements) {
    json jt;
    jt["name"] = t.tiles[static_cast<std::size_t>(p.tile_index)].name();
    std::vector<Cell> cells = p.covered_cells();
    std::sort(cells.begin(), cells.end(), scan_less);
    jt["cells"] = cells_to_json(cells);
    tiles.push_back(std::move(jt));
  }
  j["tiles"] = std::move(tiles);
  return j.dump();
}

namespace {

// Resolve a block of absolute cells to a placement of the named (or any)
// matching tile of the set. Throws ParseError only for structural problems;
// shape mismatches become inadmissible placements so validation reports them.
Placement block_to_placement(const std::vector<Cell>& block, const TileSet& set, const VariantCatalog& catalog,
                             const std::string& name) {
  Cell mn = block.front();
  for (const Cell& c : block)
    for (int i = 0; i < set.dim; ++i) mn[i] = std::min(mn[i], c[i]);
  std::vector<Cell> rel;
  rel.reserve(block.size());
  for (const Cell& c : block) rel.push_back(c - mn);
  Tile shape = Tile::unchecked(set.dim, std::move(rel), name);
  const VariantCatalog::Info* info = catalog.find(shape);
  if (info && (name.empty() || set.tiles[static_cast<std::size_t>(info->tile_index)].name() == name))
    return Placement{info->tile_index, info->variant, mn};
  // Unknown shape or name mismatch: attribute it by name when possible so
  // validate_tiling flags the variant instead of this parser guessing.
  int tile_index = 0;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set.tiles[i].name() == name) tile_index = static_cast<int>(i);
  return Placement{tile_index, shape, mn};
}

}  // namespace

Tiling parse_tiling_json(const std::string& text, const TileSet& set) {
  json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("region") || !j.contains("tiles")) throw ParseError("tiling JSON must have \"region\" and \"tiles\"");
  Tiling t;
  t.region = parse_region_json(j["region"].dump());
  t.tiles = set;
  if (!j["tiles"].is_array()) throw ParseError("\"tiles\" must be an array");
  VariantCatalog catalog = VariantCatalog::build(set);
  for (const json& jt : j["tiles"]) {
    if (!jt.is_object() || !jt.contains("cells")) throw ParseError("each tile entry needs \"cells\"");
    std::string name = jt.contains("name") && jt["name"].is_string() ? jt["name"].get<std::string>() : "";
    std::vector<Cell> block = cells_from_json(jt["cells"], set.dim);
    if (block.empty()) throw ParseError("tile entry with no cells");
    t.placements.push_back(block_to_placement(block, set, catalog, name));
  }
  return t;
}

Tiling parse_tiling_ascii(const std::string& text, const TileSet& set) {
  if (set.dim != 2) throw std::invalid_argument("ascii tilings are 2D only");
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty()) {
    const std::string& l = lines.back();
    if (l.find_first_not_of(" .") == std::string::npos) lines.pop_back();
    else break;
  }
  if (lines.empty()) throw ParseError("empty tiling");
  int rows = static_cast<int>(lines.size());
  std::map<Cell, char> letter;
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r) {
    const std::string& row = lines[static_cast<std::size_t>(r)];
    for (int c = 0; c < static_cast<int>(row.size()); ++c) {
      char ch = row[static_cast<std::size_t>(c)];
      if (ch == '.' || ch == ' ') continue;
      if (!std::isalnum(static_cast<unsigned char>(ch))) throw ParseError(std::string("unexpected character '") + ch + "' in tiling text");
      Cell cell = Cell::xy(c, rows - 1 - r);
      letter[cell] = ch;
      cells.push_back(cell);
    }
  }
  if (cells.empty()) throw ParseError("empty tiling");
  Tiling t;
  t.region = Polyomino(2, cells);
  t.tiles = set;
  VariantCatalog catalog = VariantCatalog::build(set);
  // connected same-letter components, discovered in scan order
  std::map<Cell, bool> used;
  for (const Cell& c : t.region.cells()) {
    if (used[c]) continue;
    char ch = letter[c];
    std::vector<Cell> block{c};
    used[c] = true;
    std::vector<Cell> stack{c};
    while (!stack.empty()) {
      Cell cur = stack.back();
      stack.pop_back();
      for (const Cell& nb : face_neighbors(cur)) {
        auto it = letter.find(nb);
        if (it == letter.end() || it->second != ch || used[nb]) continue;
        used[nb] = true;
        block.push_back(nb);
        stack.push_back(nb);
      }
    }
    t.placements.push_back(block_to_placement(block, set, catalog, ""));
  }
  return t;
}

TileSet parse_tileset_json(const std::string& text) {
  json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("tiles")) throw ParseError("tile set JSON must have \"tiles\"");
  int dim = json_dim(j);
  Symmetry sym = Symmetry::rotations;
  if (j.contains("symmetry")) {
    if (!j["symmetry"].is_string()) throw ParseError("\"symmetry\" must be a string");
    std::string s = j["symmetry"].get<std::string>();
    if (s == "fixed") sym = Symmetry::fixed;
    else if (s == "rotations") sym = Symmetry::rotations;
    else if (s == "rotations-and-reflections") sym = Symmetry::rotations_reflections;
    else throw ParseError("unknown symmetry \"" + s + "\"");
  }
  std::vector<Tile> tiles;
  for (const json& jt : j["tiles"]) {
    if (!jt.is_object() || !jt.contains("cells")) throw ParseError("each tile needs \"cells\"");
    std::string name = jt.contains("name") && jt["name"].is_string() ? jt["name"].get<std::string>() : "";
    std::vector<Cell> cells = cells_from_json(jt["cells"], dim);
    try {
      tiles.emplace_back(dim, std::move(cells), name);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad tile") + (name.empty() ? "" : " \"" + name + "\"") + ": " + e.what());
    }
  }
  try {
    return TileSet::make(dim, sym, std::move(tiles));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_tileset_json(const TileSet& set) {
  json j;
  j["dim"] = set.dim;
  j["symmetry"] = to_string(set.symmetry);
  json tiles = json::array();
  for (const Tile& t : set.tiles) {
    json jt;
    jt["name"] = t.name();
    jt["cells"] = cells_to_json(t.cells());
    tiles.push_back(std::move(jt));
  }
  j["tiles"] = std::move(tiles);
  return j.dump();
}

}  // namespace tessella
