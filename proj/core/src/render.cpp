#include "tessella/render.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tessella {

namespace {

constexpr const char* kCycle = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
constexpr int kCycleLen = 62;

std::unordered_map<Cell, int, CellHash> owner_map(const Tiling& t) {
  std::unordered_map<Cell, int, CellHash> owner;
  owner.reserve(t.region.size() * 2);
  for (std::size_t i = 0; i < t.placements.size(); ++i)
    for (const Cell& c : t.placements[i].covered_cells()) owner[c] = static_cast<int>(i);
  return owner;
}

}  // namespace

std::string render_ascii(const Tiling& t) {
  if (t.region.dim() != 2) throw std::invalid_argument("ascii rendering is 2D only");
  if (t.region.empty()) throw std::invalid_argument("empty region");
  auto owner = owner_map(t);

  // greedy letters: smallest cycle entry unused among already-colored
  // face-adjacent placements
  std::vector<int> color(t.placements.size(), -1);
  for (std::size_t i = 0; i < t.placements.size(); ++i) {
    std::unordered_set<int> used;
    for (const Cell& c : t.placements[i].covered_cells())
      for (const Cell& nb : face_neighbors(c)) {
        auto it = owner.find(nb);
        if (it != owner.end() && it->second != static_cast<int>(i) && color[static_cast<std::size_t>(it->second)] >= 0)
          used.insert(color[static_cast<std::size_t>(it->second)]);
      }
    int pick = 0;
    while (used.count(pick % kCycleLen) && pick < kCycleLen) ++pick;
    color[i] = pick % kCycleLen;
  }

  auto [mn, mx] = t.region.bounding_box();
  std::string out;
  for (int y = mx.y(); y >= mn.y(); --y) {
    for (int x = mn.x(); x <= mx.x(); ++x) {
      Cell c = Cell::xy(x, y);
      if (!t.region.contains(c)) {
        out += '.';
        continue;
      }
      auto it = owner.find(c);
      out += it == owner.end() ? '?' : kCycle[static_cast<std::size_t>(color[static_cast<std::size_t>(it->second)])];
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const Tiling& t) {
  if (t.region.dim() != 2) throw std::invalid_argument("svg rendering is 2D only");
  if (t.region.empty()) throw std::invalid_argument("empty region");
  auto owner = owner_map(t);
  auto [mn, mx] = t.region.bounding_box();
  const int unit = 16;
  int w = (mx.x() - mn.x() + 1) * unit;
  int h = (mx.y() - mn.y() + 1) * unit;
  auto px = [&](int x) { return (x - mn.x()) * unit; };
  auto py = [&](int y) { return (mx.y() - y) * unit; };  // svg y grows downward

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
                    std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n";
  for (const Cell& c : t.region.cells()) {
    auto it = owner.find(c);
    std::string fill = "#dddddd";
    if (it != owner.end()) {
      int hue = (it->second * 47) % 360;
      fill = "hsl(" + std::to_string(hue) + ",65%,72%)";
    }
    svg += "<rect x=\"" + std::to_string(px(c.x())) + "\" y=\"" + std::to_string(py(c.y())) + "\" width=\"" +
           std::to_string(unit) + "\" height=\"" + std::to_string(unit) + "\" fill=\"" + fill +
           "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  }
  std::string path;
  for (const Cell& c : t.region.cells()) {
    auto it = owner.find(c);
    int id = it == owner.end() ? -1 : it->second;
    auto differs = [&](int dx, int dy) {
      auto jt = owner.find(Cell::xy(c.x() + dx, c.y() + dy));
      return jt == owner.end() || jt->second != id;
    };
    int x0 = px(c.x()), y0 = py(c.y());
    if (differs(0, 1)) path += "M" + std::to_string(x0) + " " + std::to_string(y0) + "h" + std::to_string(unit);
    if (differs(0, -1)) path += "M" + std::to_string(x0) + " " + std::to_string(y0 + unit) + "h" + std::to_string(unit);
    if (differs(-1, 0)) path += "M" + std::to_string(x0) + " " + std::to_string(y0) + "v" + std::to_string(unit);
    if (differs(1, 0)) path += "M" + std::to_string(x0 + unit) + " " + std::to_string(y0) + "v" + std::to_string(unit);
  }
  svg += "<path d=\"" + path + "\" stroke=\"#222222\" stroke-width=\"2\" fill=\"none\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace tessella
