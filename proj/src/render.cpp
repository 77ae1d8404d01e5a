#include "turnover/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace turnover {
namespace {

using hyp::IsometryMatrix;
using hyp::Point;

constexpr int kSamplesPerSide = 6;

struct Tile {
  IsometryMatrix placement;
  int face = 0;
  int depth = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  throw std::runtime_error("render style: expected a quoted string, got " + v);
}

double to_number(const std::string& v) {
  std::size_t used = 0;
  const double x = std::stod(v, &used);
  if (used != v.size()) throw std::runtime_error("render style: bad number " + v);
  return x;
}

class SvgWriter {
 public:
  explicit SvgWriter(int size) : half_(size / 2.0) {}

  std::string xy(Point z) const {
    const Point q = hyp::to_disk(z);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", half_ * (1 + q.real()), half_ * (1 - q.imag()));
    return buf;
  }

  static std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
  }

 private:
  double half_;
};

}  // namespace

RenderStyle parse_render_style(const std::string& text) {
  RenderStyle style;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("render style: expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "size") style.size = static_cast<int>(to_number(value));
    else if (key == "background") style.background = unquote(value);
    else if (key == "disk_stroke") style.disk_stroke = unquote(value);
    else if (key == "tile_fill") style.tile_fill = unquote(value);
    else if (key == "tile_stroke") style.tile_stroke = unquote(value);
    else if (key == "reference_fill") style.reference_fill = unquote(value);
    else if (key == "reference_stroke") style.reference_stroke = unquote(value);
    else if (key == "label_color") style.label_color = unquote(value);
    else if (key == "tile_stroke_width") style.tile_stroke_width = to_number(value);
    else if (key == "reference_stroke_width") style.reference_stroke_width = to_number(value);
    else if (key == "curve_stroke_width") style.curve_stroke_width = to_number(value);
    else if (key == "cutoff_radius") style.cutoff_radius = to_number(value);
    else if (key == "labels") {
      if (value != "true" && value != "false") throw std::runtime_error("render style: labels must be a boolean");
      style.labels = value == "true";
    } else if (key == "curve_colors") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
        throw std::runtime_error("render style: curve_colors must be an array");
      }
      style.curve_colors.clear();
      std::istringstream items(value.substr(1, value.size() - 2));
      std::string item;
      while (std::getline(items, item, ',')) {
        if (!trim(item).empty()) style.curve_colors.push_back(unquote(trim(item)));
      }
      if (style.curve_colors.empty()) throw std::runtime_error("render style: no curve colors");
    } else {
      throw std::runtime_error("render style: unknown key " + key);
    }
  }
  if (style.size <= 0) throw std::runtime_error("render style: size must be positive");
  return style;
}

RenderStyle load_render_style(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("render style: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_render_style(buf.str());
}

std::string render_svg(const SurfaceComplex& complex, const hyp::PolygonGeometry& poly,
                       const std::vector<CombinatorialCurve>& curves, int depth,
                       const RenderStyle& style, const std::optional<std::string>& timestamp) {
  if (depth < 0 || depth > kMaxRenderDepth) {
    throw std::invalid_argument("render_svg: depth must be in [0, " +
                                std::to_string(kMaxRenderDepth) + "]");
  }
  const int sides = complex.sides_per_face();

  // Breadth-first over the tiling; tiles are identified by where their
  // center lands, since with p1 = 2 two sides lead to the same neighbor.
  std::vector<Tile> tiles{{IsometryMatrix::identity(), 0, 0}};
  std::map<std::pair<long long, long long>, int> seen;
  auto key = [](Point z) {
    const Point q = hyp::to_disk(z);
    return std::pair{std::llround(q.real() * 1e8), std::llround(q.imag() * 1e8)};
  };
  seen.emplace(key(poly.center), 0);
  for (std::size_t at = 0; at < tiles.size(); ++at) {
    const Tile tile = tiles[at];
    if (tile.depth == depth) continue;
    for (int s = 0; s < sides; ++s) {
      const SlotRef across = complex.partner({tile.face, s});
      const IsometryMatrix next = tile.placement * hyp::side_transition(poly, s, across.index);
      const Point c = next.apply(poly.center);
      if (std::abs(hyp::to_disk(c)) > style.cutoff_radius) continue;
      if (!seen.emplace(key(c), static_cast<int>(tiles.size())).second) continue;
      tiles.push_back({next, across.face, tile.depth + 1});
    }
  }

  const SvgWriter w(style.size);
  const double half = style.size / 2.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (timestamp) out << "<!-- generated " << *timestamp << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.size
      << "\" height=\"" << style.size << "\" viewBox=\"0 0 " << style.size << ' ' << style.size
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"" << style.background << "\"/>\n";
  out << "<circle class=\"boundary\" cx=\"" << SvgWriter::num(half) << "\" cy=\""
      << SvgWriter::num(half) << "\" r=\"" << SvgWriter::num(half) << "\" fill=\"none\" stroke=\""
      << style.disk_stroke << "\" stroke-width=\"1.5\"/>\n";

  out << "<g class=\"tiles\">\n";
  for (std::size_t t = 0; t < tiles.size(); ++t) {
    const Tile& tile = tiles[t];
    const bool reference = t == 0;
    out << "<polygon class=\"" << (reference ? "tile reference" : "tile") << "\" data-face=\""
        << tile.face << "\" points=\"";
    bool first = true;
    for (int s = 0; s < sides; ++s) {
      const auto pts = hyp::geodesic_samples(poly.vertices[s], poly.vertices[(s + 1) % sides],
                                             kSamplesPerSide);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        out << (first ? "" : " ") << w.xy(tile.placement.apply(pts[i]));
        first = false;
      }
    }
    out << "\" fill=\"" << (reference ? style.reference_fill : style.tile_fill) << "\" stroke=\""
        << (reference ? style.reference_stroke : style.tile_stroke) << "\" stroke-width=\""
        << SvgWriter::num(reference ? style.reference_stroke_width : style.tile_stroke_width)
        << "\"/>\n";
  }
  out << "</g>\n";

  if (style.labels) {
    out << "<g class=\"labels\" fill=\"" << style.label_color
        << "\" font-family=\"sans-serif\" text-anchor=\"middle\">\n";
    for (const Tile& tile : tiles) {
      const Point q = hyp::to_disk(tile.placement.apply(poly.center));
      const double scale = 1 - std::norm(q);  // conformal factor of the disk
      const std::string at = w.xy(tile.placement.apply(poly.center));
      const auto comma = at.find(',');
      out << "<text x=\"" << at.substr(0, comma) << "\" y=\"" << at.substr(comma + 1)
          << "\" font-size=\"" << SvgWriter::num(std::max(2.0, 0.03 * style.size * scale))
          << "\">" << tile.face << "</text>\n";
    }
    out << "</g>\n";
  }

  out << "<g class=\"curves\" fill=\"none\">\n";
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& curve = curves[ci];
    if (curve.segments.empty()) continue;
    const int start_face = curve.segments.front().face;
    const Tile* start = nullptr;
    for (const Tile& tile : tiles) {
      if (tile.face == start_face) {
        start = &tile;
        break;
      }
    }
    if (start == nullptr) continue;
    const auto dev = hyp::develop_curve(complex, poly, curve);
    out << "<polyline class=\"curve\" data-curve=\"" << ci << "\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < curve.segments.size(); ++i) {
      const auto& s = curve.segments[i];
      const IsometryMatrix m = start->placement * dev.placements[i];
      const auto pts = hyp::geodesic_samples(poly.slot_point(s.entry_slot, 0.5),
                                             poly.slot_point(s.exit_slot, 0.5), 16);
      for (std::size_t j = (i == 0 ? 0 : 1); j < pts.size(); ++j) {
        out << (first ? "" : " ") << w.xy(m.apply(pts[j]));
        first = false;
      }
    }
    out << "\" stroke=\"" << style.curve_colors[ci % style.curve_colors.size()]
        << "\" stroke-width=\"" << SvgWriter::num(style.curve_stroke_width) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace turnover
