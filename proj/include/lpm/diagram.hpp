#pragma once

// Grid pictures of M[U, L]. A basis B is the monotone path from (0,0) to
// (n-k, k) whose i-th step is North iff i is in B; the diagram is the region
// between the paths of U (above) and L (below).

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lpm/lattice_path_matroid.hpp"
#include "lpm/lattice_point.hpp"

namespace lpm {

struct DiagramArtifact {
  std::string ascii;
  std::string svg;
};

/// Vertices (east, north) visited by the path of B.
inline std::vector<LatticePoint> path_points(const GroundSubset& b) {
  std::vector<LatticePoint> out{{{0, 0}}};
  int east = 0, north = 0;
  for (int i = 1; i <= b.n(); ++i) {
    (b.contains(i) ? north : east)++;
    out.push_back({{east, north}});
  }
  return out;
}

/// All lattice points (east, north) of the region, sorted. A point with
/// t = east + north lies in the region iff |L ∩ [t]| <= north <= |U ∩ [t]|.
inline std::vector<LatticePoint> diagram_points(const Lpm& m) {
  std::vector<LatticePoint> out;
  int up = 0, low = 0;
  for (int t = 0; t <= m.n(); ++t) {
    if (t > 0) {
      up += m.upper().contains(t);
      low += m.lower().contains(t);
    }
    for (int north = low; north <= up; ++north) out.push_back({{t - north, north}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

class RegionGrid {
 public:
  explicit RegionGrid(const Lpm& m) : width_(m.corank()), height_(m.rank()) {
    inside_.assign(static_cast<std::size_t>((width_ + 1) * (height_ + 1)), false);
    for (const auto& p : diagram_points(m)) inside_[index(p.coords[0], p.coords[1])] = true;
  }
  int width() const { return width_; }
  int height() const { return height_; }
  bool inside(int x, int y) const {
    return x >= 0 && y >= 0 && x <= width_ && y <= height_ && inside_[index(x, y)];
  }

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y * (width_ + 1) + x); }
  int width_, height_;
  std::vector<bool> inside_;
};

}  // namespace detail

/// Text rendering. Lines run from the top row (north = k) down to 0; an East
/// step at height y is `__` on line y and a North step from y is `|` on line y.
/// Steps of the overlay basis are drawn as `==` and `!`.
inline std::string render_ascii(const Lpm& m, const std::optional<GroundSubset>& overlay = std::nullopt) {
  detail::RegionGrid grid(m);
  const int w = grid.width(), h = grid.height();
  std::vector<std::string> lines(static_cast<std::size_t>(h + 1), std::string(static_cast<std::size_t>(2 * w + 1), ' '));
  auto put = [&](int y, int col, char c) { lines[static_cast<std::size_t>(y)][static_cast<std::size_t>(col)] = c; };

  for (int y = 0; y <= h; ++y) {
    for (int x = 0; x <= w; ++x) {
      if (!grid.inside(x, y)) continue;
      if (grid.inside(x + 1, y)) {
        put(y, 2 * x + 1, '_');
        put(y, 2 * x + 2, '_');
      }
      if (grid.inside(x, y + 1)) put(y, 2 * x, '|');
    }
  }
  if (overlay) {
    if (!is_basis(m, *overlay)) throw ArgumentError(overlay->to_string() + " is not a basis");
    int x = 0, y = 0;
    for (int i = 1; i <= m.n(); ++i) {
      if (overlay->contains(i)) {
        put(y, 2 * x, '!');
        ++y;
      } else {
        put(y, 2 * x + 1, '=');
        put(y, 2 * x + 2, '=');
        ++x;
      }
    }
  }
  std::string out;
  for (int y = h; y >= 0; --y) {
    std::string line = lines[static_cast<std::size_t>(y)];
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

/// SVG 1.1 rendering: region grid in grey, U and L in black, overlay in red.
inline std::string render_svg(const Lpm& m, const std::optional<GroundSubset>& overlay = std::nullopt) {
  constexpr int kUnit = 40, kMargin = 20;
  detail::RegionGrid grid(m);
  const int w = grid.width(), h = grid.height();
  const int pw = w * kUnit + 2 * kMargin, ph = h * kUnit + 2 * kMargin;
  auto px = [&](int x) { return kMargin + x * kUnit; };
  auto py = [&](int y) { return kMargin + (h - y) * kUnit; };
  auto polyline = [&](const GroundSubset& b, const char* stroke, int width) {
    std::ostringstream s;
    s << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\" points=\"";
    bool first = true;
    for (const auto& p : path_points(b)) {
      s << (first ? "" : " ") << px(p.coords[0]) << ',' << py(p.coords[1]);
      first = false;
    }
    s << "\"/>\n";
    return s.str();
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pw << "\" height=\"" << ph
      << "\" viewBox=\"0 0 " << pw << ' ' << ph << "\">\n"
      << "  <title>" << m.to_short_string() << "</title>\n";
  for (int y = 0; y <= h; ++y) {
    for (int x = 0; x <= w; ++x) {
      if (!grid.inside(x, y)) continue;
      if (grid.inside(x + 1, y))
        svg << "  <line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x + 1) << "\" y2=\"" << py(y)
            << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
      if (grid.inside(x, y + 1))
        svg << "  <line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x) << "\" y2=\"" << py(y + 1)
            << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
  }
  svg << polyline(m.upper(), "black", 2) << polyline(m.lower(), "black", 2);
  if (overlay) {
    if (!is_basis(m, *overlay)) throw ArgumentError(overlay->to_string() + " is not a basis");
    svg << polyline(*overlay, "#cc2222", 3);
  }
  svg << "</svg>\n";
  return svg.str();
}

inline DiagramArtifact render_diagram(const Lpm& m, const std::optional<GroundSubset>& overlay = std::nullopt) {
  return {render_ascii(m, overlay), render_svg(m, overlay)};
}

}  // namespace lpm
