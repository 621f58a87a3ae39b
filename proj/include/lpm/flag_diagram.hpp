#pragma once

// Diagrams of partial LPFMs (U_{0,n}, M_1, ..., M_{k-1}, U_{n,n}). Each chain
// of bases gives a monotone path of n unit steps in Z^k: step i is e_j when i
// enters at B_j. The diagram is the set of points on all these paths.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpm/error.hpp"
#include "lpm/flag.hpp"
#include "lpm/lattice_point.hpp"

namespace lpm {

struct FlagDiagram {
  int dimension = 0;
  std::vector<LatticePoint> points;                     // sorted
  std::vector<std::pair<LatticePoint, LatticePoint>> edges;  // unit steps, sorted
};

inline FlagDiagram flag_diagram(const PartialLpfm& f) {
  if (!f.spans()) throw PreconditionError("a flag diagram needs constituents from U_{0,n} to U_{n,n}");
  const int n = f.n();
  const int k = static_cast<int>(f.size()) - 1;
  std::set<LatticePoint> points;
  std::set<std::pair<LatticePoint, LatticePoint>> edges;
  for (const auto& chain : chains_of_bases(f)) {
    LatticePoint p{std::vector<int>(static_cast<std::size_t>(k), 0)};
    points.insert(p);
    for (int i = 1; i <= n; ++i) {
      int j = 1;
      while (!chain[static_cast<std::size_t>(j)].contains(i)) ++j;
      LatticePoint q = p;
      ++q.coords[static_cast<std::size_t>(j - 1)];
      edges.emplace(p, q);
      points.insert(q);
      p = std::move(q);
    }
  }
  return {k, {points.begin(), points.end()}, {edges.begin(), edges.end()}};
}

/// Z^2 diagrams as text: first coordinate to the right, second upward,
/// points `o`, steps `-` and `|`.
inline std::string render_flag_diagram_ascii(const FlagDiagram& d) {
  if (d.dimension != 2) throw ArgumentError("text rendering needs a diagram in Z^2");
  int w = 0, h = 0;
  for (const auto& p : d.points) {
    w = std::max(w, p.coords[0]);
    h = std::max(h, p.coords[1]);
  }
  std::vector<std::string> rows(static_cast<std::size_t>(2 * h + 1), std::string(static_cast<std::size_t>(2 * w + 1), ' '));
  auto at = [&](int x2, int y2) -> char& { return rows[static_cast<std::size_t>(y2)][static_cast<std::size_t>(x2)]; };
  for (const auto& p : d.points) at(2 * p.coords[0], 2 * p.coords[1]) = 'o';
  for (const auto& [a, b] : d.edges) {
    if (b.coords[0] != a.coords[0]) at(2 * a.coords[0] + 1, 2 * a.coords[1]) = '-';
    else at(2 * a.coords[0], 2 * a.coords[1] + 1) = '|';
  }
  std::string out;
  for (int y = 2 * h; y >= 0; --y) {
    std::string line = rows[static_cast<std::size_t>(y)];
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

/// Z^3 diagrams as an axonometric SVG: e_1 down-left, e_2 down-right, e_3 up.
inline std::string render_flag_diagram_svg(const FlagDiagram& d, const std::string& title = "") {
  if (d.dimension != 3) throw ArgumentError("axonometric rendering needs a diagram in Z^3");
  constexpr double kUnit = 40, kMargin = 20;
  const double cx = std::cos(std::numbers::pi / 6) * kUnit, sy = std::sin(std::numbers::pi / 6) * kUnit;
  auto project = [&](const LatticePoint& p) {
    return std::pair<double, double>{(p.coords[1] - p.coords[0]) * cx, (p.coords[0] + p.coords[1]) * sy - p.coords[2] * kUnit};
  };
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& p : d.points) {
    auto [x, y] = project(p);
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  auto sx = [&](double x) { return x - min_x + kMargin; };
  auto sy2 = [&](double y) { return y - min_y + kMargin; };
  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(1);
  const double width = max_x - min_x + 2 * kMargin, height = max_y - min_y + 2 * kMargin;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!title.empty()) svg << "  <title>" << title << "</title>\n";
  for (const auto& [a, b] : d.edges) {
    auto [x1, y1] = project(a);
    auto [x2, y2] = project(b);
    svg << "  <line x1=\"" << sx(x1) << "\" y1=\"" << sy2(y1) << "\" x2=\"" << sx(x2) << "\" y2=\"" << sy2(y2)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& p : d.points) {
    auto [x, y] = project(p);
    svg << "  <circle cx=\"" << sx(x) << "\" cy=\"" << sy2(y) << "\" r=\"3\" fill=\"#2255aa\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lpm
