// Copyright 2026 The pareto-cover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plot.hpp"

#include <array>
#include <iomanip>
#include <set>
#include <sstream>

#include "pareto_cover/errors.hpp"

namespace pareto_cover::plot {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 20.0;

constexpr std::array<const char*, 8> kPalette = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                                 "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};

std::vector<Rational> cuts(const Cover& cover, std::size_t axis) {
  std::set<Rational> s{Rational(0), Rational(1)};
  for (const auto& p : cover.points) s.insert(p[axis]);
  return {s.begin(), s.end()};
}

double px(const Rational& x) { return kMargin + x.get_d() * kSize; }
double py(const Rational& y) { return kMargin + (1 - y.get_d()) * kSize; }

}  // namespace

std::vector<Cell> dominance_cells(const Cover& cover, const std::vector<Rational>& costs) {
  if (costs.size() != 2) throw ValidationError("plots need exactly two coordinates");
  validate_cover(cover, 2);
  std::vector<Rational> point_cost;
  for (const auto& p : cover.points) point_cost.push_back(costs[0] * p[0] + costs[1] * p[1]);
  const auto xs = cuts(cover, 0);
  const auto ys = cuts(cover, 1);
  std::vector<Cell> out;
  for (std::size_t a = 1; a < xs.size(); ++a) {
    for (std::size_t b = 1; b < ys.size(); ++b) {
      Cell cell{xs[a - 1], xs[a], ys[b - 1], ys[b], -1};
      for (std::size_t j = 0; j < cover.points.size(); ++j) {
        const auto& p = cover.points[j];
        if (p[0] < xs[a] || p[1] < ys[b]) continue;
        if (cell.owner < 0 || point_cost[j] < point_cost[static_cast<std::size_t>(cell.owner)]) {
          cell.owner = static_cast<int>(j);
        }
      }
      out.push_back(cell);
    }
  }
  return out;
}

std::string cells_csv(const std::vector<Cell>& cells) {
  std::ostringstream out;
  out << "owner,x0,x1,y0,y1\n";
  for (const auto& c : cells) {
    out << c.owner << ',' << format_rational(c.x0) << ',' << format_rational(c.x1) << ','
        << format_rational(c.y0) << ',' << format_rational(c.y1) << '\n';
  }
  return out.str();
}

std::string cells_svg(const Cover& cover, const std::vector<Cell>& cells) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  const double side = kSize + 2 * kMargin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  for (const auto& c : cells) {
    const char* fill = c.owner < 0 ? "#ffffff" : kPalette[static_cast<std::size_t>(c.owner) % kPalette.size()];
    out << "  <rect x=\"" << px(c.x0) << "\" y=\"" << py(c.y1) << "\" width=\"" << px(c.x1) - px(c.x0)
        << "\" height=\"" << py(c.y0) - py(c.y1) << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.55\" stroke=\"none\" data-owner=\"" << c.owner << "\"/>\n";
  }
  out << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize << "\" height=\""
      << kSize << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (std::size_t j = 0; j < cover.points.size(); ++j) {
    const auto& p = cover.points[j];
    out << "  <circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1]) << "\" r=\"4\" fill=\""
        << kPalette[j % kPalette.size()] << "\" stroke=\"#000000\"><title>b" << j + 1 << " = ("
        << format_rational(p[0]) << ", " << format_rational(p[1]) << ")</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pareto_cover::plot
