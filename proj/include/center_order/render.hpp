// SVG figures: a triangle with labeled centers, optional A-traces and
// vertex-distance bands.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "center_order/catalog.hpp"

namespace center_order {

struct FigureSpec {
  Sides sides;
  std::vector<int> centers;
  std::vector<bool> labels;  // per center; missing entries mean labeled
  bool show_traces = false;
  bool show_bands = false;
  int width = 800, height = 600;
  int margin = 40;

  void validate(const Catalog& cat) const;
};

// {"sides": "11,12,16", "centers": [23, "A"], "traces": true, "bands": false,
//  "width": 800, "height": 600, "margin": 40, "labels": [true]}
FigureSpec parse_figure_spec(const nlohmann::json& j);

// Cartesian embedding B=(0,0), C=(a,0), A=(ax, sqrt(ay_sq)), exact up to the root.
struct Embedding {
  Rational a, ax, ay_sq;

  static Embedding of(const Sides& s);
  // Exact squared vertex distances |BC|^2, |CA|^2, |AB|^2.
  std::array<Rational, 3> squared_sides() const;
};

struct Vec2 {
  double x = 0, y = 0;
};

// World (triangle-plane) coordinates of a barycentric point; false at infinity.
bool to_world(const BaryPoint& p, const Embedding& e, Vec2& out);

std::string render_svg(const FigureSpec& spec, const Catalog& cat);

}  // namespace center_order
