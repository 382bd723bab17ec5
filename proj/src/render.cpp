#include "center_order/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "center_order/geom.hpp"

namespace center_order {

void FigureSpec::validate(const Catalog& cat) const {
  sides.validate();
  if (width <= 0 || height <= 0) throw std::invalid_argument("canvas must be positive");
  if (margin < 0 || 2 * margin >= std::min(width, height)) throw std::invalid_argument("margin does not fit the canvas");
  for (int k : centers)
    if (k > 0 && !cat.contains(k)) throw std::invalid_argument("center not cataloged: " + center_label(k));
}

FigureSpec parse_figure_spec(const nlohmann::json& j) {
  FigureSpec f;
  if (!j.contains("sides")) throw std::invalid_argument("figure spec needs \"sides\"");
  f.sides = parse_sides(j.at("sides").get<std::string>());
  for (const auto& c : j.value("centers", nlohmann::json::array()))
    f.centers.push_back(c.is_number_integer() ? c.get<int>() : parse_center_key(c.get<std::string>()));
  for (const auto& l : j.value("labels", nlohmann::json::array())) f.labels.push_back(l.get<bool>());
  f.show_traces = j.value("traces", false);
  f.show_bands = j.value("bands", false);
  f.width = j.value("width", f.width);
  f.height = j.value("height", f.height);
  f.margin = j.value("margin", f.margin);
  return f;
}

Embedding Embedding::of(const Sides& s) {
  Embedding e;
  e.a = s.a;
  e.ax = (s.a * s.a + s.c * s.c - s.b * s.b) / (2 * s.a);
  e.ay_sq = s.c * s.c - e.ax * e.ax;
  return e;
}

std::array<Rational, 3> Embedding::squared_sides() const {
  Rational dx = ax - a;
  return {a * a, dx * dx + ay_sq, ax * ax + ay_sq};
}

bool to_world(const BaryPoint& p, const Embedding& e, Vec2& out) {
  NormalizedPoint n = normalize(p);
  if (n.at_infinity) return false;
  double pa = n.c[0].approx(), pc = n.c[2].approx();
  double ay = std::sqrt(e.ay_sq.get_d());
  // P = pA + qB + rC with B at the origin.
  out = {pa * e.ax.get_d() + pc * e.a.get_d(), pa * ay};
  return true;
}

namespace {

struct Canvas {
  double scale = 1, ox = 0, oy = 0;
  int width = 0, height = 0;

  Vec2 map(Vec2 w) const { return {ox + scale * w.x, oy - scale * w.y}; }
  bool inside(Vec2 p) const { return p.x >= 0 && p.y >= 0 && p.x <= width && p.y <= height; }
};

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(10) << v;
  return os.str();
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::string render_svg(const FigureSpec& spec, const Catalog& cat) {
  spec.validate(cat);
  const Embedding e = Embedding::of(spec.sides);
  const double ax = e.ax.get_d(), ay = std::sqrt(e.ay_sq.get_d()), a = e.a.get_d();
  const Vec2 wa{ax, ay}, wb{0, 0}, wc{a, 0};
  const double minx = std::min(0.0, ax), maxx = std::max(a, ax);
  Canvas cv;
  cv.width = spec.width;
  cv.height = spec.height;
  cv.scale = std::min((spec.width - 2.0 * spec.margin) / (maxx - minx), (spec.height - 2.0 * spec.margin) / ay);
  cv.ox = spec.margin - cv.scale * minx + ((spec.width - 2.0 * spec.margin) - cv.scale * (maxx - minx)) / 2;
  cv.oy = spec.height - spec.margin - ((spec.height - 2.0 * spec.margin) - cv.scale * ay) / 2;
  const Vec2 pa = cv.map(wa), pb = cv.map(wb), pc = cv.map(wc);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
     << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n"
     << "<title>triangle " << spec.sides.to_string() << "</title>\n"
     << "<polygon class=\"triangle\" points=\"" << num(pa.x) << "," << num(pa.y) << " " << num(pb.x) << ","
     << num(pb.y) << " " << num(pc.x) << "," << num(pc.y) << "\" fill=\"none\" stroke=\"black\"/>\n";
  const std::pair<const char*, Vec2> verts[] = {{"A", pa}, {"B", pb}, {"C", pc}};
  for (const auto& [name, p] : verts)
    os << "<text class=\"vertex\" x=\"" << num(p.x) << "\" y=\"" << num(p.y + (name[0] == 'A' ? -6 : 14))
       << "\" font-size=\"12\">" << name << "</text>\n";

  std::vector<std::string> clipped, omitted;
  for (size_t i = 0; i < spec.centers.size(); ++i) {
    const int key = spec.centers[i];
    const std::string label = center_label(key);
    const BaryPoint p = eval_center(cat, key, spec.sides);
    Vec2 w;
    if (!to_world(p, e, w)) {
      omitted.push_back(label);
      os << "<desc class=\"omitted\" data-center=\"" << label << "\">" << label << " at infinity</desc>\n";
      continue;
    }
    const Vec2 q = cv.map(w);
    if (spec.show_bands) {
      double r = std::hypot(q.x - pa.x, q.y - pa.y);
      os << "<circle class=\"band\" data-center=\"" << label << "\" cx=\"" << num(pa.x) << "\" cy=\"" << num(pa.y)
         << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"2,3\"/>\n";
    }
    if (spec.show_traces) {
      Vec2 t;
      if (to_world(atrace(p), e, t)) {
        Vec2 tq = cv.map(t);
        os << "<line class=\"trace\" data-center=\"" << label << "\" x1=\"" << num(pa.x) << "\" y1=\"" << num(pa.y)
           << "\" x2=\"" << num(tq.x) << "\" y2=\"" << num(tq.y) << "\" stroke=\"#4477aa\"/>\n"
           << "<circle class=\"trace-marker\" data-center=\"" << label << "\" data-x=\"" << num(t.x) << "\" cx=\""
           << num(tq.x) << "\" cy=\"" << num(tq.y) << "\" r=\"2.5\" fill=\"#4477aa\"/>\n";
      } else {
        os << "<desc class=\"omitted-trace\" data-center=\"" << label << "\">" << label
           << " trace at infinity</desc>\n";
      }
    }
    if (!cv.inside(q)) {
      clipped.push_back(label);
      continue;
    }
    os << "<circle class=\"center\" data-center=\"" << label << "\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
       << "\" r=\"3\" fill=\"#cc3311\"/>\n";
    if (i >= spec.labels.size() || spec.labels[i]) {
      double ang = (i % 8) * std::numbers::pi / 4;
      os << "<text class=\"label\" x=\"" << num(q.x + 6 + 8 * std::cos(ang)) << "\" y=\""
         << num(q.y + 4 - 8 * std::sin(ang)) << "\" font-size=\"10\">" << label << "</text>\n";
    }
  }
  if (!clipped.empty())
    os << "<text class=\"clip-note\" x=\"4\" y=\"" << spec.height - 4 << "\" font-size=\"10\">outside canvas: "
       << join(clipped) << "</text>\n";
  if (!omitted.empty())
    os << "<text class=\"omission\" x=\"4\" y=\"12\" font-size=\"10\">at infinity, omitted: " << join(omitted)
       << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace center_order
