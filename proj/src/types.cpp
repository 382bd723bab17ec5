#include <sstream>

#include "center_order/types.hpp"

namespace center_order {

bool Sides::is_triangle() const {
  return sgn(a) > 0 && sgn(b) > 0 && sgn(c) > 0 && a + b > c && b + c > a && c + a > b;
}

void Sides::validate(bool degenerate_ok) const {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0) throw DomainError("sides must be positive: " + to_string());
  if (degenerate_ok) {
    if (a + b < c || b + c < a || c + a < b) throw DomainError("not a triangle: " + to_string());
    return;
  }
  if (!is_triangle()) throw DomainError("triangle inequality fails: " + to_string());
}

std::string Sides::to_string() const {
  return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

Sides make_sides(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

Sides parse_sides(const std::string& text) {
  std::array<Rational, 3> v;
  std::istringstream is(text);
  std::string part;
  int i = 0;
  while (std::getline(is, part, ',')) {
    if (i >= 3) throw DomainError("expected three sides: " + text);
    v[i++] = parse_rational(part);
  }
  if (i != 3) throw DomainError("expected three sides: " + text);
  return {v[0], v[1], v[2]};
}

Rational area_E(const Rational& a, const Rational& b, const Rational& c) {
  Rational a2 = a * a, b2 = b * b, c2 = c * c;
  return 2 * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2;
}

AreaContext AreaContext::of(const Sides& s) {
  AreaContext ctx;
  ctx.E = area_E(s.a, s.b, s.c);
  ctx.radicand = 3 * ctx.E;
  if (sgn(ctx.E) < 0) throw DomainError("negative area term for " + s.to_string());
  ctx.U = QuadExt(Rational(0), Rational(1, 4), ctx.radicand);
  return ctx;
}

std::string BaryPoint::to_string() const {
  return "(" + center_order::to_string(u) + " : " + center_order::to_string(v) + " : " +
         center_order::to_string(w) + ")";
}

int parse_center_key(const std::string& text) {
  if (text == "A") return kVertexA;
  if (text == "B") return kVertexB;
  if (text == "C") return kVertexC;
  std::string t = text;
  if (!t.empty() && (t[0] == 'X' || t[0] == 'x')) t = t.substr(1);
  if (t.empty() || t.size() > 9) throw DomainError("bad center: " + text);
  for (char ch : t)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("bad center: " + text);
  int n = std::stoi(t);
  if (n <= 0) throw DomainError("bad center: " + text);
  return n;
}

std::string center_label(int key) {
  switch (key) {
    case kVertexA: return "A";
    case kVertexB: return "B";
    case kVertexC: return "C";
    default: return "X" + std::to_string(key);
  }
}

}  // namespace center_order
