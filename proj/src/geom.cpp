#include "center_order/geom.hpp"

namespace center_order {

int sign_product(const QuadExt& x, const QuadExt& y) { return quad_sign(x) * quad_sign(y); }

NormalizedPoint normalize(const BaryPoint& p) {
  if (p.is_zero_triple()) throw DomainError("zero triple");
  NormalizedPoint n;
  QuadExt s = p.sum();
  if (s.is_zero()) {
    n.at_infinity = true;
    n.c = {p.u, p.v, p.w};
    return n;
  }
  QuadExt inv = s.inverse();
  n.c = {p.u * inv, p.v * inv, p.w * inv};
  return n;
}

RegionCode region_of(const BaryPoint& p) {
  QuadExt s = p.sum();
  if (s.is_zero()) throw DomainError("region of a point at infinity");
  int ss = quad_sign(s);
  return {quad_sign(p.u) * ss, quad_sign(p.v) * ss, quad_sign(p.w) * ss};
}

bool inside_angle_A(const BaryPoint& p) {
  QuadExt s = p.sum();
  if (s.is_zero()) throw DomainError("inside_angle_A: point at infinity");
  int ss = quad_sign(s);
  return quad_sign(p.v) * ss > 0 && quad_sign(p.w) * ss > 0;
}

const char* to_string(SideRelation r) {
  switch (r) {
    case SideRelation::Above: return "Above";
    case SideRelation::On: return "On";
    case SideRelation::Below: return "Below";
    case SideRelation::AtInfinity: return "AtInfinity";
  }
  return "?";
}

SideRelation above_BC(const BaryPoint& p) {
  QuadExt s = p.sum();
  if (s.is_zero()) return SideRelation::AtInfinity;
  int v = quad_sign(p.u) * quad_sign(s);
  if (v > 0) return SideRelation::Above;
  if (v < 0) return SideRelation::Below;
  return SideRelation::On;
}

QuadExt signed_height_ratio(const BaryPoint& p) {
  QuadExt s = p.sum();
  if (s.is_zero()) throw DomainError("signed_height_ratio: point at infinity");
  return p.u / s;
}

QuadExt squared_distance(const BaryPoint& p, const BaryPoint& q, const Sides& s) {
  NormalizedPoint np = normalize(p), nq = normalize(q);
  if (np.at_infinity || nq.at_infinity) throw DomainError("squared_distance: point at infinity");
  QuadExt x = nq.c[0] - np.c[0], y = nq.c[1] - np.c[1], z = nq.c[2] - np.c[2];
  QuadExt d = y * z * QuadExt(Rational(-s.a * s.a));
  d -= z * x * QuadExt(Rational(s.b * s.b));
  d -= x * y * QuadExt(Rational(s.c * s.c));
  return d;
}

QuadExt squared_dist_point_to_line(const BaryPoint& p, const std::array<Rational, 3>& line, const Sides& s) {
  const Rational &u = line[0], &v = line[1], &w = line[2];
  if (u == v && v == w) throw DomainError("line at infinity");
  QuadExt sum = p.sum();
  if (sum.is_zero()) throw DomainError("squared_dist_point_to_line: point at infinity");
  Rational a2 = s.a * s.a, b2 = s.b * s.b, c2 = s.c * s.c;
  Rational den = a2 * (u - v) * (u - w) + (v - w) * (b2 * (v - u) + c2 * (u - w));
  if (sgn(den) == 0) throw DomainError("degenerate line");
  QuadExt num = p.u * QuadExt(u) + p.v * QuadExt(v) + p.w * QuadExt(w);
  Rational E = area_E(s.a, s.b, s.c);
  return num * num * QuadExt(E) / (sum * sum * QuadExt(Rational(4 * den)));
}

BaryPoint atrace(const BaryPoint& p) {
  if (p.v.is_zero() && p.w.is_zero()) throw DomainError("atrace: the point is A, cevian undefined");
  return {QuadExt(0), p.v, p.w};
}

QuadExt trace_signed_dist_to_C(const BaryPoint& p, const Rational& a) {
  if (p.v.is_zero() && p.w.is_zero()) throw DomainError("trace: the point is A, cevian undefined");
  QuadExt t = p.v + p.w;
  if (t.is_zero()) throw DomainError("trace at infinity");
  return QuadExt(a) * p.v / t;
}

bool trace_right_of_C(const BaryPoint& p) {
  if (p.v.is_zero() && p.w.is_zero()) throw DomainError("trace: the point is A, cevian undefined");
  return quad_sign(p.v) * quad_sign(p.v + p.w) < 0;
}

bool same_point(const BaryPoint& p, const BaryPoint& q) {
  return (p.u * q.v - p.v * q.u).is_zero() && (p.v * q.w - p.w * q.v).is_zero() &&
         (p.w * q.u - p.u * q.w).is_zero();
}

}  // namespace center_order
