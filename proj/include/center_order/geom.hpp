// Barycentric predicates and metrics: normalization, region signs, the
// inside-angle-A and above-BC tests, distances and A-traces.
#pragma once

#include <array>

#include "center_order/types.hpp"

namespace center_order {

struct NormalizedPoint {
  bool at_infinity = false;
  std::array<QuadExt, 3> c;  // sums to 1 unless at_infinity
};

NormalizedPoint normalize(const BaryPoint& p);

// Signs of the normalized coordinates; (+,+,+) is the interior.
struct RegionCode {
  int su = 0, sv = 0, sw = 0;
  friend bool operator==(const RegionCode&, const RegionCode&) = default;
};
RegionCode region_of(const BaryPoint& p);

bool inside_angle_A(const BaryPoint& p);

enum class SideRelation { Above, On, Below, AtInfinity };
const char* to_string(SideRelation r);
SideRelation above_BC(const BaryPoint& p);

// rho = p/(p+q+r); the signed distance to BC is (2K/a) rho.
QuadExt signed_height_ratio(const BaryPoint& p);

QuadExt squared_distance(const BaryPoint& p, const BaryPoint& q, const Sides& s);

// Line u x + v y + w z = 0.
QuadExt squared_dist_point_to_line(const BaryPoint& p, const std::array<Rational, 3>& line, const Sides& s);

BaryPoint atrace(const BaryPoint& p);
// a q/(q+r): positive on ray CB, negative beyond C.
QuadExt trace_signed_dist_to_C(const BaryPoint& p, const Rational& a);
bool trace_right_of_C(const BaryPoint& p);

bool same_point(const BaryPoint& p, const BaryPoint& q);

// Convenience signs used by the classifiers: sign of v(u+v+w) etc.
int sign_product(const QuadExt& x, const QuadExt& y);

}  // namespace center_order
