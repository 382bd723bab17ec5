// Triangle side lengths, the area context and barycentric points.
#pragma once

#include <array>
#include <string>

#include "center_order/exactnum.hpp"

namespace center_order {

// a = BC, b = CA, c = AB
struct Sides {
  Rational a, b, c;

  // Strict triangle inequality with positive sides, unless degenerate_ok.
  void validate(bool degenerate_ok = false) const;
  bool is_triangle() const;
  std::string to_string() const;
  friend bool operator==(const Sides& x, const Sides& y) = default;
};

Sides make_sides(long a, long b, long c);
Sides parse_sides(const std::string& text);  // "3,4,5" or "1,7/5,6/5"

struct AreaContext {
  Rational E;         // 2a^2b^2+2b^2c^2+2c^2a^2-a^4-b^4-c^4 = 16 K^2
  Rational radicand;  // 3E
  QuadExt U;          // (0, 1/4, 3E) = sqrt(3) K

  static AreaContext of(const Sides& s);
};

Rational area_E(const Rational& a, const Rational& b, const Rational& c);

struct BaryPoint {
  QuadExt u, v, w;

  QuadExt sum() const { return u + v + w; }
  bool is_zero_triple() const { return u.is_zero() && v.is_zero() && w.is_zero(); }
  std::string to_string() const;
};

// Center keys: positive integers are catalog indices, the vertices are pseudo-centers.
constexpr int kVertexA = -1;
constexpr int kVertexB = -2;
constexpr int kVertexC = -3;
int parse_center_key(const std::string& text);
std::string center_label(int key);  // "X12", "A", ...

}  // namespace center_order
