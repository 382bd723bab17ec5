// Univariate elements A(k) + B(k) sqrt(R(k)) with one fixed R per context.
#pragma once

#include <vector>

#include "center_order/exactnum.hpp"

namespace center_order {

struct SurdUni {
  UniPoly a, b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool has_surd() const { return !b.is_zero(); }
  SurdUni operator-() const { return {-a, -b}; }
  friend SurdUni operator+(const SurdUni& x, const SurdUni& y) { return {x.a + y.a, x.b + y.b}; }
  friend SurdUni operator-(const SurdUni& x, const SurdUni& y) { return {x.a - y.a, x.b - y.b}; }
  friend bool operator==(const SurdUni& x, const SurdUni& y) { return x.a == y.a && x.b == y.b; }
};

SurdUni mul(const SurdUni& x, const SurdUni& y, const UniPoly& R);
SurdUni scale(const SurdUni& x, const UniPoly& p);
// a^2 - b^2 R: vanishes wherever x does.
UniPoly norm(const SurdUni& x, const UniPoly& R);
// Exact value at a rational parameter.
QuadExt eval(const SurdUni& x, const UniPoly& R, const Rational& k);
// Divides both parts by a common polynomial factor.
SurdUni divide(const SurdUni& x, const UniPoly& g);
UniPoly content_gcd(const SurdUni& x);

// Exact sign of x at an algebraic point (R > 0 there).
int sign_at_root(const SurdUni& x, const UniPoly& R, const RootIsolation& r);

// Sign pattern of prod(factors) along (lo, +inf), where R > 0. The points are
// the real roots of the factors' and poles' norms, sorted and disjoint; cells
// are the open gaps between them. A point where a pole vanishes is undefined.
struct SignProfile {
  static constexpr int kUndefined = 2;
  bool identically_zero = false;
  std::vector<RootIsolation> points;
  std::vector<int> point_signs;
  std::vector<Rational> cell_samples;  // points.size() + 1 entries
  std::vector<int> cell_signs;

  // Strict sign everywhere on the interval (undefined points ignored), else 0.
  int constant_sign() const;
  bool occurs(int s) const;  // any cell or point with this sign
  bool occurs_in_cell(int s) const;
  int undefined_points() const;
};
SignProfile sign_profile(const std::vector<SurdUni>& factors, const std::vector<SurdUni>& poles,
                         const UniPoly& R, const Rational& lo);

}  // namespace center_order
