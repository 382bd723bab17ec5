// Sparse polynomials in the side lengths a, b, c, and surd polynomials
// r + s*U with U^2 = 3E/16 (U = sqrt(3) times the area).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "center_order/exactnum.hpp"

namespace center_order {

using Mono = std::array<std::uint8_t, 3>;  // exponents of a, b, c

class MPoly {
 public:
  MPoly() = default;
  static MPoly constant(const Rational& c);
  static MPoly var(int i);  // 0 = a, 1 = b, 2 = c

  const std::map<Mono, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  // Total degree when homogeneous, -1 for the zero polynomial, -2 otherwise.
  int homogeneous_degree() const;
  int max_exponent() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& k);
  MPoly operator-() const;
  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  friend MPoly operator*(MPoly x, const Rational& k) { return x *= k; }
  friend bool operator==(const MPoly& x, const MPoly& y) { return x.t_ == y.t_; }

  // f(b, c, a)
  MPoly cyclic() const;
  Rational eval(const Rational& a, const Rational& b, const Rational& c) const;
  // a = 1, b = c = k
  UniPoly iso() const;
  // a = 1; result only uses the b and c exponents
  MPoly dehomogenize_a() const;
  std::string to_string() const;

 private:
  void add_term(const Mono& m, const Rational& c);
  std::map<Mono, Rational> t_;
};

MPoly pow(const MPoly& p, int e);
// E = 2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4 = 16 K^2
const MPoly& area_poly_E();

// r + s*U, reduced with U^2 = 3E/16.
struct SurdPoly {
  MPoly r, s;

  bool is_zero() const { return r.is_zero() && s.is_zero(); }
  bool has_surd() const { return !s.is_zero(); }
  SurdPoly cyclic() const { return {r.cyclic(), s.cyclic()}; }
  SurdPoly& operator+=(const SurdPoly& o);
  SurdPoly& operator-=(const SurdPoly& o);
  friend SurdPoly operator+(SurdPoly x, const SurdPoly& y) { return x += y; }
  friend SurdPoly operator-(SurdPoly x, const SurdPoly& y) { return x -= y; }
  friend SurdPoly operator*(const SurdPoly& x, const SurdPoly& y);
  SurdPoly operator-() const { return {-r, -s}; }
};

SurdPoly pow(const SurdPoly& p, int e);

}  // namespace center_order
