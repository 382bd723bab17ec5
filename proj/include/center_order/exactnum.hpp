// Exact kernel: rationals, one quadratic extension, univariate polynomials,
// Sturm sequences and real-root isolation.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace center_order {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps it canonical after every arithmetic op

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int sign(const Rational& x);
int sign(const Integer& x);
std::string to_string(const Rational& x);
// Accepts "7", "-3/4", "1.25".
Rational parse_rational(std::string_view text);
bool is_perfect_square(const Rational& x, Rational* root = nullptr);
// Rational of least denominator in the open interval (lo, hi); hi empty means +infinity.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi);

// r + s*sqrt(d). Values with s == 0 are plain rationals and combine with any
// radicand; two values with nonzero radical parts must share d.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : r_(v) {}
  QuadExt(Rational r) : r_(std::move(r)) {}
  // Collapses to a rational when d is a perfect square.
  QuadExt(Rational r, Rational s, Rational d);

  const Rational& rational_part() const { return r_; }
  const Rational& radical_part() const { return s_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return sgn(s_) == 0; }
  bool is_zero() const { return is_rational() && sgn(r_) == 0; }

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator*=(const Rational& o);
  QuadExt inverse() const;
  QuadExt conjugate() const;
  // r^2 - s^2 d
  Rational norm() const;

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }
  friend bool operator==(const QuadExt& a, const QuadExt& b);

  double approx() const;
  // Rigorous-enough absolute error bound for approx() (a few ulps of |r|+|s sqrt d|).
  double approx_error() const;

 private:
  struct Raw {};
  QuadExt(Raw, Rational r, Rational s, Rational d)
      : r_(std::move(r)), s_(std::move(s)), d_(std::move(d)) {}
  const Rational& shared_radicand(const QuadExt& o) const;

  Rational r_{0};
  Rational s_{0};
  Rational d_{0};
};

int quad_sign(const QuadExt& x);
// Re-expresses x over radicand d; d / x.radicand() must be a rational square.
QuadExt with_radicand(const QuadExt& x, const Rational& d);
std::string to_string(const QuadExt& x);

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly x();
  static UniPoly from_ints(std::initializer_list<long> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign(eval(x)); }
  double eval_double(double x) const;

  UniPoly derivative() const;
  // p(x + t)
  UniPoly shift(const Rational& t) const;
  // p(t * x)
  UniPoly scale_arg(const Rational& t) const;
  // x^deg p(1/x)
  UniPoly reversed() const;
  // Same roots, integer coefficients, content 1, positive multiple of *this.
  UniPoly primitive() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& k);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& k) { return a *= k; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "k") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly poly_rem(const UniPoly& a, const UniPoly& b);
UniPoly poly_quo(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);
UniPoly poly_pow(const UniPoly& p, int e);

// 1 + max |a_i / a_n|: every real root lies in (-B, B).
Rational cauchy_bound(const UniPoly& p);

class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);  // p nonzero, reduced to square-free part
  int variations(const Rational& x) const;
  int variations_at_infinity(int direction) const;
  // Distinct roots in the open interval (lo, hi).
  int count(const Rational& lo, const Rational& hi) const;
  const UniPoly& base() const { return seq_.front(); }
  // Sign of the square-free base polynomial at x.
  int base_sign(const Rational& x) const;

 private:
  std::vector<UniPoly> seq_;
  std::vector<std::vector<Integer>> ints_;
};

int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi);

// Descartes sign-variation count of p on (lo, hi); hi empty means +infinity.
// Zero proves no root; one proves exactly one.
int descartes_bound(const UniPoly& p, const Rational& lo, const std::optional<Rational>& hi);

enum class PolySign { Positive, Negative, Zero, Mixed };
const char* to_string(PolySign s);
// hi empty means +infinity.
PolySign poly_sign_on_interval(const UniPoly& p, const Rational& lo,
                               const std::optional<Rational>& hi);

struct RootIsolation {
  UniPoly defining_polynomial;  // square-free
  Rational lo, hi;              // closed interval holding exactly one root; lo == hi for a rational root
  int multiplicity_hint = 1;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const;
};

// One isolation per distinct root of p in (lo, hi); hi empty means +infinity.
std::vector<RootIsolation> isolate_roots(const UniPoly& p, const Rational& lo,
                                         const std::optional<Rational>& hi, const Rational& width);
void refine(RootIsolation& r, const Rational& width);
// Shrinks r until lo > bound_lo (strict), keeping it isolating.
void tighten_above(RootIsolation& r, const Rational& bound_lo);
void tighten_below(RootIsolation& r, const Rational& bound_hi);
// Exact sign of q at the algebraic number described by r.
int sign_at_root(const UniPoly& q, RootIsolation r);
// True when both isolations denote the same real number.
bool same_root(RootIsolation a, RootIsolation b);
// Refines a and b until their intervals are disjoint (requires distinct roots).
void separate(RootIsolation& a, RootIsolation& b);

}  // namespace center_order
