#include <cmath>
#include <sstream>

#include "center_order/exactnum.hpp"

namespace center_order {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
UniPoly UniPoly::x() { return UniPoly(std::vector<Rational>{0, 1}); }

UniPoly UniPoly::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UniPoly::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::shift(const Rational& t) const {
  // Taylor shift by repeated synthetic division
  std::vector<Rational> a = c_;
  const int n = degree();
  if (sgn(t) == 0 || n <= 0) return *this;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[j] += t * a[j + 1];
  return UniPoly(std::move(a));
}

UniPoly UniPoly::scale_arg(const Rational& t) const {
  std::vector<Rational> a = c_;
  Rational p = 1;
  for (auto& v : a) {
    v *= p;
    p *= t;
  }
  return UniPoly(std::move(a));
}

UniPoly UniPoly::reversed() const {
  std::vector<Rational> a(c_.rbegin(), c_.rend());
  return UniPoly(std::move(a));
}

UniPoly UniPoly::primitive() const {
  if (c_.empty()) return {};
  Integer l = 1, g = 0;
  for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> n(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    n[i] = c_[i].get_num() * (l / c_[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
  }
  std::vector<Rational> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = Rational(n[i] / g);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  UniPoly r = *this;
  Rational l = lead();
  for (auto& v : r.c_) v /= l;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& k) {
  if (sgn(k) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& v = c_[i];
    if (sgn(v) == 0) continue;
    Rational m = abs(v);
    if (!first) os << (sgn(v) < 0 ? " - " : " + ");
    else if (sgn(v) < 0) os << "-";
    first = false;
    bool unit = (m == 1);
    if (!unit || i == 0) os << m.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) {
    q = {};
    r = a;
    return;
  }
  std::vector<Rational> quo(da - db + 1);
  const Rational& lb = b.lead();
  for (int i = da; i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] / lb;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly poly_rem(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divmod(a, b, q, r);
  return r;
}

UniPoly poly_quo(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divmod(a, b, q, r);
  return q;
}

UniPoly poly_gcd(const UniPoly& a0, const UniPoly& b0) {
  UniPoly a = a0.primitive(), b = b0.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = poly_rem(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive();
  return poly_quo(p, g).primitive();
}

UniPoly poly_pow(const UniPoly& p, int e) {
  UniPoly r = UniPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = abs(p.coeffs()[i] / p.lead());
    if (v > m) m = v;
  }
  return m + 1;
}

}  // namespace center_order
