#include <sstream>

#include "center_order/poly3.hpp"

namespace center_order {

MPoly MPoly::constant(const Rational& c) {
  MPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

MPoly MPoly::var(int i) {
  MPoly p;
  Mono m{0, 0, 0};
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

void MPoly::add_term(const Mono& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

int MPoly::homogeneous_degree() const {
  if (t_.empty()) return -1;
  int d = -1;
  for (const auto& [m, c] : t_) {
    int e = m[0] + m[1] + m[2];
    if (d < 0) d = e;
    else if (d != e) return -2;
  }
  return d;
}

int MPoly::max_exponent() const {
  int e = 0;
  for (const auto& [m, c] : t_)
    for (auto x : m) e = std::max<int>(e, x);
  return e;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& k) {
  if (sgn(k) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= k;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& [m, c] : p.t_) c = -c;
  return p;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  MPoly p;
  for (const auto& [mx, cx] : x.t_)
    for (const auto& [my, cy] : y.t_) {
      Mono m{static_cast<std::uint8_t>(mx[0] + my[0]), static_cast<std::uint8_t>(mx[1] + my[1]),
             static_cast<std::uint8_t>(mx[2] + my[2])};
      p.add_term(m, cx * cy);
    }
  return p;
}

MPoly pow(const MPoly& p, int e) {
  MPoly r = MPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

MPoly MPoly::cyclic() const {
  // a -> b, b -> c, c -> a: a^i b^j c^k becomes b^i c^j a^k
  MPoly p;
  for (const auto& [m, c] : t_) p.add_term({m[2], m[0], m[1]}, c);
  return p;
}

Rational MPoly::eval(const Rational& a, const Rational& b, const Rational& c) const {
  Rational acc = 0;
  for (const auto& [m, k] : t_) {
    Rational t = k;
    for (int i = 0; i < m[0]; ++i) t *= a;
    for (int i = 0; i < m[1]; ++i) t *= b;
    for (int i = 0; i < m[2]; ++i) t *= c;
    acc += t;
  }
  return acc;
}

UniPoly MPoly::iso() const {
  std::vector<Rational> c;
  for (const auto& [m, k] : t_) {
    size_t e = m[1] + m[2];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += k;
  }
  return UniPoly(std::move(c));
}

MPoly MPoly::dehomogenize_a() const {
  MPoly p;
  for (const auto& [m, k] : t_) p.add_term({0, m[1], m[2]}, k);
  return p;
}

std::string MPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool unit = a == 1 && (m[0] + m[1] + m[2]) > 0;
    if (!unit) os << a.get_str();
    const char* names = "abc";
    bool need_star = !unit;
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << int(m[i]);
      need_star = true;
    }
  }
  return os.str();
}

const MPoly& area_poly_E() {
  static const MPoly e = [] {
    MPoly a2 = pow(MPoly::var(0), 2), b2 = pow(MPoly::var(1), 2), c2 = pow(MPoly::var(2), 2);
    return (a2 * b2 + b2 * c2 + c2 * a2) * Rational(2) - a2 * a2 - b2 * b2 - c2 * c2;
  }();
  return e;
}

SurdPoly& SurdPoly::operator+=(const SurdPoly& o) {
  r += o.r;
  s += o.s;
  return *this;
}

SurdPoly& SurdPoly::operator-=(const SurdPoly& o) {
  r -= o.r;
  s -= o.s;
  return *this;
}

SurdPoly operator*(const SurdPoly& x, const SurdPoly& y) {
  SurdPoly p;
  p.r = x.r * y.r;
  if (x.has_surd() && y.has_surd()) p.r += x.s * y.s * area_poly_E() * Rational(3, 16);
  p.s = x.r * y.s + x.s * y.r;
  return p;
}

SurdPoly pow(const SurdPoly& p, int e) {
  SurdPoly r{MPoly::constant(1), {}};
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace center_order
