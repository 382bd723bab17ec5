#include "center_order/exactnum.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace center_order {

int sign(const Rational& x) { return sgn(x); }
int sign(const Integer& x) { return sgn(x); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string t(text);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  size_t i = 0;
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  t = t.substr(i);
  if (t.empty()) throw DomainError("empty rational");
  auto dot = t.find('.');
  try {
    if (dot != std::string::npos) {
      std::string frac = t.substr(dot + 1);
      std::string whole = t.substr(0, dot);
      bool neg = !whole.empty() && whole[0] == '-';
      if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
      if (whole.empty()) whole = "0";
      for (char ch : whole + frac)
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("bad rational: " + t);
      Integer num(whole + frac);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rational r(num, den);
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    for (char ch : t)
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
        throw DomainError("bad rational: " + t);
    Rational r(t);
    if (r.get_den() == 0) throw DomainError("zero denominator: " + t);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational: " + t);
  }
}

Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  if (hi && !(lo < *hi)) throw DomainError("simplest_between: empty interval");
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational next(fl + 1);
  if (!hi || next < *hi) return next;
  // lo and hi share the integer part fl (hi may equal fl + 1)
  Rational fx = lo - Rational(fl), fy = *hi - Rational(fl);
  std::optional<Rational> top;
  if (sgn(fx) > 0) top = 1 / fx;
  return Rational(fl) + 1 / simplest_between(1 / fy, top);
}

bool is_perfect_square(const Rational& x, Rational* root) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return false;
  if (root) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    *root = Rational(n, d);
    root->canonicalize();
  }
  return true;
}

// ---- QuadExt ----

QuadExt::QuadExt(Rational r, Rational s, Rational d) : r_(std::move(r)), s_(std::move(s)), d_(std::move(d)) {
  if (sgn(s_) == 0) return;
  if (sgn(d_) < 0) throw DomainError("negative radicand");
  Rational root;
  if (is_perfect_square(d_, &root)) {
    r_ += s_ * root;
    s_ = 0;
  }
}

const Rational& QuadExt::shared_radicand(const QuadExt& o) const {
  if (is_rational()) return o.d_;
  if (o.is_rational()) return d_;
  if (d_ != o.d_) throw DomainError("mixed radicands: " + d_.get_str() + " vs " + o.d_.get_str());
  return d_;
}

QuadExt QuadExt::operator-() const { return QuadExt(Raw{}, -r_, -s_, d_); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  if (o.is_rational()) {
    r_ += o.r_;
    return *this;
  }
  d_ = shared_radicand(o);
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  if (o.is_rational()) {
    r_ -= o.r_;
    return *this;
  }
  d_ = shared_radicand(o);
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& k) {
  r_ *= k;
  s_ *= k;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (o.is_rational()) return *this *= o.r_;
  if (is_rational()) {
    Rational k = r_;
    *this = o;
    return *this *= k;
  }
  const Rational& d = shared_radicand(o);
  Rational nr = r_ * o.r_ + s_ * o.s_ * d;
  Rational ns = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(nr);
  s_ = std::move(ns);
  return *this;
}

Rational QuadExt::norm() const { return r_ * r_ - s_ * s_ * d_; }

QuadExt QuadExt::conjugate() const { return QuadExt(Raw{}, r_, -s_, d_); }

QuadExt QuadExt::inverse() const {
  if (is_rational()) {
    if (sgn(r_) == 0) throw DomainError("division by zero");
    return QuadExt(Rational(1) / r_);
  }
  Rational n = norm();
  if (sgn(n) == 0) throw DomainError("division by zero");
  return QuadExt(Raw{}, r_ / n, -s_ / n, d_);
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational() && b.is_rational()) return a.r_ == b.r_;
  return a.r_ == b.r_ && a.s_ == b.s_ && a.d_ == b.d_;
}

double QuadExt::approx() const {
  double v = r_.get_d();
  if (!is_rational()) v += s_.get_d() * std::sqrt(d_.get_d());
  return v;
}

double QuadExt::approx_error() const {
  double m = std::fabs(r_.get_d());
  if (!is_rational()) m += std::fabs(s_.get_d()) * std::sqrt(d_.get_d());
  return m * 1e-13 + 1e-300;
}

int quad_sign(const QuadExt& x) {
  int sr = sgn(x.rational_part());
  int ss = sgn(x.radical_part());
  if (ss == 0) return sr;
  if (sgn(x.radicand()) < 0) throw DomainError("negative radicand");
  if (sgn(x.radicand()) == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // opposite signs: compare r^2 with s^2 d
  int c = cmp(x.rational_part() * x.rational_part(),
              x.radical_part() * x.radical_part() * x.radicand());
  if (c == 0) return 0;
  return c > 0 ? sr : ss;
}

QuadExt with_radicand(const QuadExt& x, const Rational& d) {
  if (x.is_rational()) return x;
  Rational root;
  if (sgn(d) <= 0 || !is_perfect_square(x.radicand() / d, &root))
    throw DomainError("radicands differ by a non-square factor");
  // s sqrt(d0) = s * root * sqrt(d)
  return QuadExt(x.rational_part(), x.radical_part() * root, d);
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return x.rational_part().get_str();
  std::ostringstream os;
  if (sgn(x.rational_part()) != 0) {
    os << x.rational_part().get_str();
    os << (sgn(x.radical_part()) < 0 ? " - " : " + ");
    os << Rational(abs(x.radical_part())).get_str();
  } else {
    os << x.radical_part().get_str();
  }
  os << "*sqrt(" << x.radicand().get_str() << ")";
  return os.str();
}

}  // namespace center_order
