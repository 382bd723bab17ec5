#include <algorithm>

#include "center_order/exactnum.hpp"

namespace center_order {

namespace {

std::vector<Integer> as_integers(const UniPoly& p) {
  UniPoly q = p.primitive();
  std::vector<Integer> out;
  out.reserve(q.coeffs().size());
  for (const auto& v : q.coeffs()) out.push_back(v.get_num());
  return out;
}

// sign of d^deg * p(n/d), d > 0
int int_sign_at(const std::vector<Integer>& c, const Integer& n, const Integer& d) {
  if (c.empty()) return 0;
  Integer acc = c.back();
  Integer dp = 1;
  for (size_t i = c.size() - 1; i-- > 0;) {
    dp *= d;
    acc *= n;
    acc += c[i] * dp;
  }
  return sgn(acc);
}

int sign_variations(const std::vector<Rational>& c) {
  int v = 0, last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  UniPoly a = squarefree_part(p).primitive();
  seq_.push_back(a);
  if (a.degree() > 0) {
    UniPoly b = a.derivative().primitive();
    while (!b.is_zero()) {
      seq_.push_back(b);
      UniPoly r = (-poly_rem(a, b)).primitive();
      a = std::move(b);
      b = std::move(r);
    }
  }
  for (const auto& s : seq_) ints_.push_back(as_integers(s));
}

int SturmSequence::base_sign(const Rational& x) const {
  return int_sign_at(ints_.front(), x.get_num(), x.get_den());
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& c : ints_) {
    int s = int_sign_at(c, x.get_num(), x.get_den());
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::variations_at_infinity(int direction) const {
  int v = 0, last = 0;
  for (const auto& c : ints_) {
    int s = sgn(c.back());
    if (direction < 0 && (c.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  // V(lo) - V(hi) counts roots in (lo, hi]
  int n = variations(lo) - variations(hi);
  if (base_sign(hi) == 0) --n;
  return n;
}

int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("sturm_root_count of the zero polynomial");
  return SturmSequence(p).count(lo, hi);
}

int descartes_bound(const UniPoly& p, const Rational& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) throw DomainError("descartes_bound of the zero polynomial");
  if (!hi) return sign_variations(p.shift(lo).coeffs());
  // (lo, hi) -> (0, 1) -> (0, inf) via x = 1/(1+y)
  UniPoly q = p.shift(lo).scale_arg(*hi - lo).reversed().shift(1);
  int v = sign_variations(q.coeffs());
  return v;
}

const char* to_string(PolySign s) {
  switch (s) {
    case PolySign::Positive: return "Positive";
    case PolySign::Negative: return "Negative";
    case PolySign::Zero: return "Zero";
    case PolySign::Mixed: return "Mixed";
  }
  return "?";
}

PolySign poly_sign_on_interval(const UniPoly& p, const Rational& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) return PolySign::Zero;
  Rational sample = hi ? Rational((lo + *hi) / 2) : Rational(lo + 1);
  bool rootless = false;
  if (p.degree() == 0) {
    rootless = true;
  } else if (descartes_bound(p, lo, hi) == 0) {
    rootless = true;
  } else {
    SturmSequence s(p);
    int n = hi ? s.count(lo, *hi) : s.variations(lo) - s.variations_at_infinity(+1);
    rootless = (n == 0);
  }
  if (!rootless) return PolySign::Mixed;
  return p.sign_at(sample) > 0 ? PolySign::Positive : PolySign::Negative;
}

double RootIsolation::approx() const { return midpoint().get_d(); }

namespace {

// Make interval endpoints non-roots; the open interval (lo, hi) holds exactly one root.
void clean_endpoints(RootIsolation& r, const SturmSequence& s) {
  while (!r.exact() && (s.base_sign(r.lo) == 0 || s.base_sign(r.hi) == 0)) {
    Rational m = r.midpoint();
    if (s.base_sign(m) == 0) {
      r.lo = r.hi = m;
      return;
    }
    if (s.count(r.lo, m) == 1) r.hi = m;
    else r.lo = m;
  }
}

void bisect_once(RootIsolation& r) {
  const UniPoly& d = r.defining_polynomial;
  Rational m = r.midpoint();
  int sm = d.sign_at(m);
  if (sm == 0) {
    r.lo = r.hi = m;
    return;
  }
  if (d.sign_at(r.lo) * sm < 0) r.hi = m;
  else r.lo = m;
}

int multiplicity_in(const UniPoly& p, const RootIsolation& r) {
  int m = 1;
  UniPoly q = p.derivative();
  while (!q.is_zero() && sign_at_root(q, r) == 0) {
    ++m;
    q = q.derivative();
  }
  return m;
}

}  // namespace

std::vector<RootIsolation> isolate_roots(const UniPoly& p, const Rational& lo,
                                         const std::optional<Rational>& hi, const Rational& width) {
  if (p.is_zero()) throw DomainError("isolate_roots of the zero polynomial");
  std::vector<RootIsolation> out;
  if (p.degree() == 0) return out;
  UniPoly d = squarefree_part(p).primitive();
  if (descartes_bound(d, lo, hi) == 0) return out;
  SturmSequence s(d);
  Rational top = hi ? *hi : std::max(cauchy_bound(d), Rational(lo + 1));

  struct Job { Rational l, h; };
  std::vector<Job> stack{{lo, top}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    int n = s.count(j.l, j.h);
    if (n == 0) continue;
    if (n == 1) {
      RootIsolation r{d, j.l, j.h, 1};
      clean_endpoints(r, s);
      out.push_back(std::move(r));
      continue;
    }
    Rational m = (j.l + j.h) / 2;
    // right half pushed first so roots come out ascending
    stack.push_back({m, j.h});
    if (s.base_sign(m) == 0) out.push_back(RootIsolation{d, m, m, 1});
    stack.push_back({j.l, m});
  }
  std::sort(out.begin(), out.end(), [](const RootIsolation& a, const RootIsolation& b) { return a.lo < b.lo; });
  bool squarefree = d.degree() == p.degree();
  for (auto& r : out) {
    refine(r, width);
    if (!squarefree) r.multiplicity_hint = multiplicity_in(p, r);
  }
  return out;
}

void refine(RootIsolation& r, const Rational& width) {
  while (!r.exact() && r.hi - r.lo > width) bisect_once(r);
}

void tighten_above(RootIsolation& r, const Rational& bound_lo) {
  while (!r.exact() && !(r.lo > bound_lo)) bisect_once(r);
}

void tighten_below(RootIsolation& r, const Rational& bound_hi) {
  while (!r.exact() && !(r.hi < bound_hi)) bisect_once(r);
}

int sign_at_root(const UniPoly& q, RootIsolation r) {
  if (q.is_zero()) return 0;
  if (r.exact()) return q.sign_at(r.lo);
  if (q.degree() == 0) return sign(q.lead());
  UniPoly g = poly_gcd(q, r.defining_polynomial);
  if (g.degree() > 0 && SturmSequence(g).count(r.lo, r.hi) > 0) return 0;
  UniPoly qs = squarefree_part(q);
  if (descartes_bound(qs, r.lo, r.hi) > 0) {
    SturmSequence s(qs);
    while (!r.exact() && s.count(r.lo, r.hi) > 0) bisect_once(r);
    if (r.exact()) return q.sign_at(r.lo);
  }
  return q.sign_at(r.midpoint());
}

bool same_root(RootIsolation a, RootIsolation b) {
  if (a.hi < b.lo || b.hi < a.lo) return false;
  if (a.exact()) return b.defining_polynomial.sign_at(a.lo) == 0;
  if (b.exact()) return a.defining_polynomial.sign_at(b.lo) == 0;
  Rational L = std::max(a.lo, b.lo), H = std::min(a.hi, b.hi);
  if (!(L < H)) return false;
  UniPoly g = poly_gcd(a.defining_polynomial, b.defining_polynomial);
  if (g.degree() <= 0) return false;
  return SturmSequence(g).count(L, H) > 0;
}

void separate(RootIsolation& a, RootIsolation& b) {
  for (int guard = 0; !(a.hi < b.lo || b.hi < a.lo); ++guard) {
    if (guard > 4000) throw DomainError("separate: roots not distinct");
    if (a.exact() && b.exact()) {
      if (a.lo == b.lo) throw DomainError("separate: identical roots");
      return;
    }
    if (b.exact() || (!a.exact() && a.hi - a.lo >= b.hi - b.lo)) bisect_once(a);
    else bisect_once(b);
  }
}

}  // namespace center_order
