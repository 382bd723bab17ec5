#include "center_order/surd_uni.hpp"

#include <algorithm>

namespace center_order {

SurdUni mul(const SurdUni& x, const SurdUni& y, const UniPoly& R) {
  SurdUni z;
  z.a = x.a * y.a;
  if (x.has_surd() && y.has_surd()) z.a += x.b * y.b * R;
  z.b = x.a * y.b + x.b * y.a;
  return z;
}

SurdUni scale(const SurdUni& x, const UniPoly& p) { return {x.a * p, x.b * p}; }

UniPoly norm(const SurdUni& x, const UniPoly& R) {
  if (!x.has_surd()) return x.a;
  return x.a * x.a - x.b * x.b * R;
}

QuadExt eval(const SurdUni& x, const UniPoly& R, const Rational& k) {
  QuadExt v(x.a.eval(k));
  if (x.has_surd()) v += QuadExt(Rational(0), x.b.eval(k), R.eval(k));
  return v;
}

SurdUni divide(const SurdUni& x, const UniPoly& g) {
  return {x.a.is_zero() ? UniPoly() : poly_quo(x.a, g), x.b.is_zero() ? UniPoly() : poly_quo(x.b, g)};
}

UniPoly content_gcd(const SurdUni& x) {
  if (x.b.is_zero()) return x.a.monic();
  if (x.a.is_zero()) return x.b.monic();
  return poly_gcd(x.a, x.b);
}

}  // namespace center_order

namespace center_order {

int sign_at_root(const SurdUni& x, const UniPoly& R, const RootIsolation& r) {
  int sa = sign_at_root(x.a, r);
  if (!x.has_surd()) return sa;
  int sb = sign_at_root(x.b, r);
  if (sb == 0 || sa == sb) return sa;
  if (sa == 0) return sb;
  // opposite signs: |a| against |b| sqrt(R)
  int sn = sign_at_root(norm(x, R), r);
  if (sn == 0) return 0;
  return sn > 0 ? sa : sb;
}

int SignProfile::constant_sign() const {
  if (identically_zero) return 0;
  int s = cell_signs.front();
  if (s == 0) return 0;
  for (int c : cell_signs)
    if (c != s) return 0;
  for (int p : point_signs)
    if (p != s && p != kUndefined) return 0;
  return s;
}

bool SignProfile::occurs(int s) const {
  if (identically_zero) return s == 0;
  for (int c : cell_signs)
    if (c == s) return true;
  for (int p : point_signs)
    if (p == s) return true;
  return false;
}

bool SignProfile::occurs_in_cell(int s) const {
  for (int c : cell_signs)
    if (c == s) return true;
  return false;
}

int SignProfile::undefined_points() const {
  int n = 0;
  for (int p : point_signs) n += p == kUndefined;
  return n;
}

namespace {

void add_roots(const UniPoly& p, const Rational& lo, std::vector<RootIsolation>& out) {
  if (p.degree() <= 0) return;
  for (auto& r : isolate_roots(p, lo, std::nullopt, Rational(1))) out.push_back(std::move(r));
}

// Sorted, pairwise disjoint, duplicates (same real number) removed.
void merge_points(std::vector<RootIsolation>& pts) {
  auto by_lo = [](const RootIsolation& x, const RootIsolation& y) { return x.lo < y.lo; };
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(pts.begin(), pts.end(), by_lo);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      RootIsolation& a = pts[i];
      RootIsolation& b = pts[i + 1];
      if (a.hi < b.lo) continue;
      if (same_root(a, b)) {
        // keep the tighter description
        if (b.hi - b.lo < a.hi - a.lo) a = b;
        pts.erase(pts.begin() + static_cast<long>(i) + 1);
      } else {
        separate(a, b);
      }
      changed = true;
      break;
    }
  }
}

int product_sign_at(const std::vector<SurdUni>& factors, const UniPoly& R, const Rational& k) {
  int s = 1;
  for (const auto& f : factors) {
    s *= quad_sign(eval(f, R, k));
    if (s == 0) break;
  }
  return s;
}

}  // namespace

SignProfile sign_profile(const std::vector<SurdUni>& factors, const std::vector<SurdUni>& poles,
                         const UniPoly& R, const Rational& lo) {
  SignProfile prof;
  for (const auto& f : factors)
    if (f.is_zero()) {
      prof.identically_zero = true;
      return prof;
    }
  std::vector<RootIsolation> pts;
  for (const auto& f : factors) add_roots(norm(f, R), lo, pts);
  for (const auto& p : poles) {
    if (p.is_zero()) throw DomainError("sign_profile: pole vanishes identically");
    add_roots(norm(p, R), lo, pts);
  }
  merge_points(pts);
  for (auto& p : pts) tighten_above(p, lo);
  // cells
  Rational left = lo;
  for (size_t i = 0; i <= pts.size(); ++i) {
    Rational k = i < pts.size() ? simplest_between(left, pts[i].lo) : simplest_between(left, std::nullopt);
    prof.cell_samples.push_back(k);
    prof.cell_signs.push_back(product_sign_at(factors, R, k));
    if (i < pts.size()) left = pts[i].hi;
  }
  for (const auto& r : pts) {
    int s = 1;
    for (const auto& p : poles)
      if (sign_at_root(p, R, r) == 0) s = SignProfile::kUndefined;
    if (s == 1)
      for (const auto& f : factors) {
        s *= sign_at_root(f, R, r);
        if (s == 0) break;
      }
    prof.point_signs.push_back(s);
  }
  prof.points = std::move(pts);
  return prof;
}

}  // namespace center_order
