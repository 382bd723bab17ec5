#include <cmath>
#include <random>
#include <set>

#include "center_order/families.hpp"

namespace center_order {

TriangleFamily family(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::TallIsosceles: return {kind, "tall isosceles (1, k, k), k > 1"};
    case FamilyKind::IsoscelesAll: return {kind, "isosceles (1, k, k), k > 1/2"};
    case FamilyKind::AcuteMinA: return {kind, "acute with a = 1 < b, c"};
    case FamilyKind::AcuteScalene: return {kind, "acute with 1 = a < b < c"};
  }
  return {kind, ""};
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::TallIsosceles: return "tall";
    case FamilyKind::IsoscelesAll: return "isosceles";
    case FamilyKind::AcuteMinA: return "acute-min-a";
    case FamilyKind::AcuteScalene: return "acute-scalene";
  }
  return "?";
}

TriangleFamily parse_family(const std::string& name) {
  if (name == "tall" || name == "tall-isosceles") return family(FamilyKind::TallIsosceles);
  if (name == "isosceles" || name == "isosceles-all") return family(FamilyKind::IsoscelesAll);
  if (name == "acute-min-a" || name == "acute") return family(FamilyKind::AcuteMinA);
  if (name == "acute-scalene" || name == "scalene") return family(FamilyKind::AcuteScalene);
  throw DomainError("unknown family '" + name + "'");
}

bool contains(const TriangleFamily& f, const Sides& s) {
  if (!s.is_triangle()) return false;
  Rational b = s.b / s.a, c = s.c / s.a;
  switch (f.kind) {
    case FamilyKind::TallIsosceles: return b == c && b > 1;
    case FamilyKind::IsoscelesAll: return b == c && b * 2 > 1;
    case FamilyKind::AcuteMinA:
    case FamilyKind::AcuteScalene: {
      Rational b2 = b * b, c2 = c * c;
      bool ok = b > 1 && c > 1 && b2 < 1 + c2 && c2 < 1 + b2 && 1 < b2 + c2;
      return f.kind == FamilyKind::AcuteMinA ? ok : ok && b < c;
    }
  }
  return false;
}

namespace {

Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational rationalize(double x, int den) { return rat(std::lround(x * den), den); }

}  // namespace

std::vector<Sides> sample(const TriangleFamily& f, const SamplePlan& plan) {
  if (plan.grid_density < 0 || plan.random_count < 0 || plan.denominator_bound <= 0)
    throw DomainError("invalid sample plan");
  std::vector<Sides> out;
  std::set<std::pair<Rational, Rational>> seen;
  auto push = [&](const Rational& b, const Rational& c) {
    Sides s{Rational(1), b, c};
    if (!contains(f, s)) return false;
    if (!seen.emplace(b, c).second) return false;
    out.push_back(s);
    return true;
  };
  std::mt19937_64 rng(plan.rng_seed);
  const int D = plan.denominator_bound;
  const int n = plan.grid_density;

  if (f.is_isosceles()) {
    Rational lo = f.iso_lower();
    Rational hi = plan.box_hi.value_or(Rational(3));
    for (int i = 1; i <= n; ++i) {
      Rational k = lo + (hi - lo) * rat(i, n + 1);
      push(k, k);
    }
    // random denominators in [D/2, D] keep the candidate pool large
    std::uniform_int_distribution<long> pick_den(std::max(1, D / 2), D);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double width = Rational(hi - lo).get_d();
    int accepted = 0;
    for (long tries = 0; accepted < plan.random_count && tries < 20L * plan.random_count + 100; ++tries) {
      long d = pick_den(rng);
      long j = std::lround(unit(rng) * width * d);
      if (j <= 0) continue;
      Rational k = lo + rat(j, d);
      if (k >= hi) continue;
      if (push(k, k)) ++accepted;
    }
    return out;
  }

  Rational hi = plan.box_hi.value_or(Rational(4));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) push(1 + (hi - 1) * rat(i, n + 1), 1 + (hi - 1) * rat(j, n + 1));
  const double H = hi.get_d();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int accepted = 0;
  for (long tries = 0; accepted < plan.random_count && tries < 50L * plan.random_count + 100; ++tries) {
    Rational b = rationalize(1 + (H - 1) * unit(rng), D);
    double bd = b.get_d();
    // acute with a = 1: sqrt(b^2 - 1) < c < sqrt(b^2 + 1)
    double clo = std::max(1.0, std::sqrt(std::max(0.0, bd * bd - 1)));
    double chi = std::min(H, std::sqrt(bd * bd + 1));
    if (f.kind == FamilyKind::AcuteScalene) clo = std::max(clo, bd);
    if (!(clo < chi)) continue;
    Rational c = rationalize(clo + (chi - clo) * unit(rng), D);
    if (push(b, c)) ++accepted;
  }
  return out;
}

// ---- isosceles specialization ----

const IsoSpecialization& iso_specialize() {
  static const IsoSpecialization s = [] {
    IsoSpecialization x;
    x.E = UniPoly::from_ints({-1, 0, 4});
    x.radicand = x.E * Rational(3);
    return x;
  }();
  return s;
}

SurdUni IsoSpecialization::apply(const SurdPoly& p) const {
  SurdUni r;
  r.a = p.r.iso();
  r.b = p.s.iso() * Rational(1, 4);
  return r;
}

IsoForm iso_form(const CenterForms& f, bool reduce) {
  const auto& iso = iso_specialize();
  IsoForm x{iso.apply(f.coords[0]), iso.apply(f.coords[1])};
  if (!(x.q == iso.apply(f.coords[2]))) throw CatalogDataError(center_label(f.key) + " is off the median for b = c");
  if (reduce) {
    UniPoly g = poly_gcd(content_gcd(x.p), content_gcd(x.q));
    if (x.p.is_zero()) g = content_gcd(x.q);
    if (x.q.is_zero()) g = content_gcd(x.p);
    if (g.degree() > 0) {
      x.p = divide(x.p, g);
      x.q = divide(x.q, g);
    }
  }
  return x;
}

IsoRatio iso_squared_distance_to_A(const CenterForms& f) {
  // normalized displacement from A: (-2q/s, q/s, q/s); d^2 = (4k^2 - 1) q^2 / s^2 at a = 1
  const auto& iso = iso_specialize();
  IsoForm x = iso_form(f, true);
  SurdUni s = x.p + x.q + x.q;
  SurdUni q2 = mul(x.q, x.q, iso.radicand);
  return {scale(q2, iso.E), mul(s, s, iso.radicand)};
}

}  // namespace center_order
