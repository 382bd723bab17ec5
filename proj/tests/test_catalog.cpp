#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "center_order/catalog.hpp"

using namespace center_order;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::load(CENTER_ORDER_DATA);
  return c;
}

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool proportional(const BaryPoint& p, const BaryPoint& q) {
  return (p.u * q.v - p.v * q.u).is_zero() && (p.v * q.w - p.w * q.v).is_zero() &&
         (p.w * q.u - p.u * q.w).is_zero();
}

// Cartesian placement: B=(0,0), C=(a,0), A above.
struct Cart {
  double ax, ay, a;
};
Cart place(double a, double b, double c) {
  double x = (a * a + c * c - b * b) / (2 * a);
  return {x, std::sqrt(c * c - x * x), a};
}
std::array<double, 2> to_xy(const BaryPoint& p, const Cart& t) {
  double u = p.u.approx(), v = p.v.approx(), w = p.w.approx(), s = u + v + w;
  return {(u * t.ax + w * t.a) / s, (u * t.ay) / s};
}

}  // namespace

TEST(Parser, GrammarExamples) {
  EXPECT_EQ(parse_center_expr("a").kind, CenterExpr::Kind::Symbol);
  EXPECT_EQ(parse_center_expr("1").kind, CenterExpr::Kind::Literal);
  CenterExpr e = parse_center_expr("2*a^4-a^2*(b^2+c^2)-(b^2-c^2)^2");
  EXPECT_EQ(e.kind, CenterExpr::Kind::Sub);
  EXPECT_EQ(expand(e).r, cat().forms(30).coords[0].r);
  EXPECT_EQ(expand(parse_center_expr(" ( a + b ) ^ 2 ")).r,
            expand(parse_center_expr("a^2+2*a*b+b^2")).r);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_center_expr("a^(-1)"), ParseError);
  EXPECT_THROW(parse_center_expr("2a"), ParseError);
  EXPECT_THROW(parse_center_expr("(a+b"), ParseError);
  EXPECT_THROW(parse_center_expr("a+b)"), ParseError);
  EXPECT_THROW(parse_center_expr("a^1.5"), ParseError);
  EXPECT_THROW(parse_center_expr("a+x"), ParseError);
  EXPECT_THROW(parse_center_expr("   "), ParseError);
  try {
    parse_center_expr("a + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 4u);
  }
}

TEST(Expand, UIsReducedWithAreaTerm) {
  SurdPoly u2 = expand(parse_center_expr("U^2"));
  EXPECT_FALSE(u2.has_surd());
  EXPECT_EQ(u2.r, area_poly_E() * R(3, 16));
}

TEST(Catalog, CoverageAndValidation) {
  for (int n = 1; n <= 100; ++n) EXPECT_TRUE(cat().contains(n)) << n;
  EXPECT_TRUE(cat().contains(650));
  EXPECT_TRUE(cat().contains(kVertexA));
  auto rep = validate_catalog(cat());
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checked, 101);
}

TEST(Catalog, ValidationReportsBadEntries) {
  auto rep = validate_catalog_text("1 ; a ; ok\n2 ; a^(-1) ; bad\n3 ; a-a ; zero\n4 ; a+U ; inhomogeneous\n");
  ASSERT_EQ(rep.failures.size(), 3u);
  EXPECT_EQ(rep.failures[0].index, 2);
  EXPECT_NE(rep.failures[0].reason.find("exponent"), std::string::npos);
  EXPECT_EQ(rep.failures[1].index, 3);
  EXPECT_NE(rep.failures[1].reason.find("zero triple"), std::string::npos);
  EXPECT_EQ(rep.failures[2].index, 4);
  EXPECT_THROW(Catalog::from_text("1 ; a ; x\n1 ; b ; dup\n"), CatalogDataError);
}

TEST(Catalog, DisplayedFormulasMatch) {
  EXPECT_EQ(cat().def(11).text, "(b-c)^2*(b+c-a)");
  EXPECT_EQ(cat().def(30).text, "2*a^4-a^2*(b^2+c^2)-(b^2-c^2)^2");
  // the displayed second coordinate of X23 is b^2(-a^4+a^2c^2+b^4-c^4)
  EXPECT_EQ(cat().forms(23).coords[1].r, expand(parse_center_expr("b^2*(a^2*c^2+b^4-c^4-a^4)")).r);
  EXPECT_EQ(cat().forms(11).coords[1].r, expand(parse_center_expr("(a-c)^2*(c+a-b)")).r);
}

TEST(EvalCenter, SpecExamples) {
  BaryPoint g = eval_center(cat(), 2, make_sides(3, 4, 5));
  EXPECT_TRUE(g.u == QuadExt(1) && g.v == QuadExt(1) && g.w == QuadExt(1));
  for (Rational t : {R(1, 3), R(1, 2), R(3, 2), R(19, 10)}) {
    BaryPoint p = eval_center(cat(), 11, {t, R(1), R(1)});
    EXPECT_TRUE(proportional(p, {QuadExt(0), QuadExt(1), QuadExt(1)}));
  }
  BaryPoint x30 = eval_center(cat(), 30, make_sides(6, 9, 13));
  EXPECT_TRUE(x30.sum().is_zero());
  EXPECT_THROW(eval_center(cat(), 101, make_sides(3, 4, 5)), LookupError);
  EXPECT_THROW(eval_center(cat(), 1, make_sides(1, 2, 3)), DomainError);
}

TEST(EvalCenter, RationalSidesMatchScaledIntegers) {
  // exact values, not just proportional: f(a,b,c) at (1/2, 2/3, 3/4)
  Sides s{R(1, 2), R(2, 3), R(3, 4)};
  for (int n : {3, 13, 26, 61}) {
    BaryPoint p = eval_center(cat(), n, s);
    const CenterForms& f = cat().forms(n);
    AreaContext ctx = AreaContext::of(s);
    QuadExt want = QuadExt(f.coords[0].r.eval(s.a, s.b, s.c)) +
                   ctx.U * QuadExt(f.coords[0].s.eval(s.a, s.b, s.c));
    EXPECT_TRUE(p.u == want) << n;
  }
}

TEST(EvalCenter, CartesianOracle) {
  // circumcenter, orthocenter, incenter, Fermat point from plain geometry
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> side(5, 40);
  int tested = 0;
  while (tested < 50) {
    int a = side(rng), b = side(rng), c = side(rng);
    Sides s = make_sides(a, b, c);
    if (!s.is_triangle()) continue;
    ++tested;
    Cart t = place(a, b, c);
    double Ax = t.ax, Ay = t.ay, Cx = a;
    // circumcenter: x = a/2, equidistant from A
    double ox = Cx / 2, oy = (Ax * Ax + Ay * Ay - Ax * Cx) / (2 * Ay);
    auto o = to_xy(eval_center(cat(), 3, s), t);
    EXPECT_NEAR(o[0], ox, 1e-9);
    EXPECT_NEAR(o[1], oy, 1e-9);
    // orthocenter: x = Ax, on altitude from B perpendicular to CA
    double hy = -(Ax - Cx) * Ax / Ay;
    auto h = to_xy(eval_center(cat(), 4, s), t);
    EXPECT_NEAR(h[0], Ax, 1e-9);
    EXPECT_NEAR(h[1], hy, 1e-9);
    // incenter: weighted by opposite sides
    double p = a + b + c;
    auto i = to_xy(eval_center(cat(), 1, s), t);
    EXPECT_NEAR(i[0], (a * Ax + c * Cx) / p, 1e-9);
    EXPECT_NEAR(i[1], a * Ay / p, 1e-9);
    // Fermat point sees every side under 120 degrees when all angles < 120
    double ca = (b * b + c * c - double(a) * a) / (2.0 * b * c);
    double cb = (a * a + c * c - double(b) * b) / (2.0 * a * c);
    double cc = (a * a + b * b - double(c) * c) / (2.0 * a * b);
    if (ca > -0.5 && cb > -0.5 && cc > -0.5) {
      auto f = to_xy(eval_center(cat(), 13, s), t);
      auto angle = [&](double px, double py, double qx, double qy) {
        double ux = px - f[0], uy = py - f[1], vx = qx - f[0], vy = qy - f[1];
        return std::acos((ux * vx + uy * vy) / std::hypot(ux, uy) / std::hypot(vx, vy));
      };
      EXPECT_NEAR(angle(0, 0, Cx, 0), 2 * M_PI / 3, 1e-8);
      EXPECT_NEAR(angle(Ax, Ay, Cx, 0), 2 * M_PI / 3, 1e-8);
    }
  }
}

TEST(EvalCenter, HomogeneityAndCyclicConsistency) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(10, 60), den(1, 9), lam(1, 12);
  int done = 0;
  while (done < 20) {
    Sides s{R(num(rng), den(rng)), R(num(rng), den(rng)), R(num(rng), den(rng))};
    if (!s.is_triangle()) continue;
    ++done;
    Rational l = R(lam(rng), lam(rng));
    Sides t{s.a * l, s.b * l, s.c * l};
    Sides rot{s.b, s.c, s.a};
    for (int n : cat().indices()) {
      BaryPoint p = eval_center(cat(), n, s);
      BaryPoint pt = eval_center(cat(), n, t);
      Rational d = AreaContext::of(s).radicand;
      BaryPoint pr{with_radicand(pt.u, d), with_radicand(pt.v, d), with_radicand(pt.w, d)};
      EXPECT_TRUE(proportional(p, pr)) << "homogeneity X" << n;
      BaryPoint q = eval_center(cat(), n, rot);
      // (a,b,c) -> (b,c,a) maps (p,q,r) to (q,r,p) in this convention
      EXPECT_TRUE(q.u == p.v && q.v == p.w && q.w == p.u) << "cyclic X" << n;
    }
  }
}

TEST(EvalCenter, MedianSymmetryOnIsosceles) {
  for (Rational k : {R(3, 5), R(7, 4), R(5)}) {
    for (int n = 1; n <= 100; ++n) {
      BaryPoint p = eval_center(cat(), n, {R(1), k, k});
      EXPECT_TRUE(p.v == p.w) << n;
    }
  }
}

TEST(EvalCenter, X23OnSideACWithSqrt61) {
  // a=1, b=2, c^2=(1+sqrt61)/2
  QuadExt c2(R(1, 2), R(1, 2), R(61));
  BaryPoint p = eval_center_squared_sides(cat(), 23, {QuadExt(1), QuadExt(4), c2});
  EXPECT_TRUE(p.v.is_zero());
  EXPECT_TRUE(p.u == QuadExt(R(-57, 2), R(3, 2), R(61)));
  EXPECT_EQ(quad_sign(p.w), 1);
  EXPECT_THROW(eval_center_squared_sides(cat(), 1, {QuadExt(1), QuadExt(4), c2}), DomainError);
}

TEST(EvalNumeric, MatchesExactAt256Bits) {
  PrecisionScope scope(256);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(10, 90), den(1, 12);
  std::uniform_int_distribution<int> pick(0, 100);
  auto indices = cat().indices();
  int done = 0;
  while (done < 1000) {
    Sides s{R(num(rng), den(rng)), R(num(rng), den(rng)), R(num(rng), den(rng))};
    if (!s.is_triangle()) continue;
    ++done;
    int n = indices[pick(rng) % indices.size()];
    BaryPoint p = eval_center(cat(), n, s);
    auto x = eval_center_numeric(cat(), n, {to_real(s.a), to_real(s.b), to_real(s.c)}, 256);
    std::array<QuadExt, 3> e{p.u, p.v, p.w};
    Real scale = 0;
    for (auto& v : x) scale = std::max(scale, Real(abs(v)));
    for (int i = 0; i < 3; ++i) {
      Real ex = to_real(e[i].rational_part());
      if (!e[i].is_rational()) ex += to_real(e[i].radical_part()) * sqrt(to_real(e[i].radicand()));
      EXPECT_LE(Real(abs(ex - x[i])), scale * Real("1e-30")) << "X" << n << " " << s.to_string();
    }
  }
}

TEST(EvalNumeric, CentroidAndDegenerate) {
  auto x = eval_center_numeric(cat(), 2, {Real(3), Real(4), Real(5)}, 128);
  for (auto& v : x) EXPECT_EQ(v, 1);
  EXPECT_THROW(eval_center_numeric(cat(), 2, {Real(1), Real(2), Real(3)}, 128), DomainError);
  EXPECT_THROW(eval_center_numeric(cat(), 2, {Real(3), Real(4), Real(5)}, 32), DomainError);
}

TEST(EvalNumeric, X18Examples) {
  PrecisionScope scope(256);
  Real c1 = sqrt((Real(353) + 15 * sqrt(Real(93))) / 2);
  auto p = eval_center_numeric(cat(), 18, {Real(8), Real(15), c1}, 256);
  EXPECT_LE(Real(abs(p[1]) / abs(p[0])), Real("1e-20"));
  EXPECT_LE(Real(abs(p[2]) / abs(p[0])), Real("1e-20"));
  Real c2 = 7 * sqrt(35 * (Real(940379) + 2 * sqrt(Real(10302477117))));
  auto q = eval_center_numeric(cat(), 18, {Real(16513), Real(42189), c2}, 256);
  Real m = std::max({Real(abs(q[0])), Real(abs(q[1])), Real(abs(q[2]))});
  EXPECT_LE(Real(abs(q[0] + q[1] + q[2])), m * Real("1e-15"));
}
