#include <gtest/gtest.h>

#include <boost/multiprecision/mpfr.hpp>
#include <random>

#include "center_order/exactnum.hpp"

using namespace center_order;
namespace bmp = boost::multiprecision;
using Big = bmp::number<bmp::mpfr_float_backend<61>>;  // ~200 bits

static Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

TEST(Rational, CanonicalForm) {
  Rational x = R(6, -4);
  EXPECT_EQ(x.get_num(), -3);
  EXPECT_EQ(x.get_den(), 2);
  EXPECT_EQ(parse_rational("1.25"), R(5, 4));
  EXPECT_EQ(parse_rational("-3/4"), R(-3, 4));
  EXPECT_EQ(parse_rational(" 7 "), R(7));
  EXPECT_THROW(parse_rational("x1"), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
}

TEST(Rational, FieldLawsOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 500);
  for (int i = 0; i < 2000; ++i) {
    Rational a = R(num(rng), den(rng)), b = R(num(rng), den(rng)), c = R(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    Rational s = a * b + c;
    EXPECT_EQ(mpz_cmp_ui(s.get_den_mpz_t(), 0) > 0, true);
    Integer g;
    mpz_gcd(g.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    EXPECT_TRUE(sgn(s) == 0 ? s.get_den() == 1 : g == 1);
  }
}

TEST(QuadExt, SignExamples) {
  EXPECT_EQ(quad_sign(QuadExt(R(1), R(0), R(2))), 1);
  EXPECT_EQ(quad_sign(QuadExt(R(0), R(-1), R(3))), -1);
  EXPECT_EQ(quad_sign(QuadExt(R(-1), R(1), R(2))), 1);
  EXPECT_EQ(quad_sign(QuadExt(R(3), R(-2), R(2))), 1);   // 3 > 2 sqrt 2
  EXPECT_EQ(quad_sign(QuadExt(R(2), R(-3), R(2))), -1);
}

TEST(QuadExt, NegativeRadicandIsDomainError) {
  EXPECT_THROW(QuadExt(R(0), R(1), R(-2)), DomainError);
}

TEST(QuadExt, PerfectSquareCollapses) {
  QuadExt x(R(1), R(2), R(9, 4));
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(x.rational_part(), R(4));
}

TEST(QuadExt, MixedRadicandsRejected) {
  QuadExt x(R(0), R(1), R(2)), y(R(0), R(1), R(3));
  EXPECT_THROW(x + y, DomainError);
  EXPECT_NO_THROW(x + QuadExt(R(5)));
}

TEST(QuadExt, FieldOperations) {
  QuadExt x(R(1), R(1), R(2));  // 1 + sqrt2
  QuadExt y = x * x;             // 3 + 2 sqrt 2
  EXPECT_EQ(y.rational_part(), R(3));
  EXPECT_EQ(y.radical_part(), R(2));
  QuadExt one = x * x.inverse();
  EXPECT_TRUE(one.is_rational());
  EXPECT_EQ(one.rational_part(), R(1));
  EXPECT_THROW(QuadExt(R(0)).inverse(), DomainError);
}

TEST(QuadExt, SignAgreesWithHighPrecisionOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 60), rad(0, 90);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    QuadExt x(R(num(rng), den(rng)), R(num(rng), den(rng)), R(rad(rng), den(rng)));
    auto big = [](const Rational& q) {
      return Big(q.get_num().get_str().c_str()) / Big(q.get_den().get_str().c_str());
    };
    Big v = big(x.rational_part()) + big(x.radical_part()) * sqrt(big(x.radicand()));
    int s = quad_sign(x);
    if (abs(v) < Big("1e-50")) {
      EXPECT_EQ(s, 0);
      continue;
    }
    EXPECT_EQ(s, v > 0 ? 1 : -1) << to_string(x);
    ++checked;
  }
  EXPECT_GT(checked, 9000);
}

TEST(UniPoly, ArithmeticAndShift) {
  UniPoly p = UniPoly::from_ints({-2, 0, 1});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.eval(R(3)), R(7));
  UniPoly s = p.shift(R(1));  // (x+1)^2 - 2
  EXPECT_EQ(s, UniPoly::from_ints({-1, 2, 1}));
  UniPoly q, r;
  divmod(UniPoly::from_ints({-1, 0, 0, 1}), UniPoly::from_ints({-1, 1}), q, r);
  EXPECT_EQ(q, UniPoly::from_ints({1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
  UniPoly g = poly_gcd(UniPoly::from_ints({-1, 0, 1}), UniPoly::from_ints({1, 2, 1}));
  EXPECT_EQ(g, UniPoly::from_ints({1, 1}));
  EXPECT_EQ(squarefree_part(UniPoly::from_ints({1, 2, 1})).degree(), 1);
}

TEST(Sturm, SpecExamples) {
  EXPECT_EQ(sturm_root_count(UniPoly::from_ints({-2, 0, 1}), R(0), R(2)), 1);
  EXPECT_EQ(sturm_root_count(UniPoly::from_ints({1, 0, 1}), R(-10), R(10)), 0);
  UniPoly p = UniPoly({R(-1, 2), R(1)}) * UniPoly({R(-1, 3), R(1)});
  EXPECT_EQ(sturm_root_count(p, R(0), R(1)), 2);
  EXPECT_THROW(sturm_root_count(UniPoly(), R(0), R(1)), DomainError);
}

TEST(Sturm, EndpointRootsAreExcluded) {
  UniPoly p = UniPoly::from_ints({0, -1, 1});  // roots 0, 1
  EXPECT_EQ(sturm_root_count(p, R(0), R(1)), 0);
  EXPECT_EQ(sturm_root_count(p, R(-1), R(1)), 1);
  EXPECT_EQ(sturm_root_count(p, R(0), R(2)), 1);
  UniPoly sq = UniPoly::from_ints({1, -2, 1});  // (x-1)^2
  EXPECT_EQ(sturm_root_count(sq, R(0), R(2)), 1);
}

TEST(Sturm, AgreesWithMeshOnRandomRationalRootProducts) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 7), cnt(1, 6);
  for (int t = 0; t < 200; ++t) {
    UniPoly p = UniPoly::constant(1);
    std::vector<Rational> roots;
    int n = cnt(rng);
    for (int i = 0; i < n; ++i) {
      Rational r = R(num(rng), den(rng));
      roots.push_back(r);
      p = p * UniPoly({-r, R(1)});
    }
    Rational lo = R(num(rng), 3), hi = lo + R(1 + std::abs(num(rng)), 2);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    int expect = 0;
    for (auto& r : roots)
      if (r > lo && r < hi) ++expect;
    EXPECT_EQ(sturm_root_count(p, lo, hi), expect);
  }
}

TEST(PolySign, SpecExamples) {
  EXPECT_EQ(poly_sign_on_interval(UniPoly::from_ints({1, 0, 1}), R(-1), R(1)), PolySign::Positive);
  EXPECT_EQ(poly_sign_on_interval(UniPoly::from_ints({0, -1, 1}), R(0), R(1)), PolySign::Negative);
  EXPECT_EQ(poly_sign_on_interval(UniPoly({R(-1, 2), R(1)}), R(0), R(1)), PolySign::Mixed);
  EXPECT_EQ(poly_sign_on_interval(UniPoly(), R(0), R(1)), PolySign::Zero);
  EXPECT_EQ(poly_sign_on_interval(UniPoly::from_ints({0, 0, 1}), R(-1), R(1)), PolySign::Mixed);
  EXPECT_EQ(poly_sign_on_interval(UniPoly::from_ints({-5, 1}), R(1), std::nullopt), PolySign::Mixed);
  EXPECT_EQ(poly_sign_on_interval(UniPoly::from_ints({-1, 1}), R(1), std::nullopt), PolySign::Positive);
}

TEST(Isolate, SpecExamples) {
  auto r1 = isolate_roots(UniPoly::from_ints({1, 0, -4, 0, 1}), R(1), R(100), R(1, 1000000));
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_LE(r1[0].hi - r1[0].lo, R(1, 1000000));
  EXPECT_NEAR(r1[0].approx(), 1.9318516, 1e-6);

  auto r2 = isolate_roots(UniPoly::from_ints({-1, 1, 6, 0, -11, -13, 2}), R(1), R(100), R(1, 10000));
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_NEAR(r2[0].approx(), 7.25054, 1e-4);

  auto r3 = isolate_roots(UniPoly::from_ints({-2, -1, 2}), R(1), R(100), R(1, 1000000));
  ASSERT_EQ(r3.size(), 1u);
  EXPECT_NEAR(r3[0].approx(), 1.2807764, 1e-6);
}

TEST(Isolate, InfiniteUpperBoundUsesCauchy) {
  auto r = isolate_roots(UniPoly::from_ints({-1000, 1}), R(1), std::nullopt, R(1, 10));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].lo <= 1000 && r[0].hi >= 1000);
}

TEST(Isolate, ExactRationalRootsAndOneSignChangeEach) {
  UniPoly p = UniPoly::from_ints({-2, 0, 1}) * UniPoly::from_ints({-1, 2}) * UniPoly::from_ints({-1, 2});
  auto rs = isolate_roots(p, R(-5), R(5), R(1, 100));
  ASSERT_EQ(rs.size(), 3u);
  UniPoly sq = squarefree_part(p);
  for (size_t i = 0; i < rs.size(); ++i) {
    if (i + 1 < rs.size()) EXPECT_LT(rs[i].hi, rs[i + 1].lo);
    if (rs[i].exact()) {
      EXPECT_EQ(sq.sign_at(rs[i].lo), 0);
      EXPECT_EQ(rs[i].lo, R(1, 2));
      EXPECT_EQ(rs[i].multiplicity_hint, 2);
    } else {
      EXPECT_LT(sq.sign_at(rs[i].lo) * sq.sign_at(rs[i].hi), 0);
    }
  }
}

TEST(Isolate, SignAtAlgebraicRoot) {
  // sqrt2 root of x^2-2; sign of x-1 is +, of x^2-2 is 0, of 3-2x is -
  auto rs = isolate_roots(UniPoly::from_ints({-2, 0, 1}), R(0), R(10), R(1));
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(sign_at_root(UniPoly::from_ints({-1, 1}), rs[0]), 1);
  EXPECT_EQ(sign_at_root(UniPoly::from_ints({-4, 0, 2}), rs[0]), 0);
  EXPECT_EQ(sign_at_root(UniPoly::from_ints({3, -2}), rs[0]), 1);
  EXPECT_EQ(sign_at_root(UniPoly::from_ints({-3, 2}), rs[0]), -1);
  // close convergents on both sides; the sign must still be exact
  EXPECT_EQ(sign_at_root(UniPoly({R(-99, 70), R(1)}), rs[0]), -1);
  EXPECT_EQ(sign_at_root(UniPoly({R(-140, 99), R(1)}), rs[0]), 1);
}

TEST(Isolate, SameRootAcrossDefiningPolynomials) {
  auto a = isolate_roots(UniPoly::from_ints({-2, 0, 1}), R(0), R(10), R(1));
  auto b = isolate_roots(UniPoly::from_ints({-2, 0, 1}) * UniPoly::from_ints({-3, 1}), R(0), R(10), R(1, 2));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(same_root(a[0], b[0]));
  EXPECT_FALSE(same_root(a[0], b[1]));
}

TEST(Descartes, BoundsRootCount) {
  UniPoly p = UniPoly::from_ints({2, -3, 1});  // roots 1, 2
  EXPECT_EQ(descartes_bound(p, R(3), std::nullopt), 0);
  EXPECT_EQ(descartes_bound(p, R(0), R(3)), 2);
  EXPECT_EQ(descartes_bound(p, R(3, 2), R(3)), 1);
}
