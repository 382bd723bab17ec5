#include <gtest/gtest.h>

#include <random>

#include "center_order/families.hpp"

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

}  // namespace

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(family(FamilyKind::AcuteMinA), {R(1), R(6, 5), R(7, 5)}));
  EXPECT_TRUE(contains(family(FamilyKind::AcuteMinA), make_sides(5, 6, 7)));
  EXPECT_FALSE(contains(family(FamilyKind::AcuteScalene), {R(1), R(7, 5), R(6, 5)}));
  EXPECT_FALSE(contains(family(FamilyKind::TallIsosceles), make_sides(1, 1, 1)));
  EXPECT_TRUE(contains(family(FamilyKind::IsoscelesAll), {R(1), R(3, 5), R(3, 5)}));
  EXPECT_FALSE(contains(family(FamilyKind::TallIsosceles), {R(1), R(3, 5), R(3, 5)}));
  EXPECT_FALSE(contains(family(FamilyKind::AcuteMinA), make_sides(3, 4, 5)));   // right angle
  EXPECT_FALSE(contains(family(FamilyKind::AcuteMinA), make_sides(5, 5, 6)));   // a = b tie
}

TEST(Contains, ScaleInvariant) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> n(1, 50), d(1, 9);
  for (int i = 0; i < 500; ++i) {
    Sides s{R(n(rng), d(rng)), R(n(rng), d(rng)), R(n(rng), d(rng))};
    if (i % 3 == 0) s.c = s.b;
    Rational l = R(n(rng), d(rng));
    Sides t{s.a * l, s.b * l, s.c * l};
    for (auto k : {FamilyKind::TallIsosceles, FamilyKind::IsoscelesAll, FamilyKind::AcuteMinA,
                   FamilyKind::AcuteScalene})
      EXPECT_EQ(contains(family(k), s), contains(family(k), t));
  }
}

TEST(Sample, TallGridExample) {
  SamplePlan plan;
  plan.grid_density = 5;
  plan.random_count = 0;
  auto s = sample(family(FamilyKind::TallIsosceles), plan);
  std::vector<Sides> want{{R(1), R(4, 3), R(4, 3)}, {R(1), R(5, 3), R(5, 3)}, {R(1), R(2), R(2)},
                          {R(1), R(7, 3), R(7, 3)}, {R(1), R(8, 3), R(8, 3)}};
  EXPECT_EQ(s, want);
}

TEST(Sample, MembershipDeterminismAndSubset) {
  SamplePlan plan;
  plan.grid_density = 30;
  plan.random_count = 3000;
  plan.rng_seed = 42;
  for (auto k : {FamilyKind::TallIsosceles, FamilyKind::IsoscelesAll, FamilyKind::AcuteMinA,
                 FamilyKind::AcuteScalene}) {
    auto a = sample(family(k), plan);
    auto b = sample(family(k), plan);
    EXPECT_EQ(a, b);
    EXPECT_GE(a.size(), 3000u);
    for (const auto& s : a) EXPECT_TRUE(contains(family(k), s));
  }
  for (const auto& s : sample(family(FamilyKind::AcuteScalene), plan))
    EXPECT_TRUE(contains(family(FamilyKind::AcuteMinA), s));
  plan.rng_seed = 43;
  EXPECT_NE(sample(family(FamilyKind::AcuteMinA), plan), sample(family(FamilyKind::AcuteMinA), SamplePlan{30, 3000, 42, 1000, {}}));
}

TEST(Sample, EmptyPlan) {
  SamplePlan plan;
  plan.grid_density = 0;
  plan.random_count = 0;
  EXPECT_TRUE(sample(family(FamilyKind::AcuteMinA), plan).empty());
}

TEST(IsoSpecialize, X20DistanceToA) {
  IsoRatio d = iso_squared_distance_to_A(cat().forms(20));
  ASSERT_FALSE(d.num.has_surd());
  // d^2 = 1 / ((2k - 1)(2k + 1))
  UniPoly lhs = d.num.a * UniPoly::from_ints({-1, 0, 4});
  EXPECT_EQ(lhs.monic(), d.den.a.monic());
  EXPECT_EQ(lhs.lead() / d.den.a.lead(), 1);
}

TEST(IsoSpecialize, X11AndX2) {
  IsoForm x11 = iso_form(cat().forms(11), true);
  EXPECT_TRUE(x11.p.is_zero());
  EXPECT_EQ(x11.q.a.degree(), 0);
  IsoForm x2 = iso_form(cat().forms(2), true);
  EXPECT_EQ(x2.p.a, x2.q.a);
}

TEST(IsoSpecialize, AgreesWithDirectEvaluation) {
  const auto& iso = iso_specialize();
  for (int n : {3, 13, 15, 18, 26, 61, 70}) {
    IsoForm f = iso_form(cat().forms(n), false);
    for (Rational k : {R(3, 2), R(7, 3), R(5)}) {
      BaryPoint p = eval_center(cat(), n, iso.sides(k));
      QuadExt pk = eval(f.p, iso.radicand, k), qk = eval(f.q, iso.radicand, k);
      EXPECT_TRUE(p.u == pk && p.v == qk && p.w == qk) << n;
    }
  }
}
