// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero only when a
// criterion fails outside the documented deviations (Result::known).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "center_order/decide.hpp"
#include "center_order/geom.hpp"
#include "center_order/ordergraph.hpp"

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

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int k : v) s += (s.empty() ? "" : ",") + center_label(k);
  return s;
}

// pass: criterion met. known: failure matches a documented deviation exactly.
struct Result {
  bool pass = false;
  bool known = false;
  std::string detail;
};

const NamedChain& chain(const std::string& name) {
  for (const auto& c : known_chains())
    if (c.name == name) return c;
  throw std::runtime_error("no chain " + name);
}

const OrderGraph& iso_tall() {
  static const OrderGraph g = build_graph(cat(), OrderKind::Isosceles, range(1, 100), GraphOptions{});
  return g;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: isosceles 24-chain ----
Result c1() {
  auto t0 = std::chrono::steady_clock::now();
  const auto& ch = chain("iso-24").chain;
  int good = 0;
  for (size_t i = 0; i + 1 < ch.size(); ++i) {
    Verdict v = compare_iso(cat(), ch[i], ch[i + 1], FamilyKind::TallIsosceles);
    good += v.kind == VerdictKind::CertifiedPrecedes && v.certificate == "sturm";
  }
  std::ostringstream d;
  d << good << "/" << ch.size() - 1 << " links certified (sturm), " << seconds_since(t0) << " s";
  return {good == static_cast<int>(ch.size()) - 1, false, d.str()};
}

// ---- 2: isosceles 48-chain on the tall family ----
Result c2() {
  ChainCheck c = verify_chain(iso_tall(), chain("iso-tall-100").chain);
  std::ostringstream d;
  d << c.certified << "/" << c.links.size() << " certified";
  bool known = false;
  if (c.first_failure) {
    d << ", first failure " << center_label(c.first_failure->first) << "/" << center_label(c.first_failure->second);
    auto v = iso_tall().verdict(98, 74);
    known = c.failed == 1 && *c.first_failure == std::pair(98, 74) && v &&
            v->kind == VerdictKind::CertifiedEqualNowhereComparable;
    if (known) d << " (identical centers)";
  }
  return {c.ok, known, d.str()};
}

// ---- 3: bounding links ----
Result c3() {
  std::vector<std::string> bad;
  for (const char* name : {"iso-bound-15", "iso-bound-24", "iso-bound-29"}) {
    const auto& ch = chain(name).chain;
    for (size_t i = 0; i + 1 < ch.size(); ++i)
      if (compare_iso(cat(), ch[i], ch[i + 1], FamilyKind::TallIsosceles).kind != VerdictKind::CertifiedPrecedes)
        bad.push_back(center_label(ch[i]) + "/" + center_label(ch[i + 1]));
  }
  return {bad.empty(), false, bad.empty() ? "6/6 links certified" : "failed: " + bad.front()};
}

// ---- 4: classifications ----
Result c4() {
  SamplePlan plan;
  std::vector<std::string> bad;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  const TriangleFamily iso = family(FamilyKind::IsoscelesAll), tall = family(FamilyKind::TallIsosceles);
  std::vector<int> outside, tall_ex, vertex_a;
  for (int n = 1; n <= 100; ++n) {
    RegionVerdict v = classify_outside_angle_A(cat(), n, iso, plan);
    if (v.kind != RegionKind::Always) {
      outside.push_back(n);
      check(v.certified, "uncertified X" + std::to_string(n));
      if (v.witness_out)
        check(!inside_angle_A(eval_center(cat(), n, *v.witness_out)), "bad witness X" + std::to_string(n));
      else
        check(v.boundary_out.has_value() || v.kind == RegionKind::Never, "no witness X" + std::to_string(n));
    }
    if (classify_outside_angle_A(cat(), n, tall, plan).kind != RegionKind::Always) tall_ex.push_back(n);
    if (coincides_with_vertex_A(cat(), n, iso, plan).kind == VertexCoincidence::Kind::Identically)
      vertex_a.push_back(n);
  }
  const std::vector<int> want_outside = {4,  5,  11, 13, 14, 16, 17, 18, 19, 22, 23, 24, 25, 26, 27, 28, 29, 30, 33,
                                         34, 36, 44, 46, 47, 48, 49, 50, 51, 52, 53, 54, 59, 62, 64, 66, 67, 68, 70,
                                         73, 74, 77, 79, 80, 84, 87, 88, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100};
  check(outside == want_outside, "outside-angle-A set " + join(outside));
  check(tall_ex == std::vector<int>{18, 26, 30, 59, 68, 70, 87, 90, 91, 93, 96, 99, 100}, "tall set " + join(tall_ex));
  check(vertex_a == std::vector<int>{59, 99, 100}, "vertex-A set " + join(vertex_a));

  const std::set<int> above = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 12, 13, 15, 17, 19, 20, 21, 22, 25, 26, 27, 28, 29,
                               31, 32, 33, 34, 35, 37, 38, 39, 40, 41, 42, 45, 48, 51, 53, 54, 55, 56, 57, 58, 59, 60, 61,
                               63, 65, 68, 69, 71, 72, 73, 75, 76, 77, 78, 79, 81, 82, 83, 85, 86, 89, 92, 95, 97, 99, 100};
  const std::set<int> below = {16, 23, 36, 44, 50};
  const TriangleFamily acute = family(FamilyKind::AcuteMinA);
  for (int n = 1; n <= 100; ++n) {
    AboveVerdict v = classify_above_BC(cat(), n, acute, plan);
    AboveKind want = above.count(n)   ? AboveKind::AlwaysAbove
                     : below.count(n) ? AboveKind::AlwaysBelow
                     : n == 11        ? AboveKind::AlwaysOnOrAbove
                     : n == 30        ? AboveKind::AtInfinity
                                      : AboveKind::Sometimes;
    std::string tag = "above-BC X" + std::to_string(n) + " " + to_string(v.kind);
    check(v.kind == want, tag);
    switch (v.kind) {
      case AboveKind::AlwaysAbove:
        check(v.samples >= 10000 && v.below == 0 && v.on == 0, tag + " counterexample");
        break;
      case AboveKind::AlwaysOnOrAbove:
        check(v.samples >= 10000 && v.below == 0, tag + " counterexample");
        break;
      case AboveKind::AlwaysBelow:
        check(v.samples >= 10000 && v.above == 0 && v.on == 0, tag + " counterexample");
        break;
      case AboveKind::Sometimes:
        check(v.witness_above && v.witness_below && above_BC(eval_center(cat(), n, *v.witness_above)) == SideRelation::Above &&
                  above_BC(eval_center(cat(), n, *v.witness_below)) == SideRelation::Below,
              tag + " witness");
        break;
      default:
        break;
    }
  }
  return {bad.empty(), false, bad.empty() ? "all sets match, witnesses verified" : bad.front()};
}

// ---- 5, 6: two-parameter chains ----
Result chain_2d(const std::vector<std::string>& names) {
  std::ostringstream d;
  bool ok = true;
  for (const auto& name : names) {
    const NamedChain& nc = chain(name);
    OrderGraph g = build_chain_graph(cat(), nc.order, nc.chain, GraphOptions{});
    int good = 0, attempted = 0;
    double min_frac = 1;
    for (size_t i = 0; i + 1 < nc.chain.size(); ++i) {
      auto v = g.verdict(nc.chain[i], nc.chain[i + 1]);
      bool link = v && v->supports_precedes() && v->stats.samples >= 10000 && v->stats.succeed == 0 && v->stats.ties == 0;
      good += link;
      if (v && v->stats.subdivision_attempted) {
        ++attempted;
        min_frac = std::min(min_frac, v->stats.certified_fraction);
      }
      if (!link && ok) {
        ok = false;
        d << "first failure " << center_label(nc.chain[i]) << "/" << center_label(nc.chain[i + 1]) << "; ";
      }
    }
    d << name << " " << good << "/" << nc.chain.size() - 1 << " consistent, subdivision on " << attempted
      << " (min certified area " << min_frac << "); ";
  }
  return {ok, false, d.str()};
}

// ---- 7: trace extras ----
Result c7() {
  std::vector<std::string> bad;
  std::ostringstream d;
  bool known = true;
  GraphOptions opt;
  OrderGraph cg = build_chain_graph(cat(), OrderKind::Trace, chain("trace-C-24").chain, opt);
  auto v = cg.verdict(kVertexC, 24);
  bool c24 = v && v->supports_precedes();
  if (!c24) {
    bad.push_back("C/X24");
    bool reverse = v && v->supports_succeeds() && v->stats.precede == 0;
    d << "C/X24 fails, reverse X24 before C " << (reverse ? "holds" : "does not hold") << "; ";
    known = known && reverse;
  }
  OrderGraph bg = build_chain_graph(cat(), OrderKind::Trace, chain("trace-650-B").chain, opt);
  auto w = bg.verdict(650, kVertexB);
  if (!(w && w->supports_precedes())) {
    bad.push_back("X650/B");
    known = false;
  }
  std::vector<int> right;
  for (int n = 1; n <= 100; ++n)
    if (trace_right_of_C(eval_center(cat(), n, make_sides(11, 12, 16)))) right.push_back(n);
  for (int n : {23, 36, 44, 50, 64, 66, 84, 99, 100})
    if (std::find(right.begin(), right.end(), n) == right.end()) {
      bad.push_back("(11,12,16) misses X" + std::to_string(n));
      known = false;
    }
  std::vector<int> cls;
  for (int n = 1; n <= 29; ++n)
    if (classify_trace_right_of_C(cat(), n, family(FamilyKind::AcuteScalene), SamplePlan{}).kind != RegionKind::Never)
      cls.push_back(n);
  if (cls != std::vector<int>{16, 23, 26}) {
    bad.push_back("classified set " + join(cls));
    known = false;
  }
  d << "(11,12,16) set " << join(right) << "; sometimes beyond C " << join(cls);
  return {bad.empty(), known && !bad.empty(), d.str()};
}

// ---- 8: coincidences ----
Result c8() {
  struct Case {
    int m, n;
    UniPoly poly;
    double value;
  };
  const std::vector<Case> cases = {{5, 15, UniPoly::from_ints({1, 0, -4, 0, 1}), 1.931852},
                                   {11, 24, UniPoly::from_ints({1, 0, -4, 0, 2}), 1.306563},
                                   {29, 6, UniPoly::from_ints({-2, -1, 2}), 1.280776},
                                   {12, 15, UniPoly::from_ints({-1, 1, 6, 0, -11, -13, 2}), 7.25054}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& c : cases) {
    CoincidenceResult r = find_coincidence_iso(cat(), c.m, c.n, R(1, 2), std::nullopt);
    const UniPoly& p = c.poly;
    bool found = false;
    for (const auto& root : r.roots)
      if (std::abs(root.root.approx() - c.value) < 1e-5 && root_of(root.root, p) && root.residual_ok) {
        found = true;
        d << "X" << c.m << "/X" << c.n << " k=" << approx_text(root.root) << " ";
      }
    ok = ok && found;
    if (!found) d << "X" << c.m << "/X" << c.n << " missing ";
  }
  return {ok, false, d.str()};
}

// ---- 9: X23 on side AC ----
Result c9() {
  QuadExt c2(R(1, 2), R(1, 2), R(61));
  BaryPoint p = eval_center_squared_sides(cat(), 23, {QuadExt(1), QuadExt(4), c2});
  return {p.v.is_zero() && !p.u.is_zero() && !p.w.is_zero(), false, "v = " + to_string(p.v)};
}

// ---- 10: X18 degenerate triangles ----
Result c10() {
  PrecisionScope scope(256);
  Real c1 = sqrt((Real(353) + 15 * sqrt(Real(93))) / 2);
  auto p = eval_center_numeric(cat(), 18, {Real(8), Real(15), c1}, 256);
  Real r1 = std::max(Real(abs(p[1]) / abs(p[0])), Real(abs(p[2]) / abs(p[0])));
  Real c2 = 7 * sqrt(35 * (Real(940379) + 2 * sqrt(Real(10302477117))));
  auto q = eval_center_numeric(cat(), 18, {Real(16513), Real(42189), c2}, 256);
  Real m = std::max({Real(abs(q[0])), Real(abs(q[1])), Real(abs(q[2]))});
  Real r2 = abs(q[0] + q[1] + q[2]) / m;
  std::ostringstream d;
  d << "vertex ratio " << r1.convert_to<double>() << ", infinity ratio " << r2.convert_to<double>();
  return {r1 <= Real("1e-20") && r2 <= Real("1e-15"), false, d.str()};
}

// ---- 11: X30 at infinity ----
Result c11() {
  bool ok = at_infinity_identically(cat(), 30) && !at_infinity_identically(cat(), 2);
  return {ok, false, ok ? "coordinate sum is identically zero" : "not identically at infinity"};
}

// ---- 12: properties ----
Result c12() {
  std::vector<std::string> bad;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> num(10, 60), den(1, 9), lam(1, 12);
  int done = 0;
  while (done < 20) {
    Sides s{R(num(rng), den(rng)), R(num(rng), den(rng)), R(num(rng), den(rng))};
    if (!s.is_triangle()) continue;
    ++done;
    Rational l = R(lam(rng), lam(rng));
    Sides t{s.a * l, s.b * l, s.c * l}, rot{s.b, s.c, s.a};
    Rational d = AreaContext::of(s).radicand;
    for (int n : cat().indices()) {
      BaryPoint p = eval_center(cat(), n, s), pt = eval_center(cat(), n, t), q = eval_center(cat(), n, rot);
      BaryPoint pr{with_radicand(pt.u, d), with_radicand(pt.v, d), with_radicand(pt.w, d)};
      if (!p.is_zero_triple() && !same_point(p, pr)) bad.push_back("homogeneity X" + std::to_string(n));
      if (!(q.u == p.v && q.v == p.w && q.w == p.u)) bad.push_back("cyclic X" + std::to_string(n));
    }
  }
  for (Rational k : {R(3, 5), R(7, 4), R(5)})
    for (int n : cat().indices()) {
      BaryPoint p = eval_center(cat(), n, {R(1), k, k});
      // Skew center functions (X650) give (0 : q : -q), the point at infinity of BC.
      bool skew = p.u.is_zero() && (p.v + p.w).is_zero();
      if (!(p.v == p.w) && !skew) bad.push_back("median symmetry X" + std::to_string(n));
    }

  // Cartesian oracle at 256 bits: B=(0,0), C=(a,0), A above.
  PrecisionScope ps(256);
  std::uniform_int_distribution<long> side(2, 40);
  std::uniform_int_distribution<int> pick(1, 100);
  int checked = 0;
  while (checked < 1000) {
    Sides s = make_sides(side(rng), side(rng), side(rng));
    int n = pick(rng);
    if (!s.is_triangle()) continue;
    BaryPoint p;
    try {
      if (at_infinity(cat(), n, s)) continue;
      p = eval_center(cat(), n, s);
    } catch (const std::exception&) {
      continue;  // center degenerates on this triangle (e.g. X100 when equilateral)
    }
    ++checked;
    Real a = to_real(s.a), b = to_real(s.b), c = to_real(s.c);
    auto tc = eval_center_numeric(cat(), n, {a, b, c}, 256);
    Real sum = tc[0] + tc[1] + tc[2];
    Real ax = (a * a + c * c - b * b) / (2 * a), ay = sqrt(c * c - ax * ax);
    Real x = (tc[0] * ax + tc[2] * a) / sum, y = tc[0] * ay / sum;
    auto orient = [](Real px, Real py, Real qx, Real qy, Real rx, Real ry) {
      return (qx - px) * (ry - py) - (qy - py) * (rx - px);
    };
    Real whole = orient(ax, ay, Real(0), Real(0), a, Real(0));
    std::array<Real, 3> areas = {orient(x, y, Real(0), Real(0), a, Real(0)) / whole,
                                 orient(ax, ay, x, y, a, Real(0)) / whole,
                                 orient(ax, ay, Real(0), Real(0), x, y) / whole};
    RegionCode rc = region_of(p);
    std::array<int, 3> exact = {rc.su, rc.sv, rc.sw};
    for (int i = 0; i < 3; ++i)
      if (abs(areas[i]) > Real("1e-30") && exact[i] != (areas[i] > 0 ? 1 : -1))
        bad.push_back("region X" + std::to_string(n) + " " + s.to_string());
    Real dist = (x - ax) * (x - ax) + (y - ay) * (y - ay);
    QuadExt e = squared_distance({QuadExt(1), QuadExt(0), QuadExt(0)}, p, s);
    Real diff = abs(Real(e.approx()) - dist);
    if (diff > Real("1e-9") * (1 + dist)) bad.push_back("distance X" + std::to_string(n) + " " + s.to_string());
  }

  HasseDiagram h = transitive_reduction(iso_tall());
  if (reachability(h.nodes, h.edges) != reachability(iso_tall().nodes, iso_tall().edges))
    bad.push_back("reduction changes reachability");
  std::ostringstream d;
  d << "20 triangles x " << cat().indices().size() << " centers, " << checked << " oracle instances";
  return {bad.empty(), false, bad.empty() ? d.str() : bad.front()};
}

// ---- 13: cutpoint ----
Result c13() {
  std::vector<int> cut = articulation_points(transitive_reduction(iso_tall()));
  bool ok = std::find(cut.begin(), cut.end(), 1) != cut.end();
  return {ok, false, "articulation points: " + join(cut)};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Result()>>> criteria = {
      {1, c1},
      {2, c2},
      {3, c3},
      {4, c4},
      {5, [] { return chain_2d({"vertex-9"}); }},
      {6, [] { return chain_2d({"side-22", "trace-21"}); }},
      {7, c7},
      {8, c8},
      {9, c9},
      {10, c10},
      {11, c11},
      {12, c12},
      {13, c13}};
  int unexpected = 0;
  for (const auto& [id, fn] : criteria) {
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {false, false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.detail
              << (!r.pass && r.known ? " [known deviation]" : "") << std::endl;
    unexpected += !r.pass && !r.known;
  }
  return unexpected == 0 ? 0 : 1;
}
