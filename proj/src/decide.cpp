#include "center_order/decide.hpp"

#include <algorithm>
#include <cmath>

#include "center_order/geom.hpp"

namespace center_order {

const char* to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Isosceles: return "iso";
    case OrderKind::Vertex: return "vertex";
    case OrderKind::Side: return "side";
    case OrderKind::Trace: return "trace";
  }
  return "?";
}

OrderKind parse_order(const std::string& name) {
  if (name == "iso" || name == "isosceles") return OrderKind::Isosceles;
  if (name == "vertex") return OrderKind::Vertex;
  if (name == "side") return OrderKind::Side;
  if (name == "trace") return OrderKind::Trace;
  throw std::invalid_argument("unknown order: " + name);
}

TriangleFamily order_family(OrderKind k) {
  switch (k) {
    case OrderKind::Isosceles: return family(FamilyKind::TallIsosceles);
    case OrderKind::Vertex:
    case OrderKind::Side: return family(FamilyKind::AcuteMinA);
    case OrderKind::Trace: return family(FamilyKind::AcuteScalene);
  }
  return family(FamilyKind::TallIsosceles);
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedPrecedes: return "CertifiedPrecedes";
    case VerdictKind::CertifiedSucceeds: return "CertifiedSucceeds";
    case VerdictKind::CertifiedEqualNowhereComparable: return "CertifiedEqualNowhereComparable";
    case VerdictKind::Mixed: return "Mixed";
    case VerdictKind::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Always: return "Always";
    case RegionKind::Never: return "Never";
    case RegionKind::Sometimes: return "Sometimes";
  }
  return "?";
}

const char* to_string(AboveKind k) {
  switch (k) {
    case AboveKind::AlwaysAbove: return "AlwaysAbove";
    case AboveKind::AlwaysOnOrAbove: return "AlwaysOnOrAbove";
    case AboveKind::AlwaysOn: return "AlwaysOn";
    case AboveKind::AlwaysOnOrBelow: return "AlwaysOnOrBelow";
    case AboveKind::AlwaysBelow: return "AlwaysBelow";
    case AboveKind::Sometimes: return "Sometimes";
    case AboveKind::AtInfinity: return "AtInfinity";
  }
  return "?";
}

// ---- verdicts ----

bool Verdict::certified() const {
  return kind == VerdictKind::CertifiedPrecedes || kind == VerdictKind::CertifiedSucceeds ||
         kind == VerdictKind::CertifiedEqualNowhereComparable;
}

static bool consistent(const Verdict& v, int dir) {
  return v.kind == VerdictKind::Undetermined && v.direction == dir && v.stats.ties == 0 &&
         v.stats.undefined == 0 && v.stats.samples > 0;
}

bool Verdict::supports_precedes() const { return kind == VerdictKind::CertifiedPrecedes || consistent(*this, -1); }
bool Verdict::supports_succeeds() const { return kind == VerdictKind::CertifiedSucceeds || consistent(*this, 1); }

Verdict swapped(const Verdict& v) {
  Verdict w = v;
  std::swap(w.m, w.n);
  std::swap(w.witness_precede, w.witness_succeed);
  std::swap(w.stats.precede, w.stats.succeed);
  w.direction = -v.direction;
  if (v.kind == VerdictKind::CertifiedPrecedes) w.kind = VerdictKind::CertifiedSucceeds;
  if (v.kind == VerdictKind::CertifiedSucceeds) w.kind = VerdictKind::CertifiedPrecedes;
  return w;
}

static std::string sides_text(const Sides& s) { return s.a.get_str() + "," + s.b.get_str() + "," + s.c.get_str(); }

// Primitive with positive leading coefficient, for display.
static UniPoly display_form(const UniPoly& p) {
  UniPoly q = p.primitive();
  return !q.is_zero() && q.lead() < 0 ? -q : q;
}

static nlohmann::json root_json(const RootIsolation& r) {
  return {{"polynomial", display_form(r.defining_polynomial).to_string("k")},
          {"interval", {r.lo.get_str(), r.hi.get_str()}},
          {"approx", r.approx()}};
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["order"] = to_string(v.order);
  j["m"] = center_label(v.m);
  j["n"] = center_label(v.n);
  j["verdict"] = to_string(v.kind);
  if (v.certified()) j["certificate"] = {{"kind", v.certificate}};
  if (v.witness_precede || v.witness_succeed) {
    nlohmann::json w = nlohmann::json::object();
    if (v.witness_precede) w["precede"] = sides_text(*v.witness_precede);
    if (v.witness_succeed) w["succeed"] = sides_text(*v.witness_succeed);
    j["witnesses"] = w;
  }
  if (v.kind == VerdictKind::Undetermined)
    j["direction"] = v.direction < 0 ? "precedes" : v.direction > 0 ? "succeeds" : "none";
  const auto& s = v.stats;
  nlohmann::json st = {{"samples", s.samples}, {"precede", s.precede}, {"succeed", s.succeed},
                       {"ties", s.ties},       {"undefined", s.undefined}};
  if (v.order == OrderKind::Isosceles) st["critical_points"] = s.critical_points;
  if (s.subdivision_attempted)
    st["subdivision"] = {{"leaves", s.leaves},
                         {"certified_leaves", s.certified_leaves},
                         {"max_depth", s.max_depth},
                         {"certified_fraction", s.certified_fraction}};
  if (!s.notes.empty()) st["notes"] = s.notes;
  j["stats"] = st;
  return j;
}

nlohmann::json to_json(const RegionVerdict& v) {
  nlohmann::json j = {{"verdict", to_string(v.kind)},
                      {"certified", v.certified},
                      {"samples", v.samples},
                      {"skipped", v.skipped}};
  if (v.witness_in) j["witness_in"] = sides_text(*v.witness_in);
  if (v.witness_out) j["witness_out"] = sides_text(*v.witness_out);
  if (v.boundary_out) j["boundary_out"] = root_json(*v.boundary_out);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json to_json(const AboveVerdict& v) {
  nlohmann::json j = {{"verdict", to_string(v.kind)}, {"certified", v.certified}, {"samples", v.samples},
                      {"above", v.above},             {"on", v.on},               {"below", v.below},
                      {"at_infinity", v.at_infinity}};
  if (v.witness_above) j["witness_above"] = sides_text(*v.witness_above);
  if (v.witness_below) j["witness_below"] = sides_text(*v.witness_below);
  return j;
}

nlohmann::json to_json(const CoincidenceResult& c) {
  nlohmann::json j = {{"m", center_label(c.m)}, {"n", center_label(c.n)}, {"identically_equal", c.identically_equal}};
  if (!c.identically_equal) j["polynomial"] = c.polynomial.to_string("k");
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : c.roots) {
    nlohmann::json x = root_json(r.root);
    x["residual"] = r.residual;
    x["precision_bits"] = r.precision_bits;
    x["residual_ok"] = r.residual_ok;
    roots.push_back(x);
  }
  j["roots"] = roots;
  return j;
}

// ---- isosceles family ----

IsoCenter iso_center(const Catalog& cat, int key) {
  const CenterForms& f = cat.forms(key);
  IsoCenter c;
  c.key = key;
  c.raw = iso_form(f, false);
  c.reduced = iso_form(f, true);
  c.sum = c.reduced.p + c.reduced.q + c.reduced.q;
  c.at_infinity = c.sum.is_zero();
  return c;
}

std::string approx_text(RootIsolation r) {
  refine(r, Rational("1/10000000000"));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", r.approx());
  return buf;
}

Verdict compare_iso(const IsoCenter& m, const IsoCenter& n, const TriangleFamily& f) {
  if (!f.is_isosceles()) throw std::invalid_argument("compare_iso needs an isosceles family");
  for (const IsoCenter* c : {&m, &n})
    if (c->at_infinity) throw NotComparableError(center_label(c->key) + " lies at infinity on the isosceles family");
  Verdict v;
  v.order = OrderKind::Isosceles;
  v.m = m.key;
  v.n = n.key;
  if (m.key == n.key) {
    v.kind = VerdictKind::CertifiedEqualNowhereComparable;
    v.certificate = "identity";
    v.stats.notes.push_back("reflexive: a center never strictly precedes itself");
    return v;
  }
  const UniPoly& R = iso_specialize().radicand;
  // d^2 = E q^2 / s^2, so sign(d_m^2 - d_n^2) = sign((q_m s_n - q_n s_m)(q_m s_n + q_n s_m)).
  SurdUni x = mul(m.reduced.q, n.sum, R), y = mul(n.reduced.q, m.sum, R);
  SignProfile prof = sign_profile({x - y, x + y}, {m.sum, n.sum}, R, f.iso_lower());
  v.stats.critical_points = static_cast<int>(prof.points.size());
  v.stats.samples = static_cast<long>(prof.cell_samples.size());
  if (prof.identically_zero) {
    v.kind = VerdictKind::CertifiedEqualNowhereComparable;
    v.certificate = "sturm";
    v.stats.ties = 1;
    v.stats.notes.push_back("equal distance to A on the whole family");
    return v;
  }
  const auto& iso = iso_specialize();
  for (size_t i = 0; i < prof.cell_signs.size(); ++i) {
    int s = prof.cell_signs[i];
    if (s < 0) {
      ++v.stats.precede;
      if (!v.witness_precede) v.witness_precede = iso.sides(prof.cell_samples[i]);
    } else if (s > 0) {
      ++v.stats.succeed;
      if (!v.witness_succeed) v.witness_succeed = iso.sides(prof.cell_samples[i]);
    }
  }
  for (size_t i = 0; i < prof.points.size(); ++i) {
    int s = prof.point_signs[i];
    if (s == SignProfile::kUndefined) {
      ++v.stats.undefined;
      v.stats.notes.push_back("a center is at infinity at k ~ " + approx_text(prof.points[i]));
    } else if (s == 0) {
      ++v.stats.ties;
      v.stats.notes.push_back("equal distance at k ~ " + approx_text(prof.points[i]));
    }
  }
  int cs = prof.constant_sign();
  if (cs != 0) {
    v.kind = cs < 0 ? VerdictKind::CertifiedPrecedes : VerdictKind::CertifiedSucceeds;
    v.certificate = "sturm";
    v.witness_precede.reset();
    v.witness_succeed.reset();
  } else if (v.witness_precede && v.witness_succeed) {
    v.kind = VerdictKind::Mixed;
  } else {
    v.kind = VerdictKind::Undetermined;
    v.direction = v.witness_precede ? -1 : v.witness_succeed ? 1 : 0;
  }
  return v;
}

Verdict compare_iso(const Catalog& cat, int m, int n, FamilyKind f) {
  return compare_iso(iso_center(cat, m), iso_center(cat, n), family(f));
}

// ---- classifications ----

namespace {

struct Tally {
  long in = 0, out = 0, skipped = 0;
  std::optional<Sides> w_in, w_out;
  void add(int s, const Sides& sides) {  // s: +1 predicate holds, -1 fails, 0 undefined
    if (s > 0) {
      ++in;
      if (!w_in) w_in = sides;
    } else if (s < 0) {
      ++out;
      if (!w_out) w_out = sides;
    } else {
      ++skipped;
    }
  }
  RegionVerdict verdict() const {
    RegionVerdict v;
    v.samples = in + out + skipped;
    v.skipped = skipped;
    v.witness_in = w_in;
    v.witness_out = w_out;
    if (in > 0 && out > 0) v.kind = RegionKind::Sometimes;
    else if (in > 0) v.kind = RegionKind::Always;
    else v.kind = RegionKind::Never;
    if (v.kind != RegionKind::Sometimes) v.note = "sampling-backed";
    return v;
  }
};

// Predicate holds where prod(factors) > 0 on the isosceles family.
RegionVerdict iso_region(const std::vector<SurdUni>& factors, const TriangleFamily& f) {
  const auto& iso = iso_specialize();
  RegionVerdict v;
  v.certified = true;
  SignProfile prof = sign_profile(factors, {}, iso.radicand, f.iso_lower());
  if (prof.identically_zero) {
    v.kind = RegionKind::Never;
    v.note = "predicate quantity vanishes identically";
    return v;
  }
  v.samples = static_cast<long>(prof.cell_samples.size());
  for (size_t i = 0; i < prof.cell_signs.size(); ++i) {
    if (prof.cell_signs[i] > 0 && !v.witness_in) v.witness_in = iso.sides(prof.cell_samples[i]);
    if (prof.cell_signs[i] <= 0 && !v.witness_out) v.witness_out = iso.sides(prof.cell_samples[i]);
  }
  if (!v.witness_out)
    for (size_t i = 0; i < prof.points.size(); ++i)
      if (prof.point_signs[i] <= 0) {
        v.boundary_out = prof.points[i];
        refine(*v.boundary_out, Rational(1, 100000000));
        v.note = "fails only at isolated parameters";
        break;
      }
  bool out = v.witness_out || v.boundary_out;
  if (v.witness_in && out) v.kind = RegionKind::Sometimes;
  else if (v.witness_in) v.kind = RegionKind::Always;
  else v.kind = RegionKind::Never;
  return v;
}

}  // namespace

RegionVerdict classify_outside_angle_A(const Catalog& cat, int n, const TriangleFamily& f, const SamplePlan& plan) {
  const CenterForms& forms = cat.forms(n);
  if (f.is_isosceles()) {
    IsoForm x = iso_form(forms, false);
    SurdUni s = x.p + x.q + x.q;
    // inside iff q s > 0 (v = w = q)
    return iso_region({x.q, s}, f);
  }
  Tally t;
  for (const Sides& sides : sample(f, plan)) {
    BaryPoint p = eval_forms(forms, sides);
    QuadExt s = p.sum();
    bool inside = sign_product(p.v, s) > 0 && sign_product(p.w, s) > 0;
    t.add(inside ? 1 : -1, sides);
  }
  return t.verdict();
}

AboveVerdict classify_above_BC(const Catalog& cat, int n, const TriangleFamily& f, const SamplePlan& plan) {
  const CenterForms& forms = cat.forms(n);
  AboveVerdict v;
  if (f.is_isosceles()) {
    const auto& iso = iso_specialize();
    IsoForm x = iso_form(forms, false);
    SurdUni s = x.p + x.q + x.q;
    v.certified = true;
    if (s.is_zero()) {
      v.kind = AboveKind::AtInfinity;
      return v;
    }
    if (x.p.is_zero()) {
      v.kind = AboveKind::AlwaysOn;
      return v;
    }
    SignProfile prof = sign_profile({x.p, s}, {}, iso.radicand, f.iso_lower());
    for (size_t i = 0; i < prof.cell_signs.size(); ++i) {
      int c = prof.cell_signs[i];
      ++v.samples;
      if (c > 0) {
        ++v.above;
        if (!v.witness_above) v.witness_above = iso.sides(prof.cell_samples[i]);
      } else if (c < 0) {
        ++v.below;
        if (!v.witness_below) v.witness_below = iso.sides(prof.cell_samples[i]);
      }
    }
    for (int c : prof.point_signs) v.on += c == 0;
  } else {
    for (const Sides& sides : sample(f, plan)) {
      BaryPoint p = eval_forms(forms, sides);
      ++v.samples;
      switch (above_BC(p)) {
        case SideRelation::Above:
          ++v.above;
          if (!v.witness_above) v.witness_above = sides;
          break;
        case SideRelation::Below:
          ++v.below;
          if (!v.witness_below) v.witness_below = sides;
          break;
        case SideRelation::On: ++v.on; break;
        case SideRelation::AtInfinity: ++v.at_infinity; break;
      }
    }
    if (v.at_infinity == v.samples) {
      v.kind = AboveKind::AtInfinity;
      return v;
    }
  }
  if (v.above > 0 && v.below > 0) v.kind = AboveKind::Sometimes;
  else if (v.above > 0) v.kind = v.on > 0 ? AboveKind::AlwaysOnOrAbove : AboveKind::AlwaysAbove;
  else if (v.below > 0) v.kind = v.on > 0 ? AboveKind::AlwaysOnOrBelow : AboveKind::AlwaysBelow;
  else v.kind = v.on > 0 ? AboveKind::AlwaysOn : AboveKind::AtInfinity;
  return v;
}

RegionVerdict classify_trace_right_of_C(const Catalog& cat, int n, const TriangleFamily& f, const SamplePlan& plan) {
  const CenterForms& forms = cat.forms(n);
  if (f.is_isosceles()) {
    // q (q + r) = 2 q^2 on (p : q : q): never beyond C
    IsoForm x = iso_form(forms, false);
    SurdUni minus_q = -x.q;
    return iso_region({x.q, minus_q}, f);
  }
  Tally t;
  for (const Sides& sides : sample(f, plan)) {
    BaryPoint p = eval_forms(forms, sides);
    QuadExt vw = p.v + p.w;
    if (vw.is_zero()) {
      t.add(0, sides);
      continue;
    }
    t.add(sign_product(p.v, vw) < 0 ? 1 : -1, sides);
  }
  return t.verdict();
}

VertexCoincidence coincides_with_vertex_A(const Catalog& cat, int n, const TriangleFamily& f,
                                          const SamplePlan& plan) {
  const CenterForms& forms = cat.forms(n);
  VertexCoincidence vc;
  if (f.is_isosceles()) {
    const auto& iso = iso_specialize();
    vc.certified = true;
    IsoForm x = iso_form(forms, true);
    if (x.q.is_zero()) {
      vc.kind = VertexCoincidence::Kind::Identically;
      return vc;
    }
    SignProfile prof = sign_profile({x.q}, {}, iso.radicand, f.iso_lower());
    for (size_t i = 0; i < prof.points.size(); ++i)
      if (prof.point_signs[i] == 0 && sign_at_root(x.p, iso.radicand, prof.points[i]) != 0) {
        RootIsolation r = prof.points[i];
        refine(r, Rational(1, 100000000));
        vc.roots.push_back(r);
      }
    vc.kind = vc.roots.empty() ? VertexCoincidence::Kind::Never : VertexCoincidence::Kind::AtRoots;
    return vc;
  }
  if (forms.coords[1].is_zero() && forms.coords[2].is_zero()) {
    vc.kind = VertexCoincidence::Kind::Identically;
    vc.certified = true;
    return vc;
  }
  for (const Sides& sides : sample(f, plan)) {
    BaryPoint p = eval_forms(forms, sides);
    ++vc.samples;
    if (p.v.is_zero() && p.w.is_zero() && !vc.witness) vc.witness = sides;
  }
  vc.kind = vc.witness ? VertexCoincidence::Kind::AtRoots : VertexCoincidence::Kind::Never;
  return vc;
}

// ---- infinity ----

bool at_infinity(const Catalog& cat, int n, const Sides& s) { return eval_center(cat, n, s).sum().is_zero(); }

bool at_infinity_identically(const Catalog& cat, int n) {
  const auto& c = cat.forms(n).coords;
  return (c[0] + c[1] + c[2]).is_zero();
}

bool at_infinity_on_iso_family(const Catalog& cat, int n) {
  IsoForm x = iso_form(cat.forms(n), false);
  return (x.p + x.q + x.q).is_zero();
}

Real infinity_ratio_numeric(const Catalog& cat, int n, const std::array<Real, 3>& sides, unsigned bits) {
  PrecisionScope scope(bits);
  auto c = eval_center_numeric(cat, n, sides, bits);
  Real big = std::max({abs(c[0]), abs(c[1]), abs(c[2])});
  return abs(c[0] + c[1] + c[2]) / big;
}

// ---- coincidences ----

bool root_of(const RootIsolation& r, const UniPoly& p) {
  if (p.is_zero()) return true;
  if (r.exact()) return p.sign_at(r.lo) == 0;
  UniPoly g = poly_gcd(r.defining_polynomial, p);
  if (g.degree() <= 0) return false;
  return SturmSequence(g).count(r.lo, r.hi) > 0 || g.sign_at(r.lo) == 0 || g.sign_at(r.hi) == 0;
}

CoincidenceResult find_coincidence_iso(const Catalog& cat, int m, int n, const Rational& lo,
                                       const std::optional<Rational>& hi) {
  const auto& iso = iso_specialize();
  const UniPoly& R = iso.radicand;
  CoincidenceResult res;
  res.m = m;
  res.n = n;
  IsoForm x = iso_form(cat.forms(m), true), y = iso_form(cat.forms(n), true);
  // the only nontrivial cross-product component of (p1 : q1 : q1) and (p2 : q2 : q2)
  SurdUni F = mul(x.p, y.q, R) - mul(x.q, y.p, R);
  if (F.is_zero()) {
    res.identically_equal = true;
    return res;
  }
  res.polynomial = display_form(squarefree_part(norm(F, R)));
  if (res.polynomial.degree() <= 0) return res;
  for (RootIsolation r : isolate_roots(res.polynomial, lo, hi, Rational(1, 100000000))) {
    if (sign_at_root(F, R, r) != 0) continue;  // root of the conjugate only
    // a vanishing triple is not a point
    if (sign_at_root(x.p, R, r) == 0 && sign_at_root(x.q, R, r) == 0) continue;
    if (sign_at_root(y.p, R, r) == 0 && sign_at_root(y.q, R, r) == 0) continue;
    CoincidenceRoot cr;
    cr.root = r;
    RootIsolation fine = r;
    cr.precision_bits = 256;
    {
      PrecisionScope scope(cr.precision_bits);
      Rational eps = 1;
      for (int i = 0; i < 40; ++i) eps /= 10;
      refine(fine, eps);
      Real k = to_real(fine.midpoint());
      std::array<Real, 3> sides{Real(1), k, k};
      auto P = eval_center_numeric(cat, m, sides, cr.precision_bits);
      auto Q = eval_center_numeric(cat, n, sides, cr.precision_bits);
      Real cx = P[1] * Q[2] - P[2] * Q[1], cy = P[2] * Q[0] - P[0] * Q[2], cz = P[0] * Q[1] - P[1] * Q[0];
      Real np = std::max({abs(P[0]), abs(P[1]), abs(P[2])}), nq = std::max({abs(Q[0]), abs(Q[1]), abs(Q[2])});
      Real rel = std::max({abs(cx), abs(cy), abs(cz)}) / (np * nq);
      cr.residual = static_cast<double>(rel);
      cr.residual_ok = rel <= Real("1e-20");
    }
    res.roots.push_back(cr);
  }
  return res;
}

}  // namespace center_order
