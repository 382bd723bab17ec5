#include <cmath>

#include "center_order/decide.hpp"
#include "center_order/geom.hpp"

namespace center_order {

SampleSet SampleSet::make(const TriangleFamily& f, const SamplePlan& plan) {
  SampleSet s;
  s.family = f;
  s.sides = sample(f, plan);
  return s;
}

std::string QuantityTable::degenerate_reason() const {
  if (den_pos > 0 && den_neg > 0)
    return order == OrderKind::Trace ? "trace passes through infinity" : "passes through the line at infinity";
  if (undefined > 0)
    return order == OrderKind::Trace ? "trace undefined on some samples" : "at infinity on some samples";
  return {};
}

QuantityTable quantity_table(const Catalog& cat, OrderKind order, int key, const SampleSet& set) {
  if (order == OrderKind::Isosceles) throw std::invalid_argument("quantity_table: two-parameter orders only");
  const CenterForms& forms = cat.forms(key);
  const BaryPoint A{QuadExt(1), QuadExt(0), QuadExt(0)};
  QuantityTable t;
  t.key = key;
  t.order = order;
  size_t N = set.sides.size();
  t.value.resize(N);
  t.defined.assign(N, 0);
  t.approx.assign(N, 0);
  t.err.assign(N, 0);
  for (size_t i = 0; i < N; ++i) {
    const Sides& s = set.sides[i];
    BaryPoint p = eval_forms(forms, s);
    QuadExt den = order == OrderKind::Trace ? p.v + p.w : p.sum();
    int ds = quad_sign(den);
    if (ds == 0) {
      ++t.undefined;
      continue;
    }
    (ds > 0 ? t.den_pos : t.den_neg) += 1;
    QuadExt q;
    switch (order) {
      case OrderKind::Vertex: q = squared_distance(A, p, s); break;
      case OrderKind::Side: q = p.u * den.inverse(); break;
      case OrderKind::Trace: q = p.v * den.inverse() * QuadExt(s.a); break;
      default: break;
    }
    t.approx[i] = q.approx();
    t.err[i] = q.approx_error();
    t.value[i] = std::move(q);
    t.defined[i] = 1;
  }
  return t;
}

int compare_at(const QuantityTable& m, const QuantityTable& n, size_t i) {
  double d = m.approx[i] - n.approx[i];
  double e = 4 * (m.err[i] + n.err[i]) + 1e-300;
  if (std::isfinite(d) && std::fabs(d) > e) return d > 0 ? 1 : -1;
  QuadExt diff = m.value[i];
  diff -= n.value[i];
  return quad_sign(diff);
}

Verdict compare_2d(const Catalog& cat, const QuantityTable& m, const QuantityTable& n, const SampleSet& set,
                   const SubdivisionBudget& budget) {
  Verdict v;
  v.order = m.order;
  v.m = m.key;
  v.n = n.key;
  if (m.key == n.key) {
    v.kind = VerdictKind::CertifiedEqualNowhereComparable;
    v.certificate = "identity";
    v.stats.notes.push_back("reflexive: a center never strictly precedes itself");
    return v;
  }
  // Vertex: smaller distance precedes. Side, Trace: larger value precedes.
  const int flip = m.order == OrderKind::Vertex ? -1 : 1;
  for (size_t i = 0; i < set.sides.size(); ++i) {
    ++v.stats.samples;
    if (!m.defined[i] || !n.defined[i]) {
      ++v.stats.undefined;
      continue;
    }
    int pre = flip * compare_at(m, n, i);
    if (pre > 0) {
      ++v.stats.precede;
      if (!v.witness_precede) v.witness_precede = set.sides[i];
    } else if (pre < 0) {
      ++v.stats.succeed;
      if (!v.witness_succeed) v.witness_succeed = set.sides[i];
    } else {
      ++v.stats.ties;
    }
  }
  for (const QuantityTable* t : {&m, &n}) {
    std::string why = t->degenerate_reason();
    if (!why.empty()) v.stats.notes.push_back(center_label(t->key) + ": " + why);
  }
  if (v.stats.precede > 0 && v.stats.succeed > 0) {
    v.kind = VerdictKind::Mixed;
    return v;
  }
  v.kind = VerdictKind::Undetermined;
  v.direction = v.stats.precede > 0 ? -1 : v.stats.succeed > 0 ? 1 : 0;
  if (v.stats.ties > 0) v.stats.notes.push_back("equal on some samples");
  if (v.direction == 0 || !budget.enabled) return v;
  SubdivisionResult sub = certify_by_subdivision(cat.forms(m.key), cat.forms(n.key), m.order, set.family,
                                                 v.direction < 0 ? flip : -flip, budget);
  v.stats.subdivision_attempted = sub.attempted;
  v.stats.leaves = sub.leaves;
  v.stats.certified_leaves = sub.certified_leaves;
  v.stats.max_depth = sub.max_depth;
  v.stats.certified_fraction = sub.certified_fraction;
  if (!sub.note.empty()) v.stats.notes.push_back("subdivision: " + sub.note);
  if (sub.complete && v.stats.ties == 0 && v.stats.undefined == 0) {
    v.kind = v.direction < 0 ? VerdictKind::CertifiedPrecedes : VerdictKind::CertifiedSucceeds;
    v.certificate = "subdivision";
    v.witness_precede.reset();
    v.witness_succeed.reset();
  }
  return v;
}

Verdict compare_2d(const Catalog& cat, OrderKind order, int m, int n, const SamplePlan& plan,
                   const SubdivisionBudget& budget) {
  SampleSet set = SampleSet::make(order_family(order), plan);
  QuantityTable tm = quantity_table(cat, order, m, set);
  QuantityTable tn = quantity_table(cat, order, n, set);
  return compare_2d(cat, tm, tn, set, budget);
}

}  // namespace center_order
