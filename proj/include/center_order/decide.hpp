// The verdict engine: pairwise order comparisons, region classifications
// and the isosceles coincidence finder.
#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "center_order/catalog.hpp"
#include "center_order/families.hpp"

namespace center_order {

// Isosceles and Vertex: smaller distance to A precedes. Side: larger signed
// distance to BC precedes. Trace: larger signed trace distance to C precedes.
enum class OrderKind { Isosceles, Vertex, Side, Trace };
const char* to_string(OrderKind k);
OrderKind parse_order(const std::string& name);  // iso, vertex, side, trace
TriangleFamily order_family(OrderKind k);

struct NotComparableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class VerdictKind {
  CertifiedPrecedes,
  CertifiedSucceeds,
  CertifiedEqualNowhereComparable,
  Mixed,
  Undetermined
};
const char* to_string(VerdictKind k);

struct VerdictStats {
  long samples = 0;
  long precede = 0;    // m strictly precedes n
  long succeed = 0;    // n strictly precedes m
  long ties = 0;       // equal quantities (or isolated equality points)
  long undefined = 0;  // comparison quantity undefined for m or n
  int critical_points = 0;
  bool subdivision_attempted = false;
  long leaves = 0;
  long certified_leaves = 0;
  int max_depth = 0;
  double certified_fraction = 0;
  std::vector<std::string> notes;
};

struct Verdict {
  OrderKind order = OrderKind::Isosceles;
  int m = 0, n = 0;
  VerdictKind kind = VerdictKind::Undetermined;
  std::optional<Sides> witness_precede, witness_succeed;
  // Undetermined only: -1 when every tested instance had m before n, +1 for
  // the reverse, 0 when nothing consistent can be said.
  int direction = 0;
  std::string certificate;  // "sturm" or "subdivision" for certified verdicts
  VerdictStats stats;

  bool certified() const;
  // m before n: certified, or consistent on every sample with no ties.
  bool supports_precedes() const;
  bool supports_succeeds() const;
};
// The same comparison with m and n exchanged.
Verdict swapped(const Verdict& v);
nlohmann::json to_json(const Verdict& v);

// ---- isosceles family (1, k, k) ----

// Per-center data on an isosceles family, computed once and shared.
struct IsoCenter {
  int key = 0;
  IsoForm raw;      // (p : q : q) as cataloged
  IsoForm reduced;  // divided by the gcd of its components
  SurdUni sum;      // p + 2q of the reduced form
  bool at_infinity = false;  // sum vanishes identically
};
IsoCenter iso_center(const Catalog& cat, int key);

Verdict compare_iso(const IsoCenter& m, const IsoCenter& n, const TriangleFamily& f);
Verdict compare_iso(const Catalog& cat, int m, int n, FamilyKind f = FamilyKind::TallIsosceles);

// ---- two-parameter families ----

struct SampleSet {
  TriangleFamily family;
  std::vector<Sides> sides;
  static SampleSet make(const TriangleFamily& f, const SamplePlan& plan);
};

// The order's comparison quantity for one center at every sample.
struct QuantityTable {
  int key = 0;
  OrderKind order = OrderKind::Vertex;
  std::vector<QuadExt> value;
  std::vector<char> defined;
  std::vector<double> approx, err;
  long undefined = 0;
  long den_pos = 0, den_neg = 0;  // sign of the quantity's denominator

  // Nonempty when the quantity degenerates somewhere on the samples.
  std::string degenerate_reason() const;
};
QuantityTable quantity_table(const Catalog& cat, OrderKind order, int key, const SampleSet& set);

struct SubdivisionBudget {
  bool enabled = true;
  int max_depth = 12;
  long max_rects = 4096;
};

struct SubdivisionResult {
  bool attempted = false;
  bool complete = false;  // every in-family leaf certified
  long leaves = 0, certified_leaves = 0;
  int max_depth = 0;
  double certified_fraction = 0;  // in-family area share of certified leaves
  std::string note;
};
// Tries to certify sign(Q_m - Q_n) == expected over the family's sampler box.
SubdivisionResult certify_by_subdivision(const CenterForms& m, const CenterForms& n, OrderKind order,
                                         const TriangleFamily& f, int expected, const SubdivisionBudget& budget);

// Exact sign of Q_m - Q_n at sample i (both defined), with a floating prefilter.
int compare_at(const QuantityTable& m, const QuantityTable& n, size_t i);

Verdict compare_2d(const Catalog& cat, const QuantityTable& m, const QuantityTable& n, const SampleSet& set,
                   const SubdivisionBudget& budget);
Verdict compare_2d(const Catalog& cat, OrderKind order, int m, int n, const SamplePlan& plan,
                   const SubdivisionBudget& budget);

// ---- classifications ----

enum class RegionKind { Always, Never, Sometimes };
const char* to_string(RegionKind k);

struct RegionVerdict {
  RegionKind kind = RegionKind::Never;
  bool certified = false;  // exact over the isosceles family, else sampling
  std::optional<Sides> witness_in, witness_out;
  // Boundary witness when the predicate fails only at isolated irrational parameters.
  std::optional<RootIsolation> boundary_out;
  long samples = 0;
  long skipped = 0;  // instances where the predicate is undefined
  std::string note;
};
nlohmann::json to_json(const RegionVerdict& v);

// Predicate: strictly inside angle A (points at infinity are not inside).
// Anything but Always means the center sometimes lies outside the angle.
RegionVerdict classify_outside_angle_A(const Catalog& cat, int n, const TriangleFamily& f, const SamplePlan& plan);

enum class AboveKind { AlwaysAbove, AlwaysOnOrAbove, AlwaysOn, AlwaysOnOrBelow, AlwaysBelow, Sometimes, AtInfinity };
const char* to_string(AboveKind k);
struct AboveVerdict {
  AboveKind kind = AboveKind::AtInfinity;
  bool certified = false;
  std::optional<Sides> witness_above, witness_below;
  long samples = 0, above = 0, on = 0, below = 0, at_infinity = 0;
};
nlohmann::json to_json(const AboveVerdict& v);
AboveVerdict classify_above_BC(const Catalog& cat, int n, const TriangleFamily& f, const SamplePlan& plan);

// Predicate: the A-trace lies beyond C. Instances where the trace is undefined are skipped.
RegionVerdict classify_trace_right_of_C(const Catalog& cat, int n, const TriangleFamily& f, const SamplePlan& plan);

struct VertexCoincidence {
  enum class Kind { Identically, Never, AtRoots };
  Kind kind = Kind::Never;
  bool certified = false;
  std::vector<RootIsolation> roots;  // isosceles parameters k where the center is A
  std::optional<Sides> witness;      // sampled instance on two-parameter families
  long samples = 0;
};
VertexCoincidence coincides_with_vertex_A(const Catalog& cat, int n, const TriangleFamily& f,
                                          const SamplePlan& plan);

// ---- points at infinity ----

bool at_infinity(const Catalog& cat, int n, const Sides& s);
// Coordinate sum is the zero polynomial in a, b, c (and U).
bool at_infinity_identically(const Catalog& cat, int n);
bool at_infinity_on_iso_family(const Catalog& cat, int n);
// |u+v+w| / max|coord| at high precision.
Real infinity_ratio_numeric(const Catalog& cat, int n, const std::array<Real, 3>& sides, unsigned bits);

// ---- coincidences on (1, k, k) ----

struct CoincidenceRoot {
  RootIsolation root;            // width <= 1e-8
  unsigned precision_bits = 256;
  double residual = 0;           // normalized cross product magnitude
  bool residual_ok = false;      // residual <= 1e-20
};
struct CoincidenceResult {
  int m = 0, n = 0;
  bool identically_equal = false;
  UniPoly polynomial;  // square-free polynomial whose roots contain every coincidence
  std::vector<CoincidenceRoot> roots;
};
CoincidenceResult find_coincidence_iso(const Catalog& cat, int m, int n, const Rational& lo,
                                       const std::optional<Rational>& hi);
// Decimal approximation (10 significant digits) of an isolated root.
std::string approx_text(RootIsolation r);
// The root is also a root of p.
bool root_of(const RootIsolation& r, const UniPoly& p);
nlohmann::json to_json(const CoincidenceResult& c);

}  // namespace center_order
