// Triangle families (normalized to a = 1), exact samplers and the
// isosceles substitution a = 1, b = c = k.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "center_order/catalog.hpp"
#include "center_order/surd_uni.hpp"

namespace center_order {

enum class FamilyKind { TallIsosceles, IsoscelesAll, AcuteMinA, AcuteScalene };

struct TriangleFamily {
  FamilyKind kind = FamilyKind::TallIsosceles;
  std::string description;

  bool is_isosceles() const { return kind == FamilyKind::TallIsosceles || kind == FamilyKind::IsoscelesAll; }
  // Open parameter interval for isosceles families: (lower, +inf).
  Rational iso_lower() const { return kind == FamilyKind::TallIsosceles ? Rational(1) : Rational(1, 2); }
};

TriangleFamily family(FamilyKind kind);
TriangleFamily parse_family(const std::string& name);  // tall, isosceles, acute-min-a, acute-scalene
std::string family_name(FamilyKind kind);

struct SamplePlan {
  int grid_density = 60;
  int random_count = 10000;
  std::uint64_t rng_seed = 0;
  int denominator_bound = 1000;
  // Upper end of the sampling box: b, c in (1, box_hi) or k in (lower, box_hi).
  std::optional<Rational> box_hi;
};

bool contains(const TriangleFamily& f, const Sides& s);
std::vector<Sides> sample(const TriangleFamily& f, const SamplePlan& plan);

// The substitution a = 1, b = c = k. U becomes sqrt(R(k)) / 4 with R = 3(4k^2 - 1).
struct IsoSpecialization {
  UniPoly E;        // 4k^2 - 1
  UniPoly radicand; // 3E
  SurdUni apply(const SurdPoly& p) const;
  Sides sides(const Rational& k) const { return {Rational(1), k, k}; }
};
const IsoSpecialization& iso_specialize();

// Coordinates (p : q : q) of a center on the isosceles family.
struct IsoForm {
  SurdUni p, q;
  SurdUni sum(const UniPoly&) const { return p + q + q; }
};
// reduce: divide by the polynomial gcd of the components (drops isolated zero triples).
IsoForm iso_form(const CenterForms& f, bool reduce);

// Squared distance from the center to A as num/den (both SurdUni in k).
struct IsoRatio {
  SurdUni num, den;
};
IsoRatio iso_squared_distance_to_A(const CenterForms& f);

}  // namespace center_order
