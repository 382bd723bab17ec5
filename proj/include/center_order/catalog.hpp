// Center definitions: a small expression language for the first barycentric
// coordinate f(a,b,c,U), cyclic expansion and exact / high-precision evaluation.
#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "center_order/poly3.hpp"
#include "center_order/types.hpp"

namespace center_order {

using Real = boost::multiprecision::mpfr_float;

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CenterExpr {
  enum class Kind { Literal, Symbol, Add, Sub, Mul, Pow };
  Kind kind = Kind::Literal;
  Integer value;     // Literal
  char symbol = 0;   // 'a', 'b', 'c', 'U'
  unsigned exponent = 0;  // Pow
  std::shared_ptr<const CenterExpr> lhs, rhs;  // rhs unused for Pow

  std::string to_string() const;
};

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' uint)?; base := uint | a | b | c | U | '(' expr ')'
CenterExpr parse_center_expr(const std::string& text);
SurdPoly expand(const CenterExpr& e);

struct CenterDef {
  int index = 0;
  std::string text;
  CenterExpr first_coordinate;
  std::string provenance;
};

// Integer-scaled evaluator for one surd polynomial.
struct CompiledPoly {
  struct Term {
    Integer coeff;
    std::uint8_t i, j, k;
  };
  std::vector<Term> terms;
  Integer den = 1;
  static CompiledPoly from(const MPoly& p);
  Integer eval(const std::vector<Integer>& pa, const std::vector<Integer>& pb,
               const std::vector<Integer>& pc) const;
};

// Three cyclic coordinates of a center (or a vertex pseudo-center).
struct CenterForms {
  int key = 0;
  std::array<SurdPoly, 3> coords;
  int degree = 0;  // homogeneous degree of the rational parts
  bool uses_surd = false;
  std::array<CompiledPoly, 3> r, s;
  int max_exponent = 0;
};

struct CatalogLoadIssue {
  int line = 0;
  int index = 0;
  std::string message;
};

class Catalog {
 public:
  Catalog() = default;
  // strict: throws on the first malformed entry; otherwise issues are collected
  static Catalog from_text(const std::string& text, bool strict = true);
  static Catalog load(const std::string& path, bool strict = true);
  // Path from CENTER_ORDER_CATALOG, else the compiled-in default.
  static std::string default_path();

  bool contains(int key) const;
  const CenterDef& def(int n) const;
  const CenterForms& forms(int key) const;
  std::vector<int> indices() const;
  const std::vector<CatalogLoadIssue>& issues() const { return issues_; }

  void add(int index, const std::string& expr_text, const std::string& provenance);

 private:
  std::map<int, CenterDef> defs_;
  std::map<int, std::shared_ptr<const CenterForms>> forms_;
  std::vector<CatalogLoadIssue> issues_;
};

CenterForms build_forms(int key, const SurdPoly& first);
const CenterForms& vertex_forms(int key);

BaryPoint eval_center(const Catalog& cat, int n, const Sides& s);
BaryPoint eval_forms(const CenterForms& f, const Sides& s);
// For centers with only even powers of a, b, c and no U: evaluate from the
// squared side lengths, which may themselves lie in a quadratic field.
BaryPoint eval_center_squared_sides(const Catalog& cat, int n, const std::array<QuadExt, 3>& squares);

// High-precision evaluation with U = sqrt(3) sqrt(E) / 4 at the working precision.
std::array<Real, 3> eval_center_numeric(const Catalog& cat, int n, const std::array<Real, 3>& sides,
                                        unsigned precision_bits);

// Sets the mpfr working precision (bits) for the current thread, restoring on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};
Real to_real(const Rational& q);

struct ValidationFailure {
  int index = 0;
  std::string reason;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_catalog(const Catalog& cat);
// Validates the file text directly, reporting parse failures per entry.
ValidationReport validate_catalog_text(const std::string& text);

}  // namespace center_order
