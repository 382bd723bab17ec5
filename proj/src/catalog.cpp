#include <cstdlib>
#include <fstream>
#include <sstream>

#include "center_order/catalog.hpp"

#ifndef CENTER_ORDER_DEFAULT_CATALOG
#define CENTER_ORDER_DEFAULT_CATALOG "data/etc_centers.txt"
#endif

namespace center_order {

// ---- parser ----

namespace {

constexpr unsigned kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(const std::string& t) : t_(t) {}

  CenterExpr run() {
    skip();
    if (pos_ >= t_.size()) throw ParseError("empty expression", pos_);
    CenterExpr e = expr();
    skip();
    if (pos_ < t_.size()) {
      if (t_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected '") + t_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  static CenterExpr binary(CenterExpr::Kind k, CenterExpr l, CenterExpr r) {
    CenterExpr e;
    e.kind = k;
    e.lhs = std::make_shared<const CenterExpr>(std::move(l));
    e.rhs = std::make_shared<const CenterExpr>(std::move(r));
    return e;
  }

  CenterExpr expr() {
    CenterExpr e = term();
    for (;;) {
      if (eat('+')) e = binary(CenterExpr::Kind::Add, std::move(e), term());
      else if (eat('-')) e = binary(CenterExpr::Kind::Sub, std::move(e), term());
      else return e;
    }
  }
  CenterExpr term() {
    CenterExpr e = factor();
    while (eat('*')) e = binary(CenterExpr::Kind::Mul, std::move(e), factor());
    return e;
  }
  CenterExpr factor() {
    CenterExpr b = base();
    if (!eat('^')) return b;
    skip();
    size_t start = pos_;
    if (pos_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[pos_])))
      throw ParseError("exponent must be a nonnegative integer literal", pos_);
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    std::string digits = t_.substr(start, pos_ - start);
    if (digits.size() > 3 || std::stoul(digits) > kMaxExponent) throw ParseError("exponent too large", start);
    CenterExpr e;
    e.kind = CenterExpr::Kind::Pow;
    e.exponent = static_cast<unsigned>(std::stoul(digits));
    e.lhs = std::make_shared<const CenterExpr>(std::move(b));
    return e;
  }
  CenterExpr base() {
    skip();
    if (pos_ >= t_.size()) throw ParseError("unexpected end of expression", pos_);
    char ch = t_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      CenterExpr e;
      e.kind = CenterExpr::Kind::Literal;
      e.value = Integer(t_.substr(start, pos_ - start));
      return e;
    }
    if (ch == 'a' || ch == 'b' || ch == 'c' || ch == 'U') {
      ++pos_;
      CenterExpr e;
      e.kind = CenterExpr::Kind::Symbol;
      e.symbol = ch;
      return e;
    }
    if (ch == '(') {
      size_t open = pos_++;
      CenterExpr e = expr();
      if (!eat(')')) throw ParseError("unbalanced '(' opened", open);
      return e;
    }
    throw ParseError(std::string("unexpected '") + ch + "'", pos_);
  }

  const std::string& t_;
  size_t pos_ = 0;
};

}  // namespace

CenterExpr parse_center_expr(const std::string& text) { return Parser(text).run(); }

std::string CenterExpr::to_string() const {
  switch (kind) {
    case Kind::Literal: return value.get_str();
    case Kind::Symbol: return std::string(1, symbol);
    case Kind::Add: return "(" + lhs->to_string() + "+" + rhs->to_string() + ")";
    case Kind::Sub: return "(" + lhs->to_string() + "-" + rhs->to_string() + ")";
    case Kind::Mul: return lhs->to_string() + "*" + rhs->to_string();
    case Kind::Pow: return lhs->to_string() + "^" + std::to_string(exponent);
  }
  return "?";
}

SurdPoly expand(const CenterExpr& e) {
  switch (e.kind) {
    case CenterExpr::Kind::Literal: return {MPoly::constant(Rational(e.value)), {}};
    case CenterExpr::Kind::Symbol:
      if (e.symbol == 'U') return {{}, MPoly::constant(1)};
      return {MPoly::var(e.symbol - 'a'), {}};
    case CenterExpr::Kind::Add: return expand(*e.lhs) + expand(*e.rhs);
    case CenterExpr::Kind::Sub: return expand(*e.lhs) - expand(*e.rhs);
    case CenterExpr::Kind::Mul: return expand(*e.lhs) * expand(*e.rhs);
    case CenterExpr::Kind::Pow: return pow(expand(*e.lhs), static_cast<int>(e.exponent));
  }
  return {};
}

// ---- compiled evaluation ----

CompiledPoly CompiledPoly::from(const MPoly& p) {
  CompiledPoly c;
  Integer l = 1;
  for (const auto& [m, k] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.get_den_mpz_t());
  c.den = l;
  for (const auto& [m, k] : p.terms()) c.terms.push_back({k.get_num() * (l / k.get_den()), m[0], m[1], m[2]});
  return c;
}

Integer CompiledPoly::eval(const std::vector<Integer>& pa, const std::vector<Integer>& pb,
                           const std::vector<Integer>& pc) const {
  Integer acc = 0, t;
  for (const auto& term : terms) {
    t = term.coeff;
    if (term.i) t *= pa[term.i];
    if (term.j) t *= pb[term.j];
    if (term.k) t *= pc[term.k];
    acc += t;
  }
  return acc;
}

CenterForms build_forms(int key, const SurdPoly& first) {
  CenterForms f;
  f.key = key;
  f.coords[0] = first;
  f.coords[1] = first.cyclic();
  f.coords[2] = f.coords[1].cyclic();
  int dr = first.r.homogeneous_degree();
  int ds = first.s.homogeneous_degree();
  if (dr == -2 || ds == -2) throw CatalogDataError("not homogeneous");
  if (dr == -1 && ds == -1) throw CatalogDataError("zero triple: coordinate is identically zero");
  if (dr >= 0 && ds >= 0 && ds != dr - 2) throw CatalogDataError("not homogeneous (U has weight 2)");
  f.degree = dr >= 0 ? dr : ds + 2;
  f.uses_surd = first.has_surd();
  for (int i = 0; i < 3; ++i) {
    f.r[i] = CompiledPoly::from(f.coords[i].r);
    f.s[i] = CompiledPoly::from(f.coords[i].s);
    f.max_exponent = std::max({f.max_exponent, f.coords[i].r.max_exponent(), f.coords[i].s.max_exponent()});
  }
  return f;
}

const CenterForms& vertex_forms(int key) {
  static const std::array<CenterForms, 3> v = [] {
    std::array<CenterForms, 3> out;
    for (int i = 0; i < 3; ++i) {
      CenterForms& f = out[i];
      f.key = -1 - i;
      f.coords[i].r = MPoly::constant(1);
      for (int j = 0; j < 3; ++j) {
        f.r[j] = CompiledPoly::from(f.coords[j].r);
        f.s[j] = CompiledPoly::from(f.coords[j].s);
      }
    }
    return out;
  }();
  if (key > kVertexA || key < kVertexC) throw LookupError("not a vertex key");
  return v[-1 - key];
}

BaryPoint eval_forms(const CenterForms& f, const Sides& s) {
  s.validate();
  Integer l = 1;
  mpz_lcm(l.get_mpz_t(), s.a.get_den_mpz_t(), s.b.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.c.get_den_mpz_t());
  const int n = f.max_exponent;
  std::vector<Integer> pa(n + 1), pb(n + 1), pc(n + 1);
  pa[0] = pb[0] = pc[0] = 1;
  Integer A = s.a.get_num() * (l / s.a.get_den()), B = s.b.get_num() * (l / s.b.get_den()),
          C = s.c.get_num() * (l / s.c.get_den());
  for (int i = 1; i <= n; ++i) {
    pa[i] = pa[i - 1] * A;
    pb[i] = pb[i - 1] * B;
    pc[i] = pc[i - 1] * C;
  }
  Integer ld, ls;
  mpz_pow_ui(ld.get_mpz_t(), l.get_mpz_t(), f.degree);
  mpz_pow_ui(ls.get_mpz_t(), l.get_mpz_t(), f.degree >= 2 ? f.degree - 2 : 0);
  QuadExt U;
  if (f.uses_surd) U = AreaContext::of(s).U;
  std::array<QuadExt, 3> out;
  for (int i = 0; i < 3; ++i) {
    Rational r(f.r[i].eval(pa, pb, pc), f.r[i].den * ld);
    r.canonicalize();
    out[i] = QuadExt(r);
    if (f.uses_surd && !f.s[i].terms.empty()) {
      Rational sv(f.s[i].eval(pa, pb, pc), f.s[i].den * ls);
      sv.canonicalize();
      QuadExt t = U;
      t *= sv;
      out[i] += t;
    }
  }
  BaryPoint p{out[0], out[1], out[2]};
  if (p.is_zero_triple())
    throw CatalogDataError(center_label(f.key) + " evaluates to the zero triple at " + s.to_string());
  return p;
}

BaryPoint eval_center(const Catalog& cat, int n, const Sides& s) { return eval_forms(cat.forms(n), s); }

BaryPoint eval_center_squared_sides(const Catalog& cat, int n, const std::array<QuadExt, 3>& sq) {
  const CenterForms& f = cat.forms(n);
  if (f.uses_surd) throw DomainError(center_label(n) + " uses U; squared-side evaluation needs a rational area");
  std::array<QuadExt, 3> out;
  for (int i = 0; i < 3; ++i) {
    QuadExt acc;
    for (const auto& [m, k] : f.coords[i].r.terms()) {
      if (m[0] % 2 || m[1] % 2 || m[2] % 2)
        throw DomainError(center_label(n) + " has odd powers of the sides");
      QuadExt t(k);
      for (int v = 0; v < 3; ++v)
        for (int e = 0; e < m[v] / 2; ++e) t *= sq[v];
      acc += t;
    }
    out[i] = acc;
  }
  BaryPoint p{out[0], out[1], out[2]};
  if (p.is_zero_triple()) throw CatalogDataError(center_label(n) + " evaluates to the zero triple");
  return p;
}

// ---- numeric ----

PrecisionScope::PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

namespace {

Real eval_real(const MPoly& p, const std::array<std::vector<Real>, 3>& pw) {
  Real acc = 0;
  for (const auto& [m, k] : p.terms()) acc += to_real(k) * pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]];
  return acc;
}

}  // namespace

std::array<Real, 3> eval_center_numeric(const Catalog& cat, int n, const std::array<Real, 3>& sides,
                                        unsigned precision_bits) {
  if (precision_bits < 64) throw DomainError("precision_bits must be at least 64");
  PrecisionScope scope(precision_bits);
  const CenterForms& f = cat.forms(n);
  std::array<Real, 3> x;
  for (int i = 0; i < 3; ++i) x[i] = Real(sides[i], Real::default_precision());
  std::array<std::vector<Real>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].resize(f.max_exponent + 1);
    pw[v][0] = 1;
    for (int i = 1; i <= f.max_exponent; ++i) pw[v][i] = pw[v][i - 1] * x[v];
  }
  Real a2 = x[0] * x[0], b2 = x[1] * x[1], c2 = x[2] * x[2];
  Real E = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2;
  Real scale = (a2 + b2 + c2) * (a2 + b2 + c2);
  if (!(E > scale * Real("1e-40"))) throw DomainError("numerically degenerate triangle");
  Real U = sqrt(Real(3)) * sqrt(E) / 4;
  std::array<Real, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = eval_real(f.coords[i].r, pw);
    if (f.uses_surd) out[i] += eval_real(f.coords[i].s, pw) * U;
  }
  return out;
}

// ---- catalog ----

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct RawEntry {
  int line = 0;
  int index = 0;
  std::string expr, provenance;
  std::string error;
};

std::vector<RawEntry> split_entries(const std::string& text) {
  std::vector<RawEntry> out;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    RawEntry e;
    e.line = no;
    size_t p1 = t.find(';');
    if (p1 == std::string::npos) {
      e.error = "missing ';' separator";
      out.push_back(e);
      continue;
    }
    size_t p2 = t.find(';', p1 + 1);
    std::string idx = trim(t.substr(0, p1));
    e.expr = trim(p2 == std::string::npos ? t.substr(p1 + 1) : t.substr(p1 + 1, p2 - p1 - 1));
    e.provenance = p2 == std::string::npos ? "" : trim(t.substr(p2 + 1));
    try {
      e.index = parse_center_key(idx);
    } catch (const std::exception&) {
      e.error = "bad index '" + idx + "'";
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

void Catalog::add(int index, const std::string& expr_text, const std::string& provenance) {
  if (index <= 0) throw CatalogDataError("index must be positive");
  if (defs_.count(index)) throw CatalogDataError("duplicate index " + std::to_string(index));
  CenterDef d;
  d.index = index;
  d.text = expr_text;
  d.first_coordinate = parse_center_expr(expr_text);
  d.provenance = provenance;
  auto f = std::make_shared<const CenterForms>(build_forms(index, expand(d.first_coordinate)));
  defs_.emplace(index, std::move(d));
  forms_.emplace(index, std::move(f));
}

Catalog Catalog::from_text(const std::string& text, bool strict) {
  Catalog cat;
  for (const auto& e : split_entries(text)) {
    std::string err = e.error;
    if (err.empty()) {
      try {
        cat.add(e.index, e.expr, e.provenance);
      } catch (const std::exception& ex) {
        err = ex.what();
      }
    }
    if (!err.empty()) {
      if (strict) throw CatalogDataError("catalog line " + std::to_string(e.line) + ": " + err);
      cat.issues_.push_back({e.line, e.index, err});
    }
  }
  return cat;
}

Catalog Catalog::load(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open catalog file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), strict);
}

std::string Catalog::default_path() {
  if (const char* p = std::getenv("CENTER_ORDER_CATALOG"); p && *p) return p;
  return CENTER_ORDER_DEFAULT_CATALOG;
}

bool Catalog::contains(int key) const {
  if (key >= kVertexC && key <= kVertexA) return true;
  return defs_.count(key) > 0;
}

const CenterDef& Catalog::def(int n) const {
  auto it = defs_.find(n);
  if (it == defs_.end()) throw LookupError("unknown center " + center_label(n));
  return it->second;
}

const CenterForms& Catalog::forms(int key) const {
  if (key >= kVertexC && key <= kVertexA) return vertex_forms(key);
  auto it = forms_.find(key);
  if (it == forms_.end()) throw LookupError("unknown center " + center_label(key));
  return *it->second;
}

std::vector<int> Catalog::indices() const {
  std::vector<int> out;
  for (const auto& [k, v] : defs_) out.push_back(k);
  return out;
}

// ---- validation ----

ValidationReport validate_catalog(const Catalog& cat) {
  ValidationReport rep;
  const Sides ref = make_sides(6, 9, 13);
  for (const auto& issue : cat.issues()) rep.failures.push_back({issue.index, issue.message});
  for (int n : cat.indices()) {
    ++rep.checked;
    try {
      BaryPoint p = eval_center(cat, n, ref);
      (void)p;
    } catch (const std::exception& e) {
      rep.failures.push_back({n, e.what()});
    }
  }
  return rep;
}

ValidationReport validate_catalog_text(const std::string& text) {
  return validate_catalog(Catalog::from_text(text, false));
}

}  // namespace center_order
