// Subdivision certificates on the (b, c) box with a = 1: each polynomial is
// carried in the Bernstein basis of the current rectangle (integer-scaled by
// positive factors), so a strict common sign of its coefficients proves the
// sign on the whole rectangle.
#include <cmath>
#include <deque>

#include "center_order/decide.hpp"

namespace center_order {

namespace {

struct BPoly {
  int nb = 0, nc = 0;
  std::vector<Integer> c;  // (nb + 1) * (nc + 1), row-major in b
  Integer& at(int i, int j) { return c[static_cast<size_t>(i) * (nc + 1) + j]; }
  const Integer& at(int i, int j) const { return c[static_cast<size_t>(i) * (nc + 1) + j]; }
};

Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// 1-D transforms on a strided line of coefficients.
template <class Get>
void transform_line(int n, Get get, const std::vector<std::vector<Integer>>& M) {
  std::vector<Integer> in(n + 1), out(n + 1);
  for (int i = 0; i <= n; ++i) in[i] = get(i);
  for (int i = 0; i <= n; ++i) {
    out[i] = 0;
    for (int k = 0; k <= n; ++k)
      if (sgn(M[i][k]) != 0) out[i] += M[i][k] * in[k];
  }
  for (int i = 0; i <= n; ++i) get(i) = out[i];
}

// Matrix of x -> L + W x followed by the scaled power-to-Bernstein map on [0, 1].
std::vector<std::vector<Integer>> local_bernstein_matrix(int n, const Integer& L, const Integer& W) {
  // shift/scale: a'_i = sum_{k >= i} a_k C(k, i) L^(k-i) W^i
  std::vector<std::vector<Integer>> S(n + 1, std::vector<Integer>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int k = i; k <= n; ++k) {
      Integer lp, wp;
      mpz_pow_ui(lp.get_mpz_t(), L.get_mpz_t(), k - i);
      mpz_pow_ui(wp.get_mpz_t(), W.get_mpz_t(), i);
      S[i][k] = binom(k, i) * lp * wp;
    }
  // n! b_i = sum_{k <= i} C(i, k) k! (n - k)! a'_k (one common factor, so
  // the coefficients stay valid for de Casteljau halving)
  std::vector<std::vector<Integer>> B(n + 1, std::vector<Integer>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= i; ++k) {
      Integer fk, fnk;
      mpz_fac_ui(fk.get_mpz_t(), k);
      mpz_fac_ui(fnk.get_mpz_t(), n - k);
      B[i][k] = binom(i, k) * fk * fnk;
    }
  std::vector<std::vector<Integer>> M(n + 1, std::vector<Integer>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) M[i][k] += B[i][j] * S[j][k];
  return M;
}

// a = 1; integer coefficients in b, c; Bernstein on b, c in [L, L + W].
BPoly to_bernstein(const MPoly& p, const Integer& L, const Integer& W) {
  MPoly d = p.dehomogenize_a();
  BPoly bp;
  Integer den = 1;
  for (const auto& [m, coef] : d.terms()) {
    bp.nb = std::max(bp.nb, static_cast<int>(m[1]));
    bp.nc = std::max(bp.nc, static_cast<int>(m[2]));
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coef.get_den_mpz_t());
  }
  bp.c.assign(static_cast<size_t>(bp.nb + 1) * (bp.nc + 1), Integer(0));
  for (const auto& [m, coef] : d.terms()) {
    Rational scaled = coef * Rational(den);
    bp.at(m[1], m[2]) += scaled.get_num();
  }
  auto Mb = local_bernstein_matrix(bp.nb, L, W);
  auto Mc = local_bernstein_matrix(bp.nc, L, W);
  for (int j = 0; j <= bp.nc; ++j) transform_line(bp.nb, [&](int i) -> Integer& { return bp.at(i, j); }, Mb);
  for (int i = 0; i <= bp.nb; ++i) transform_line(bp.nc, [&](int j) -> Integer& { return bp.at(i, j); }, Mc);
  return bp;
}

int bernstein_sign(const BPoly& p) {
  bool pos = false, neg = false;
  for (const auto& x : p.c) {
    int s = sgn(x);
    if (s > 0) pos = true;
    else if (s < 0) neg = true;
    else return 0;
    if (pos && neg) return 0;
  }
  return pos ? 1 : -1;
}

// Halves along b (axis 0) or c (axis 1); children scaled by 2^n.
std::pair<BPoly, BPoly> split(const BPoly& p, int axis) {
  BPoly L = p, R = p;
  int n = axis == 0 ? p.nb : p.nc;
  int lines = axis == 0 ? p.nc : p.nb;
  std::vector<Integer> w(n + 1);
  for (int t = 0; t <= lines; ++t) {
    auto idx = [&](int i) { return axis == 0 ? std::make_pair(i, t) : std::make_pair(t, i); };
    for (int i = 0; i <= n; ++i) w[i] = p.at(idx(i).first, idx(i).second);
    auto put = [&](BPoly& q, int i, const Integer& v, int shift) {
      Integer& dst = q.at(idx(i).first, idx(i).second);
      mpz_mul_2exp(dst.get_mpz_t(), v.get_mpz_t(), shift);
    };
    put(L, 0, w[0], n);
    put(R, n, w[n], n);
    for (int r = 1; r <= n; ++r) {
      for (int i = 0; i + r <= n; ++i) w[i] += w[i + 1];
      put(L, r, w[0], n - r);
      put(R, n - r, w[n - r], n - r);
    }
  }
  return {std::move(L), std::move(R)};
}

void strip_twos(BPoly& p) {
  unsigned long k = ~0UL;
  for (const auto& x : p.c)
    if (sgn(x) != 0) k = std::min(k, mpz_scan1(x.get_mpz_t(), 0));
  if (k == ~0UL || k == 0) return;
  for (auto& x : p.c) mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), k);
}

struct Rect {
  Rational b0, b1, c0, c1;
  int depth = 0;
  std::vector<BPoly> polys;
};

// 0 outside, 1 inside, 2 partial (exact, using the family's strict inequalities)
int family_overlap(const TriangleFamily& f, const Rect& r) {
  bool scalene = f.kind == FamilyKind::AcuteScalene;
  if (r.c0 * r.c0 >= 1 + r.b1 * r.b1 || r.b0 * r.b0 >= 1 + r.c1 * r.c1) return 0;
  if (scalene && r.b0 >= r.c1) return 0;
  bool inside = r.c1 * r.c1 <= 1 + r.b0 * r.b0 && r.b1 * r.b1 <= 1 + r.c0 * r.c0 && (!scalene || r.b1 <= r.c0);
  return inside ? 1 : 2;
}

double family_area(const TriangleFamily& f, const Rect& r) {
  const int g = 8;
  double b0 = r.b0.get_d(), b1 = r.b1.get_d(), c0 = r.c0.get_d(), c1 = r.c1.get_d();
  double cell = (b1 - b0) * (c1 - c0) / (g * g);
  double area = 0;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      double b = b0 + (b1 - b0) * (i + 0.5) / g, c = c0 + (c1 - c0) * (j + 0.5) / g;
      bool in = b > 1 && c > 1 && b * b < 1 + c * c && c * c < 1 + b * b;
      if (f.kind == FamilyKind::AcuteScalene) in = in && b < c;
      if (in) area += cell;
    }
  return area;
}

}  // namespace

SubdivisionResult certify_by_subdivision(const CenterForms& fm, const CenterForms& fn, OrderKind order,
                                         const TriangleFamily& f, int expected, const SubdivisionBudget& budget) {
  SubdivisionResult res;
  if (f.is_isosceles() || order == OrderKind::Isosceles) {
    res.note = "isosceles families are certified exactly elsewhere";
    return res;
  }
  if (fm.uses_surd || fn.uses_surd) {
    res.note = "coordinates involve the area surd; not attempted";
    return res;
  }
  const MPoly a = MPoly::var(0), b = MPoly::var(1), c = MPoly::var(2);
  auto parts = [](const CenterForms& x) {
    return std::array<MPoly, 3>{x.coords[0].r, x.coords[1].r, x.coords[2].r};
  };
  auto P = parts(fm), Q = parts(fn);
  MPoly T, D1, D2;
  switch (order) {
    case OrderKind::Vertex: {
      auto N = [&](const std::array<MPoly, 3>& x) {
        return -(a * a * x[1] * x[2]) + b * b * x[2] * (x[1] + x[2]) + c * c * x[1] * (x[1] + x[2]);
      };
      D1 = P[0] + P[1] + P[2];
      D2 = Q[0] + Q[1] + Q[2];
      T = N(P) * D2 * D2 - N(Q) * D1 * D1;
      break;
    }
    case OrderKind::Side:
      D1 = P[0] + P[1] + P[2];
      D2 = Q[0] + Q[1] + Q[2];
      T = P[0] * D2 - Q[0] * D1;
      break;
    case OrderKind::Trace:
      D1 = P[1] + P[2];
      D2 = Q[1] + Q[2];
      T = P[1] * D2 - Q[1] * D1;
      break;
    default: break;
  }
  res.attempted = true;
  if (T.is_zero() || D1.is_zero() || D2.is_zero()) {
    res.note = "difference or denominator vanishes identically";
    return res;
  }
  const Integer L = 1, W = 3;  // sampler box b, c in (1, 4)
  Rect root{Rational(1), Rational(4), Rational(1), Rational(4), 0, {}};
  root.polys = {to_bernstein(T, L, W), to_bernstein(D1, L, W), to_bernstein(D2, L, W)};
  std::deque<Rect> queue;
  queue.push_back(std::move(root));
  double total = 0, good = 0;
  long processed = 0;
  while (!queue.empty()) {
    Rect r = std::move(queue.front());
    queue.pop_front();
    int ov = family_overlap(f, r);
    if (ov == 0) continue;
    res.max_depth = std::max(res.max_depth, r.depth);
    bool budget_left = processed < budget.max_rects;
    bool ok = false;
    if (budget_left) {
      ++processed;
      int sT = bernstein_sign(r.polys[0]);
      int s1 = sT == 0 ? 0 : bernstein_sign(r.polys[1]);
      int s2 = s1 == 0 ? 0 : bernstein_sign(r.polys[2]);
      if (sT != 0 && s1 != 0 && s2 != 0)
        ok = order == OrderKind::Vertex ? sT == expected : sT * s1 * s2 == expected;
    }
    if (!ok && budget_left && r.depth < budget.max_depth) {
      Rational bm = (r.b0 + r.b1) / 2, cm = (r.c0 + r.c1) / 2;
      std::vector<BPoly> lo_b, hi_b;
      for (const auto& p : r.polys) {
        auto [x, y] = split(p, 0);
        lo_b.push_back(std::move(x));
        hi_b.push_back(std::move(y));
      }
      for (int half = 0; half < 2; ++half) {
        const auto& src = half == 0 ? lo_b : hi_b;
        Rect lo{half == 0 ? r.b0 : bm, half == 0 ? bm : r.b1, r.c0, cm, r.depth + 1, {}};
        Rect hi{lo.b0, lo.b1, cm, r.c1, r.depth + 1, {}};
        for (const auto& p : src) {
          auto [x, y] = split(p, 1);
          strip_twos(x);
          strip_twos(y);
          lo.polys.push_back(std::move(x));
          hi.polys.push_back(std::move(y));
        }
        queue.push_back(std::move(lo));
        queue.push_back(std::move(hi));
      }
      continue;
    }
    double area = family_area(f, r);
    ++res.leaves;
    total += area;
    if (ok) {
      ++res.certified_leaves;
      good += area;
    }
  }
  res.certified_fraction = total > 0 ? good / total : 0;
  res.complete = res.leaves > 0 && res.leaves == res.certified_leaves;
  if (!res.complete) res.note = "partial certificate of the (1,4)^2 box";
  return res;
}

}  // namespace center_order
