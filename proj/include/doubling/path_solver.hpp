#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doubling/ball_index.hpp"
#include "doubling/doubling_constant.hpp"
#include "doubling/graph.hpp"
#include "doubling/least_doubling.hpp"
#include "doubling/measure.hpp"
#include "doubling/spectral.hpp"

// Path-graph specialization. Vertex ids in structs are 0-based like the rest
// of the library; formulas below are phrased on the 1-based labels 1..n and
// shifted at the boundary. Balls on the path are intervals, so every mass is
// a prefix-sum difference.

namespace doubling {

struct M1Result {
  double value = 0.0;
  int k = 0;
};

struct M2Result {
  double value = 0.0;  // 0 when the index set is empty: below any constant >= 2
  int j = 0;           // center, 0-based
  int k = 0;
  bool empty = true;
};

struct PathQuotients {
  M1Result m1;
  M2Result m2;
  LocalConstant c0;
  double c = 0.0;
  QuotientWitness c_witness;
  bool hypothesis_holds = false;  // c0 < 3, the decomposition's hypothesis
  bool equality = false;          // |c - max{m1, m2, c0}| < 1e-12 * c
};

struct ScanEntry {
  int k = 0;
  std::string outcome;
  double c = std::numeric_limits<double>::quiet_NaN();
};

struct PathMinimizerResult {
  int n = 0;
  int k_star = 0;
  double c = 0.0;
  Measure weights;  // symmetric, normalized to weight 1 at vertex 1
  double m1_residual = 0.0;
  double boundary_residual = 0.0;
  bool validated = false;
  std::vector<ScanEntry> scan_log;
};

struct RefineResult {
  Measure measure;
  double eps = 0.0;
  double theta = 0.0;
  bool applied_middle = false;
  bool applied_end = false;
  bool warning = false;
  std::string note;
};

namespace detail {

inline int ceil_half(int n) { return (n + 1) / 2; }

// ceil(a/3) for a >= 0
inline int ceil_third(int a) { return (a + 2) / 3; }

// k range of the edge-centered quotient family: 0 <= k < ceil((n-2)/3)
inline int m1_k_limit(int n) { return ceil_third(n - 2); }

inline std::vector<double> path_prefix(const std::vector<double>& w) {
  std::vector<double> pre(w.size() + 1, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) pre[i + 1] = pre[i] + w[i];
  return pre;
}

// mass of B(j, r) on the path, j 1-based
inline double path_ball(const std::vector<double>& pre, int n, int j, int r) {
  int lo = std::max(1, j - r);
  int hi = std::min(n, j + r);
  return pre[static_cast<std::size_t>(hi)] - pre[static_cast<std::size_t>(lo - 1)];
}

// Full doubling constant of a path measure via prefix sums; witness is the
// lexicographically smallest (center, k), center 0-based.
inline std::pair<double, QuotientWitness> path_doubling(const std::vector<double>& w) {
  const int n = static_cast<int>(w.size());
  auto pre = path_prefix(w);
  double best = 1.0;
  QuotientWitness wit;
  wit.numerator = wit.denominator = pre.back();
  if (n == 1) return {1.0, wit};
  const int kmax = (n - 1) / 2;
  bool first = true;
  for (int x = 1; x <= n; ++x) {
    for (int k = 0; k <= kmax; ++k) {
      double den = path_ball(pre, n, x, k);
      double num = path_ball(pre, n, x, 2 * k + 1);
      double q = num / den;
      if (first || q > best) {
        first = false;
        best = q;
        wit = QuotientWitness{x - 1, k, num, den, q};
      }
    }
  }
  return {best, wit};
}

inline LocalConstant path_local(const std::vector<double>& w) {
  const int n = static_cast<int>(w.size());
  auto pre = path_prefix(w);
  LocalConstant out{1.0, 0};
  for (int x = 1; x <= n; ++x) {
    double q = path_ball(pre, n, x, 1) / w[static_cast<std::size_t>(x - 1)];
    if (x == 1 || q > out.value) out = LocalConstant{q, x - 1};
  }
  return out;
}

inline bool path_symmetric(const std::vector<double>& w, double rel_tol = 1e-12) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    double a = w[i], b = w[n - 1 - i];
    if (std::abs(a - b) > rel_tol * std::max(std::abs(a), std::abs(b))) return false;
  }
  return true;
}

// Half-system coefficients: with the normalization mu(1)=1 and s=mu(2), the
// interior equations give mu(j) = A_j(C) + B_j(C)*s through the recurrence
// p_{j+1} = (C-1)p_j - p_{j-1}. B_j is the Chebyshev U_{j-2} at (C-1)/2.
inline void half_coefficients(double C, int m, std::vector<double>& A, std::vector<double>& B) {
  A.assign(static_cast<std::size_t>(m) + 1, 0.0);
  B.assign(static_cast<std::size_t>(m) + 1, 0.0);
  A[1] = 1.0;
  if (m >= 2) B[2] = 1.0;
  for (int j = 2; j < m; ++j) {
    A[static_cast<std::size_t>(j) + 1] = (C - 1.0) * A[static_cast<std::size_t>(j)] - A[static_cast<std::size_t>(j) - 1];
    B[static_cast<std::size_t>(j) + 1] = (C - 1.0) * B[static_cast<std::size_t>(j)] - B[static_cast<std::size_t>(j) - 1];
  }
}

struct ClosureParts {
  double num = 0.0;  // s = num / den closes the symmetric middle
  double den = 0.0;
  std::vector<double> A, B;
  int m = 0;
};

inline ClosureParts closure_parts(double C, int n) {
  ClosureParts cp;
  cp.m = ceil_half(n);
  half_coefficients(C, cp.m, cp.A, cp.B);
  const auto& A = cp.A;
  const auto& B = cp.B;
  std::size_t m = static_cast<std::size_t>(cp.m);
  if (n % 2 == 0) {
    // mirror condition mu(m+1) = mu(m)
    cp.num = -((C - 2.0) * A[m] - A[m - 1]);
    cp.den = (C - 2.0) * B[m] - B[m - 1];
  } else {
    // mirror condition mu(m+1) = mu(m-1)
    cp.num = -((C - 1.0) * A[m] - 2.0 * A[m - 1]);
    cp.den = (C - 1.0) * B[m] - 2.0 * B[m - 1];
  }
  return cp;
}

// The edge-quotient equation h(C) = mu(B(1,2k+1)) - C*mu(B(1,k)) multiplied
// by the closure denominator, removing the poles of s(C): a polynomial in C
// whose roots are scanned by sign change.
inline double closure_residual_poly(double C, int n, int k) {
  ClosureParts cp = closure_parts(C, n);
  auto idx = [&](int l) { return l <= cp.m ? l : n + 1 - l; };
  double alpha = 0.0, beta = 0.0;
  for (int l = 1; l <= std::min(2 * k + 2, n); ++l) {
    int j = idx(l);
    alpha += cp.A[static_cast<std::size_t>(j)];
    beta += cp.B[static_cast<std::size_t>(j)];
  }
  for (int l = 1; l <= std::min(k + 1, n); ++l) {
    int j = idx(l);
    alpha -= C * cp.A[static_cast<std::size_t>(j)];
    beta -= C * cp.B[static_cast<std::size_t>(j)];
  }
  return alpha * cp.den + beta * cp.num;
}

inline std::optional<std::vector<double>> weights_at(double C, int n) {
  ClosureParts cp = closure_parts(C, n);
  if (cp.den == 0.0) return std::nullopt;
  double s = cp.num / cp.den;
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int i = j <= cp.m ? j : n + 1 - j;
    w[static_cast<std::size_t>(j - 1)] = cp.A[static_cast<std::size_t>(i)] + cp.B[static_cast<std::size_t>(i)] * s;
  }
  return w;
}

}  // namespace detail

// Maximal quotient mu(B(1,2k+1))/mu(B(1,k)) over 0 <= k < ceil((n-2)/3);
// these are the only edge-centered quotients whose denominator ball misses
// the middle vertex. Smallest witness k on ties.
inline M1Result m1(const Measure& mu) {
  const int n = static_cast<int>(mu.size());
  if (n < 3) throw std::invalid_argument("m1 requires a path with n >= 3");
  auto pre = detail::path_prefix(mu.w);
  M1Result out;
  for (int k = 0; k < detail::m1_k_limit(n); ++k) {
    double q = detail::path_ball(pre, n, 1, 2 * k + 1) / detail::path_ball(pre, n, 1, k);
    if (k == 0 || q > out.value) out = M1Result{q, k};
  }
  return out;
}

// Maximal interior quotient whose doubled ball reaches the middle vertex
// while the inner ball stays strictly inside the first half:
//   1 < j < m,  (m-j-1)/2 < k < min{(j-2)/2, ceil((n-2j)/3), m-j},  m = ceil(n/2).
// Empty index set (small n) reports value 0. Centers reported 0-based.
inline M2Result m2(const Measure& mu) {
  const int n = static_cast<int>(mu.size());
  const int m = detail::ceil_half(n);
  auto pre = detail::path_prefix(mu.w);
  M2Result out;
  for (int j = 2; j < m; ++j) {
    for (int k = 1; k < m - j; ++k) {
      if (2 * k <= m - j - 1) continue;
      if (2 * k >= j - 2) break;
      if (k >= detail::ceil_third(n - 2 * j)) break;
      double q = detail::path_ball(pre, n, j, 2 * k + 1) / detail::path_ball(pre, n, j, k);
      if (out.empty || q > out.value) out = M2Result{q, j - 1, k, false};
    }
  }
  return out;
}

// For a symmetric path measure, the doubling constant decomposes as
// C = max{M1, M2, C0} provided C0 < 3. Reports all four quantities and
// whether the equality holds within 1e-12 relative.
inline PathQuotients decompose(const Measure& mu) {
  const int n = static_cast<int>(mu.size());
  if (n < 3) throw std::invalid_argument("decompose requires a path with n >= 3");
  if (!detail::path_symmetric(mu.w)) throw std::invalid_argument("decompose requires a symmetric measure");
  PathQuotients out;
  out.m1 = m1(mu);
  out.m2 = m2(mu);
  out.c0 = detail::path_local(mu.w);
  auto [c, wit] = detail::path_doubling(mu.w);
  out.c = c;
  out.c_witness = wit;
  out.hypothesis_holds = out.c0.value < 3.0;
  double rhs = std::max({out.m1.value, out.m2.value, out.c0.value});
  out.equality = out.hypothesis_holds && std::abs(c - rhs) < 1e-12 * c;
  return out;
}

// Solves the minimizer system for a fixed edge radius k:
//   C = mu(B(1,2k+1))/mu(B(1,k)),  C = mu(B(j,1))/mu(j) for 2 <= j <= m,
// mu(1)=1, symmetric closure at the middle. Every mu(j) is affine in
// s = mu(2), so only a 1-D root-find in C remains; the pole-free polynomial
// h(C)*den(C) is scanned for sign changes over [c0 - 1e-6, 3) and each
// bracket is bisected, then polished by one clamped secant step. A root
// counts only if its weights are positive, strictly increasing up to the
// middle, and the full doubling constant matches C within 100*tol.
inline std::optional<PathMinimizerResult> solve_system(int n, int k, double tol = 1e-12) {
  if (n < 3) throw std::invalid_argument("solve_system requires n >= 3");
  if (k < 0 || k >= detail::m1_k_limit(n))
    throw std::invalid_argument("solve_system radius k outside the edge-quotient range");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_system requires tol > 0");

  const double lo = c0_path_closed_form(n) - 1e-6;
  const double hi = 3.0 - 1e-12;
  const int grid = 4096;
  auto R = [&](double c) { return detail::closure_residual_poly(c, n, k); };

  std::vector<double> roots;
  double xa = lo, fa = R(lo);
  for (int i = 1; i <= grid; ++i) {
    double xb = lo + (hi - lo) * i / grid;
    double fb = R(xb);
    if (fa == 0.0) {
      roots.push_back(xa);
    } else if (fa * fb < 0.0) {
      double a = xa, b = xb, va = fa;
      int it = 0;
      for (; it < 200 && b - a >= tol; ++it) {
        double mid = 0.5 * (a + b);
        double vm = R(mid);
        if (vm == 0.0) { a = b = mid; break; }
        if (va * vm < 0.0) { b = mid; } else { a = mid; va = vm; }
      }
      if (b - a >= tol)
        throw ComputeError("root bisection stalled above tol at n=" + std::to_string(n) +
                           " k=" + std::to_string(k) + " bracket width " + std::to_string(b - a));
      double root = 0.5 * (a + b);
      double va2 = R(a), vb2 = R(b);
      if (vb2 != va2) {
        double sec = b - vb2 * (b - a) / (vb2 - va2);
        if (sec > a && sec < b && std::abs(R(sec)) < std::abs(R(root))) root = sec;
      }
      roots.push_back(root);
    }
    xa = xb;
    fa = fb;
  }

  std::optional<PathMinimizerResult> best;
  const int m = detail::ceil_half(n);
  for (double c : roots) {
    auto w = detail::weights_at(c, n);
    if (!w) continue;
    bool ok = true;
    for (double x : *w)
      if (!(x > 0.0) || !std::isfinite(x)) { ok = false; break; }
    for (int j = 0; ok && j + 1 < m; ++j)
      if ((*w)[static_cast<std::size_t>(j) + 1] <= (*w)[static_cast<std::size_t>(j)] * (1.0 + 1e-12)) ok = false;
    if (!ok) continue;
    auto [c_full, wit] = detail::path_doubling(*w);
    (void)wit;
    if (std::abs(c_full - c) > 100.0 * tol * std::max(1.0, c)) continue;
    if (best && best->c <= c) continue;
    PathMinimizerResult r;
    r.n = n;
    r.k_star = k;
    r.c = c;
    auto pre = detail::path_prefix(*w);
    r.m1_residual = std::abs(detail::path_ball(pre, n, 1, 2 * k + 1) - c * detail::path_ball(pre, n, 1, k));
    double extended = (c - 1.0) * (*w)[static_cast<std::size_t>(m - 1)] - (m >= 2 ? (*w)[static_cast<std::size_t>(m - 2)] : 0.0);
    double target = n % 2 == 0 ? (*w)[static_cast<std::size_t>(m - 1)] : (*w)[static_cast<std::size_t>(m - 2)];
    r.boundary_residual = std::abs(extended - target);
    r.weights = Measure{std::move(*w)};
    r.validated = true;
    r.scan_log.push_back(ScanEntry{k, "validated", c});
    best = std::move(r);
  }
  return best;
}

// Least doubling constant of the path on n vertices. For n <= 8 this is the
// local constant's closed form, attained by the sine measure; for n >= 9 the
// per-k systems are scanned in order of distance from the empirical radius
// k0 = ceil((n-8.6)/5.6) and the minimal validated C wins. Results for
// n <= 30 are cross-checked against the general level-set optimizer.
inline PathMinimizerResult least_doubling_path(int n, double tol = 1e-12) {
  if (n < 2) throw std::invalid_argument("least_doubling_path requires n >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("least_doubling_path requires tol > 0");
  PathMinimizerResult out;
  if (n <= 8) {
    const int m = detail::ceil_half(n);
    double c = c0_path_closed_form(n);
    std::vector<double> w(static_cast<std::size_t>(n));
    const double base = std::sin(std::numbers::pi / (n + 1));
    for (int j = 1; j <= m; ++j) {
      double v = std::sin(j * std::numbers::pi / (n + 1)) / base;
      w[static_cast<std::size_t>(j - 1)] = v;
      w[static_cast<std::size_t>(n - j)] = v;
    }
    auto pre = detail::path_prefix(w);
    out.n = n;
    out.k_star = 0;
    out.c = c;
    out.m1_residual = std::abs(detail::path_ball(pre, n, 1, 1) - c * w[0]);
    if (n >= 3) {
      double extended = (c - 1.0) * w[static_cast<std::size_t>(m - 1)] - w[static_cast<std::size_t>(m - 2)];
      double target = n % 2 == 0 ? w[static_cast<std::size_t>(m - 1)] : w[static_cast<std::size_t>(m - 2)];
      out.boundary_residual = std::abs(extended - target);
    }
    auto [c_full, wit] = detail::path_doubling(w);
    (void)wit;
    out.validated = std::abs(c_full - c) <= 100.0 * tol * std::max(1.0, c);
    out.weights = Measure{std::move(w)};
    out.scan_log.push_back(ScanEntry{0, "closed-form", c});
  } else {
    const int klim = detail::m1_k_limit(n);
    const int k0 = static_cast<int>(std::ceil((n - 8.6) / 5.6));
    std::vector<int> ks(static_cast<std::size_t>(klim));
    for (int k = 0; k < klim; ++k) ks[static_cast<std::size_t>(k)] = k;
    std::stable_sort(ks.begin(), ks.end(), [&](int a, int b) {
      return std::make_pair(std::abs(a - k0), a) < std::make_pair(std::abs(b - k0), b);
    });
    std::optional<PathMinimizerResult> best;
    std::vector<ScanEntry> log;
    for (int k : ks) {
      auto cand = solve_system(n, k, tol);
      if (cand) {
        log.push_back(ScanEntry{k, "validated", cand->c});
        if (!best || cand->c < best->c) best = std::move(cand);
      } else {
        log.push_back(ScanEntry{k, "no-validated-root", std::numeric_limits<double>::quiet_NaN()});
      }
    }
    if (!best)
      throw ComputeError("no validated minimizer system solution for n=" + std::to_string(n) +
                         "; fall back to the general optimizer (least)");
    out = std::move(*best);
    out.scan_log = std::move(log);
  }
  if (n <= 30) {
    Graph g = make_path(n);
    BallIndex idx = build_ball_index(g);
    BisectionResult lp = least_doubling(idx, 1e-8);
    if (std::abs(lp.c_estimate - out.c) > 1e-6)
      throw ComputeError("path solver (" + std::to_string(out.c) +
                         ") disagrees with the general optimizer (" +
                         std::to_string(lp.c_estimate) + ") at n=" + std::to_string(n));
  }
  return out;
}

// The two equality-restoring perturbations for a symmetric measure whose
// doubling constant is c: pull the middle down until its radius-1 quotient
// reaches c (the middle pair moves together when n is even, hence
// d_n = (3+(-1)^n)/2 in the denominator), then push both endpoints up until
// the j=2 quotient reaches c. Guards leave the input unchanged with a
// warning rather than break positivity.
inline RefineResult refine_minimizer(const Measure& mu, double c) {
  const int n = static_cast<int>(mu.size());
  if (n < 2) throw std::invalid_argument("refine_minimizer requires n >= 2");
  if (!detail::path_symmetric(mu.w)) throw std::invalid_argument("refine_minimizer requires a symmetric measure");
  RefineResult out;
  out.measure = mu;
  const int m = detail::ceil_half(n);
  const double dn = n % 2 == 0 ? 2.0 : 1.0;

  auto pre = detail::path_prefix(out.measure.w);
  double middle_gap = c * out.measure.w[static_cast<std::size_t>(m - 1)] - detail::path_ball(pre, n, m, 1);
  if (middle_gap > 0.0) {
    if (c <= dn) {
      out.warning = true;
      out.note = "middle step needs c above " + std::to_string(dn);
      return out;
    }
    double eps = middle_gap / (c - dn);
    if (eps >= out.measure.w[static_cast<std::size_t>(m - 1)]) {
      out.warning = true;
      out.note = "middle step would zero out the middle weight";
      return out;
    }
    out.eps = eps;
    out.measure.w[static_cast<std::size_t>(m - 1)] -= eps;
    if (n % 2 == 0) out.measure.w[static_cast<std::size_t>(m)] -= eps;
    out.applied_middle = true;
  }

  if (n >= 4) {
    pre = detail::path_prefix(out.measure.w);
    double theta = c * out.measure.w[1] - detail::path_ball(pre, n, 2, 1);
    if (theta > 0.0) {
      out.theta = theta;
      out.measure.w[0] += theta;
      out.measure.w[static_cast<std::size_t>(n - 1)] += theta;
      out.applied_end = true;
    }
  }
  return out;
}

// Relative residual |p(c)| / sum_i |coef_i c^i| of the certifying polynomial
// for the three tabulated sizes; the relative form survives the huge
// cancellation in the degree-26 case.
inline double poly_residual(int n, double c) {
  static const std::vector<double> p9 = {1, -5, 7, -3, 1};
  static const std::vector<double> p10 = {1, -3, 0, 1, -1};
  static const std::vector<double> p51 = {
      1,       -25,     276,     -1747,  6808,   -15708, 14861,  24091,
      -92682,  87057,   77858,   -234588, 102327, 199171, -225057, -41798,
      165000,  -36531,  -58763,  25759,  10011,  -6268,  -646,   597,
      6,       -12,     0};
  const std::vector<double>* coef = nullptr;
  if (n == 9) coef = &p9;
  else if (n == 10) coef = &p10;
  else if (n == 51) coef = &p51;
  else throw std::invalid_argument("poly_residual supports n in {9, 10, 51}");
  double value = 0.0, scale = 0.0;
  for (double a : *coef) {
    value = value * c + a;
    scale = scale * std::abs(c) + std::abs(a);
  }
  return std::abs(value) / scale;
}

}  // namespace doubling
