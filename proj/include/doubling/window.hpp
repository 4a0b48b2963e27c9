#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doubling/doubling_constant.hpp"
#include "doubling/measure.hpp"

// Windowed evidence for the doubling constants of the integer line and of
// the half line. Only quotients whose outer ball lies fully inside the
// window are reported, so every value is a true quotient of the infinite
// measure; the half-line window keeps its genuine boundary at vertex 1 and
// truncates only on the right.

namespace doubling {

struct WindowQuotient {
  int center = 0;  // line coordinate: in [-N, N] for the integer line, [1, N] for the half line
  int k = 0;
  double value = 0.0;
};

struct WindowReport {
  int lo = 0;  // window range in line coordinates
  int hi = 0;
  double max_quotient = 0.0;
  QuotientWitness witness;  // center in line coordinates
  double bound = 3.0;
  bool all_quotients_bounded = false;  // max_quotient <= bound + 1e-12
  std::vector<WindowQuotient> quotients;
};

namespace detail {

inline std::vector<double> window_prefix(const Measure& mu) {
  std::vector<double> pre(mu.w.size() + 1, 0.0);
  for (std::size_t i = 0; i < mu.w.size(); ++i) pre[i + 1] = pre[i] + mu.w[i];
  return pre;
}

inline WindowReport finish_window(WindowReport rep, bool with_table) {
  rep.all_quotients_bounded = rep.max_quotient <= rep.bound + 1e-12;
  if (!with_table) rep.quotients.clear();
  return rep;
}

}  // namespace detail

// Quotients over the symmetric window [-N, N] of the integer line; vertex i
// of mu is coordinate i - N. Pairs (x, k) require |x| + 2k + 1 <= N.
inline WindowReport z_window_report(int N, const Measure& mu, bool with_table = false) {
  if (N < 2) throw std::invalid_argument("z_window_report requires half-width N >= 2");
  if (static_cast<int>(mu.size()) != 2 * N + 1)
    throw std::invalid_argument("z_window_report needs a measure on 2N+1 vertices");
  auto pre = detail::window_prefix(mu);
  auto mass = [&](int x, int r) {  // coordinates clamped to the window
    int lo = std::max(-N, x - r), hi = std::min(N, x + r);
    return pre[static_cast<std::size_t>(hi + N + 1)] - pre[static_cast<std::size_t>(lo + N)];
  };
  WindowReport rep;
  rep.lo = -N;
  rep.hi = N;
  bool first = true;
  for (int x = -N; x <= N; ++x) {
    for (int k = 0; std::abs(x) + 2 * k + 1 <= N; ++k) {
      double num = mass(x, 2 * k + 1), den = mass(x, k);
      double q = num / den;
      rep.quotients.push_back(WindowQuotient{x, k, q});
      if (first || q > rep.max_quotient) {
        first = false;
        rep.max_quotient = q;
        rep.witness = QuotientWitness{x, k, num, den, q};
      }
    }
  }
  return detail::finish_window(std::move(rep), with_table);
}

// Quotients over the window [1, N] of the half line; the boundary at 1 is
// genuine, so only the right edge constrains: pairs (j, k) require
// j + 2k + 1 <= N, while balls still clamp at 1.
inline WindowReport n_window_report(int N, const Measure& mu, bool with_table = false) {
  if (N < 2) throw std::invalid_argument("n_window_report requires width N >= 2");
  if (static_cast<int>(mu.size()) != N)
    throw std::invalid_argument("n_window_report needs a measure on N vertices");
  auto pre = detail::window_prefix(mu);
  auto mass = [&](int j, int r) {
    int lo = std::max(1, j - r), hi = std::min(N, j + r);
    return pre[static_cast<std::size_t>(hi)] - pre[static_cast<std::size_t>(lo - 1)];
  };
  WindowReport rep;
  rep.lo = 1;
  rep.hi = N;
  bool first = true;
  for (int j = 1; j <= N; ++j) {
    for (int k = 0; j + 2 * k + 1 <= N; ++k) {
      double num = mass(j, 2 * k + 1), den = mass(j, k);
      double q = num / den;
      rep.quotients.push_back(WindowQuotient{j, k, q});
      if (first || q > rep.max_quotient) {
        first = false;
        rep.max_quotient = q;
        rep.witness = QuotientWitness{j, k, num, den, q};
      }
    }
  }
  return detail::finish_window(std::move(rep), with_table);
}

// Counting-measure quotient on the integer line: mu(B(x,2k+1))/mu(B(x,k))
// = (4k+3)/(2k+1), whose supremum 3 is attained at k = 0.
inline double counting_z_quotient(int k) {
  if (k < 0) throw std::invalid_argument("counting_z_quotient requires k >= 0");
  return (4.0 * k + 3.0) / (2.0 * k + 1.0);
}

// Quotient of the half-line measure with weight alpha at vertex 1 and 1
// elsewhere: once the inner ball reaches the boundary (k >= j-1) the value
// is (alpha+j+2k)/(alpha+j+k-1); before that the counting value applies.
inline double lambda_alpha_quotient(double alpha, int j, int k) {
  if (!(alpha >= 0.5 && alpha <= 1.0))
    throw std::invalid_argument("lambda_alpha_quotient requires alpha in [1/2, 1]");
  if (j < 1) throw std::invalid_argument("lambda_alpha_quotient requires j >= 1");
  if (k < 0) throw std::invalid_argument("lambda_alpha_quotient requires k >= 0");
  if (k >= j - 1) return (alpha + j + 2.0 * k) / (alpha + j + k - 1.0);
  return (4.0 * k + 3.0) / (2.0 * k + 1.0);
}

}  // namespace doubling
