#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doubling/ball_index.hpp"
#include "doubling/doubling_constant.hpp"
#include "doubling/simplex.hpp"

namespace doubling {

struct BisectionResult {
  double c_estimate = 0.0;
  double t_low = 0.0;
  double t_high = 0.0;
  Measure minimizer;
  int iterations = 0;
  int constraint_count = 0;
};

namespace detail {

// Rows of mu(B(x,2k+1)) - t*mu(B(x,k)) <= 0 over non-vacuous (x, k) pairs,
// in the shifted variables w = 1 + u, u >= 0.
struct LevelSystem {
  std::vector<std::vector<double>> rows;  // coefficients on u
  std::vector<double> rhs;
  std::vector<std::pair<int, int>> tags;  // (center, k) per row

  LevelSystem(const BallIndex& idx, double t) {
    const int n = idx.n;
    const int kmax = idx.k_max();
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k <= kmax; ++k) {
        int inner = idx.ball_count(x, k);
        int outer = idx.ball_count(x, 2 * k + 1);
        if (inner == outer) continue;  // both balls equal: quotient is 1, no constraint
        std::vector<double> row(static_cast<std::size_t>(n), 0.0);
        const auto& ord = idx.order[static_cast<std::size_t>(x)];
        for (int i = 0; i < outer; ++i) row[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] += 1.0;
        for (int i = 0; i < inner; ++i) row[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] -= t;
        // row . (1 + u) <= 0  =>  row . u <= -(outer - t*inner)
        rows.push_back(std::move(row));
        rhs.push_back(t * inner - outer);
        tags.emplace_back(x, k);
      }
    }
  }
};

}  // namespace detail

// Is any measure with doubling constant <= t feasible? Returns a witness
// measure on success. The level set is linear in the weights for fixed t,
// so this is one phase-1 simplex run (with a total-mass phase 2 to land on
// a canonical vertex). Weights are normalized to min 1 by construction.
inline std::optional<Measure> feasible_at(const BallIndex& idx, double t,
                                          double slack = 1e-9) {
  if (idx.n < 1) throw std::invalid_argument("feasible_at requires a non-empty graph");
  detail::LevelSystem sys(idx, t);
  std::vector<double> cost(static_cast<std::size_t>(idx.n), -1.0);  // minimize total mass
  lp::Result lpres = lp::solve_max(sys.rows, sys.rhs, cost, slack);
  if (lpres.status == lp::Status::infeasible) return std::nullopt;
  if (lpres.status != lp::Status::optimal)
    throw ComputeError("level feasibility solve broke down (status " +
                       std::to_string(static_cast<int>(lpres.status)) + ")");
  std::vector<double> w(static_cast<std::size_t>(idx.n));
  for (int i = 0; i < idx.n; ++i) w[static_cast<std::size_t>(i)] = 1.0 + std::max(0.0, lpres.x[static_cast<std::size_t>(i)]);
  // Guard against a solver that claims feasibility on a violating point.
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    double lhs = 0.0;
    for (int i = 0; i < idx.n; ++i) lhs += sys.rows[r][static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
    if (lhs > 1e-6 * std::max(1.0, t))
      throw ComputeError("level feasibility witness violates its constraints");
  }
  return Measure{std::move(w)};
}

// C_G by bisection on the level parameter: infeasible below, feasible above.
// The counting measure seeds the upper end; 2 is the universal lower bound.
inline BisectionResult least_doubling(const BallIndex& idx, double tol = 1e-10) {
  if (idx.n < 2) throw std::invalid_argument("least doubling constant requires n >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("least_doubling requires tol > 0");
  BisectionResult out;
  out.constraint_count = static_cast<int>(detail::LevelSystem(idx, 2.0).rows.size());

  Measure counting = counting_measure(idx.n);
  double hi = doubling_constant(idx, counting).c_mu;
  double lo = 2.0;
  Measure witness = counting;

  if (auto w0 = feasible_at(idx, lo)) {
    // Two-point graphs sit exactly on the universal lower bound.
    out.c_estimate = lo;
    out.t_low = lo;
    out.t_high = lo;
    out.minimizer = std::move(*w0);
    return out;
  }
  int it = 0;
  while (hi - lo > tol && it < 60) {
    double mid = 0.5 * (lo + hi);
    if (auto w = feasible_at(idx, mid)) {
      hi = mid;
      witness = std::move(*w);
    } else {
      lo = mid;
    }
    ++it;
  }
  out.c_estimate = 0.5 * (lo + hi);
  out.t_low = lo;
  out.t_high = hi;
  out.minimizer = std::move(witness);
  out.iterations = it;
  return out;
}

}  // namespace doubling
