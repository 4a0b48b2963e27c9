#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "doubling/graph.hpp"
#include "doubling/measure.hpp"

namespace doubling {

// Per-vertex BFS distances plus, for each center, the vertex list sorted by
// (distance, id) and the cumulative ball sizes. Radii are clamped to the
// diameter, so any r >= diameter addresses the whole vertex set.
struct BallIndex {
  int n = 0;
  int diameter = 0;
  std::vector<std::vector<int>> dist;         // dist[x][y]
  std::vector<std::vector<int>> order;        // order[x]: vertices by (dist, id)
  std::vector<std::vector<int>> ball_counts;  // ball_counts[x][r] = |B(x, r)|

  int ball_count(int x, int r) const {
    if (r < 0) return 0;
    const auto& c = ball_counts[static_cast<std::size_t>(x)];
    return c[static_cast<std::size_t>(std::min(r, diameter))];
  }

  // Largest radius the doubling supremum has to inspect: ceil((diam-1)/2).
  int k_max() const { return diameter / 2; }
};

inline BallIndex build_ball_index(const Graph& g) {
  BallIndex idx;
  idx.n = g.n;
  const auto un = static_cast<std::size_t>(g.n);
  idx.dist.assign(un, std::vector<int>(un, -1));
  idx.order.assign(un, {});
  int diam = 0;
  for (int s = 0; s < g.n; ++s) {
    auto& d = idx.dist[static_cast<std::size_t>(s)];
    std::queue<int> q;
    d[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.adj[static_cast<std::size_t>(x)]) {
        if (d[static_cast<std::size_t>(y)] < 0) {
          d[static_cast<std::size_t>(y)] = d[static_cast<std::size_t>(x)] + 1;
          q.push(y);
        }
      }
    }
    for (int y = 0; y < g.n; ++y) {
      if (d[static_cast<std::size_t>(y)] < 0)
        throw std::invalid_argument("ball index requires a connected graph");
      diam = std::max(diam, d[static_cast<std::size_t>(y)]);
    }
  }
  idx.diameter = diam;
  idx.ball_counts.assign(un, {});
  for (int x = 0; x < g.n; ++x) {
    auto& ord = idx.order[static_cast<std::size_t>(x)];
    ord.reserve(un);
    const auto& d = idx.dist[static_cast<std::size_t>(x)];
    for (int r = 0; r <= diam; ++r)
      for (int y = 0; y < g.n; ++y)
        if (d[static_cast<std::size_t>(y)] == r) ord.push_back(y);
    auto& cnt = idx.ball_counts[static_cast<std::size_t>(x)];
    cnt.assign(static_cast<std::size_t>(diam) + 1, 0);
    for (int y = 0; y < g.n; ++y) ++cnt[static_cast<std::size_t>(d[static_cast<std::size_t>(y)])];
    for (int r = 1; r <= diam; ++r) cnt[static_cast<std::size_t>(r)] += cnt[static_cast<std::size_t>(r - 1)];
  }
  return idx;
}

// mu(B(x, r)). O(|B(x, r)|); use BallMassTable inside loops.
inline double ball_mass(const BallIndex& idx, const Measure& mu, int x, int r) {
  if (mu.size() != idx.n) throw std::invalid_argument("measure size does not match graph");
  if (x < 0 || x >= idx.n) throw std::invalid_argument("ball_mass: center out of range");
  int cnt = idx.ball_count(x, r);
  const auto& ord = idx.order[static_cast<std::size_t>(x)];
  double s = 0.0;
  for (int i = 0; i < cnt; ++i) s += mu[ord[static_cast<std::size_t>(i)]];
  return s;
}

// Distance-sorted prefix sums per center: O(1) ball masses after O(n^2) setup.
struct BallMassTable {
  const BallIndex* idx = nullptr;
  std::vector<std::vector<double>> prefix;  // prefix[x][i] = mass of first i vertices in order[x]

  BallMassTable(const BallIndex& index, const Measure& mu) : idx(&index) {
    if (mu.size() != index.n) throw std::invalid_argument("measure size does not match graph");
    const auto un = static_cast<std::size_t>(index.n);
    prefix.assign(un, {});
    for (std::size_t x = 0; x < un; ++x) {
      auto& p = prefix[x];
      p.assign(un + 1, 0.0);
      const auto& ord = index.order[x];
      for (std::size_t i = 0; i < un; ++i) p[i + 1] = p[i] + mu[ord[i]];
    }
  }

  double mass(int x, int r) const {
    return prefix[static_cast<std::size_t>(x)][static_cast<std::size_t>(idx->ball_count(x, r))];
  }
};

}  // namespace doubling
