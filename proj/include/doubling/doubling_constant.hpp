#pragma once

#include <optional>
#include <vector>

#include "doubling/ball_index.hpp"

namespace doubling {

// One doubling quotient mu(B(center, 2k+1)) / mu(B(center, k)).
struct QuotientWitness {
  int center = 0;
  int k = 0;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
};

struct LocalConstant {
  double value = 1.0;
  int vertex = 0;  // smallest attaining vertex
};

struct DoublingReport {
  double c_mu = 1.0;
  double c_mu0 = 1.0;
  std::optional<QuotientWitness> witness;  // empty only for the singleton graph
  int witness0 = 0;                        // vertex attaining c_mu0
  std::vector<QuotientWitness> table;      // full quotient list when requested
};

// C0_mu = max_x mu(B(x,1)) / mu(x).
inline LocalConstant local_constant(const BallIndex& idx, const Measure& mu) {
  BallMassTable t(idx, mu);
  LocalConstant out;
  out.value = 0.0;
  for (int x = 0; x < idx.n; ++x) {
    double q = t.mass(x, 1) / mu[x];
    if (q > out.value) {
      out.value = q;
      out.vertex = x;
    }
  }
  return out;
}

// C_mu = max over centers x and radii k in 0..ceil((diam-1)/2) of
// mu(B(x,2k+1)) / mu(B(x,k)). Ties resolve to the lexicographically
// smallest (x, k). The singleton graph reports 1 with no witness.
inline DoublingReport doubling_constant(const BallIndex& idx, const Measure& mu,
                                        bool with_table = false) {
  if (mu.size() != idx.n) throw std::invalid_argument("measure size does not match graph");
  DoublingReport rep;
  if (idx.n == 1) {
    rep.c_mu = 1.0;
    rep.c_mu0 = 1.0;
    rep.witness0 = 0;
    return rep;
  }
  BallMassTable t(idx, mu);
  const int kmax = idx.k_max();
  double best = 0.0;
  QuotientWitness bw;
  for (int x = 0; x < idx.n; ++x) {
    for (int k = 0; k <= kmax; ++k) {
      double den = t.mass(x, k);
      double num = t.mass(x, 2 * k + 1);
      double q = num / den;
      if (with_table)
        rep.table.push_back(QuotientWitness{x, k, num, den, q});
      if (q > best) {
        best = q;
        bw = QuotientWitness{x, k, num, den, q};
      }
    }
  }
  rep.c_mu = best;
  rep.witness = bw;
  LocalConstant lc = local_constant(idx, mu);
  rep.c_mu0 = lc.value;
  rep.witness0 = lc.vertex;
  return rep;
}

}  // namespace doubling
