#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace doubling::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };

struct Result {
  Status status = Status::optimal;
  double objective = 0.0;
  std::vector<double> x;
  double phase1_excess = 0.0;  // residual infeasibility after the feasibility phase
};

// Dense dictionary simplex for max c.x subject to A x <= b, x >= 0.
// Feasibility is established by driving one artificial variable out of the
// basis; "infeasible" is declared only when the bounded feasibility-phase
// optimum leaves more than eps of violation. Ties in the entering and ratio
// rules break on variable ids, which prevents cycling in practice; a pivot
// cap backstops the remaining pathological cases.
class DictionarySimplex {
 public:
  DictionarySimplex(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                    const std::vector<double>& c, double eps, long max_pivots)
      : m_(static_cast<int>(A.size())),
        d_(static_cast<int>(c.size())),
        eps_(eps),
        pivots_left_(max_pivots),
        nonbasic_(static_cast<std::size_t>(d_) + 1),
        basic_(static_cast<std::size_t>(m_)),
        t_(static_cast<std::size_t>(m_) + 2,
           std::vector<double>(static_cast<std::size_t>(d_) + 2, 0.0)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < d_; ++j) t_[ui(i)][ui(j)] = A[ui(i)][ui(j)];
      basic_[ui(i)] = d_ + i;
      t_[ui(i)][ui(d_)] = -1.0;  // artificial column
      t_[ui(i)][ui(d_ + 1)] = b[ui(i)];
    }
    for (int j = 0; j < d_; ++j) {
      nonbasic_[ui(j)] = j;
      t_[ui(m_)][ui(j)] = -c[ui(j)];
    }
    nonbasic_[ui(d_)] = kArtificial;
    t_[ui(m_ + 1)][ui(d_)] = 1.0;
  }

  Result run() {
    Result res;
    if (m_ > 0) {
      int r = 0;
      for (int i = 1; i < m_; ++i)
        if (t_[ui(i)][ui(d_ + 1)] < t_[ui(r)][ui(d_ + 1)]) r = i;
      if (t_[ui(r)][ui(d_ + 1)] < -eps_) {
        pivot(r, d_);
        if (!optimize(true)) return limit(res);
        res.phase1_excess = std::max(0.0, -t_[ui(m_ + 1)][ui(d_ + 1)]);
        if (t_[ui(m_ + 1)][ui(d_ + 1)] < -eps_) {
          res.status = Status::infeasible;
          return res;
        }
        for (int i = 0; i < m_; ++i) {
          if (basic_[ui(i)] != kArtificial) continue;
          int s = 0;
          for (int j = 1; j <= d_; ++j)
            if (better(t_[ui(i)][ui(j)], nonbasic_[ui(j)], t_[ui(i)][ui(s)], nonbasic_[ui(s)])) s = j;
          pivot(i, s);
        }
      }
    }
    bool bounded = optimize(false);
    if (pivots_left_ < 0) return limit(res);
    if (!bounded) {
      res.status = Status::unbounded;
      return res;
    }
    res.status = Status::optimal;
    res.objective = t_[ui(m_)][ui(d_ + 1)];
    res.x.assign(static_cast<std::size_t>(d_), 0.0);
    for (int i = 0; i < m_; ++i)
      if (basic_[ui(i)] >= 0 && basic_[ui(i)] < d_) res.x[ui(basic_[ui(i)])] = t_[ui(i)][ui(d_ + 1)];
    return res;
  }

 private:
  static constexpr int kArtificial = -1;

  static std::size_t ui(int v) { return static_cast<std::size_t>(v); }

  static bool better(double val, int id, double best_val, int best_id) {
    return val < best_val || (val == best_val && id < best_id);
  }

  Result limit(Result res) const {
    res.status = Status::iteration_limit;
    return res;
  }

  void pivot(int r, int s) {
    --pivots_left_;
    auto& row = t_[ui(r)];
    double inv = 1.0 / row[ui(s)];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(t_[ui(i)][ui(s)]) <= eps_) continue;
      auto& other = t_[ui(i)];
      double f = other[ui(s)] * inv;
      for (int j = 0; j < d_ + 2; ++j) other[ui(j)] -= row[ui(j)] * f;
      other[ui(s)] = row[ui(s)] * f;
    }
    for (int j = 0; j < d_ + 2; ++j)
      if (j != s) row[ui(j)] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r) t_[ui(i)][ui(s)] *= -inv;
    row[ui(s)] = inv;
    std::swap(basic_[ui(r)], nonbasic_[ui(s)]);
  }

  // feasibility_phase: optimize the artificial objective (row m+1), all
  // columns eligible; otherwise optimize row m with the artificial barred.
  bool optimize(bool feasibility_phase) {
    const int obj = feasibility_phase ? m_ + 1 : m_;
    for (;;) {
      if (pivots_left_ < 0) return false;
      int s = -1;
      for (int j = 0; j <= d_; ++j) {
        if (!feasibility_phase && nonbasic_[ui(j)] == kArtificial) continue;
        if (s < 0 || better(t_[ui(obj)][ui(j)], nonbasic_[ui(j)], t_[ui(obj)][ui(s)], nonbasic_[ui(s)]))
          s = j;
      }
      if (s < 0 || t_[ui(obj)][ui(s)] >= -eps_) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (t_[ui(i)][ui(s)] <= eps_) continue;
        if (r < 0 || better(t_[ui(i)][ui(d_ + 1)] / t_[ui(i)][ui(s)], basic_[ui(i)],
                            t_[ui(r)][ui(d_ + 1)] / t_[ui(r)][ui(s)], basic_[ui(r)]))
          r = i;
      }
      if (r < 0) return false;  // unbounded improving direction
      pivot(r, s);
    }
  }

  int m_, d_;
  double eps_;
  long pivots_left_;
  std::vector<int> nonbasic_, basic_;
  std::vector<std::vector<double>> t_;
};

inline Result solve_max(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                        const std::vector<double>& c, double eps = 1e-9,
                        long max_pivots = 200000) {
  return DictionarySimplex(A, b, c, eps, max_pivots).run();
}

}  // namespace doubling::lp
