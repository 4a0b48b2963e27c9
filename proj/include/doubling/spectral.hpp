#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "doubling/graph.hpp"
#include "doubling/measure.hpp"

namespace doubling {

struct SpectralOptions {
  double tol = 1e-12;           // stop once successive Rayleigh values differ by less
  double residual_tol = 1e-6;   // success also requires ||A v - lambda v||_inf below this
  int max_iter = 100000;
};

struct SpectralResult {
  double lambda1 = 0.0;
  Measure perron;      // positive eigenvector, max entry normalized to 1
  int iterations = 0;
  double residual = 0.0;
};

namespace detail {

// Geometric-tail limit of the Rayleigh sequence. Plain Aitken on successive
// values amplifies rounding noise by 1/(1-q)^2, which is fatal for the
// near-degenerate spectra of long paths; subsampling with stride w picks the
// effective ratio q^w closest to 1/2, where the extrapolation is stable.
inline double extrapolate_limit(const std::vector<double>& hist) {
  const std::size_t t = hist.size();
  if (t < 3) return hist.empty() ? 0.0 : hist.back();
  double best = hist.back();
  double best_score = -1.0;
  for (std::size_t w = 1; 2 * w <= t - 1; w *= 2) {
    double l2 = hist[t - 1];
    double l1 = hist[t - 1 - w];
    double l0 = hist[t - 1 - 2 * w];
    double d2 = l2 - l1;
    double d1 = l1 - l0;
    if (d1 == 0.0 || d2 == 0.0) continue;
    double q = d2 / d1;
    if (!(q > 0.0 && q < 1.0)) continue;
    double score = std::abs(q - 0.5);
    if (best_score < 0.0 || score < best_score) {
      best_score = score;
      best = l2 + d2 * q / (1.0 - q);
    }
  }
  return best;
}

struct Csr {
  std::vector<int> head;  // size n+1
  std::vector<int> nbr;

  explicit Csr(const Graph& g) {
    head.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (int x = 0; x < g.n; ++x)
      head[static_cast<std::size_t>(x) + 1] =
          head[static_cast<std::size_t>(x)] + static_cast<int>(g.adj[static_cast<std::size_t>(x)].size());
    nbr.reserve(static_cast<std::size_t>(head.back()));
    for (int x = 0; x < g.n; ++x)
      for (int y : g.adj[static_cast<std::size_t>(x)]) nbr.push_back(y);
  }

  // z = (A + I) v
  void shifted_apply(const std::vector<double>& v, std::vector<double>& z) const {
    const std::size_t n = v.size();
    for (std::size_t x = 0; x < n; ++x) {
      double s = v[x];
      for (int e = head[x]; e < head[x + 1]; ++e) s += v[static_cast<std::size_t>(nbr[static_cast<std::size_t>(e)])];
      z[x] = s;
    }
  }
};

}  // namespace detail

// Dominant adjacency eigenpair by power iteration on A + I (the shift keeps
// bipartite spectra from oscillating) from the uniform positive vector.
// Success requires both the Rayleigh-difference and the residual criteria.
inline SpectralResult power_iteration(const Graph& g, SpectralOptions opt = {}) {
  if (g.n < 1) throw std::invalid_argument("power iteration requires a non-empty graph");
  const auto un = static_cast<std::size_t>(g.n);
  if (g.n == 1)
    return SpectralResult{0.0, Measure{{1.0}}, 0, 0.0};

  detail::Csr a(g);
  std::vector<double> v(un, 1.0 / std::sqrt(static_cast<double>(g.n)));
  std::vector<double> z(un), resid(un);
  std::vector<double> hist;
  hist.reserve(1024);
  bool diff_converged = false;
  double last_residual = -1.0;

  for (int it = 1; it <= opt.max_iter; ++it) {
    a.shifted_apply(v, z);
    double rho = 0.0;
    for (std::size_t i = 0; i < un; ++i) rho += v[i] * z[i];  // Rayleigh of A+I, ||v||=1
    hist.push_back(rho);
    double nrm = 0.0;
    for (double x : z) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < un; ++i) v[i] = z[i] / nrm;

    if (hist.size() >= 2 && std::abs(hist[hist.size() - 1] - hist[hist.size() - 2]) < opt.tol)
      diff_converged = true;
    if (diff_converged) {
      double lambda1 = detail::extrapolate_limit(hist) - 1.0;
      double vmax = 0.0;
      for (double x : v) vmax = std::max(vmax, x);
      for (std::size_t i = 0; i < un; ++i) z[i] = v[i] / vmax;  // reuse z as max-normalized vector
      a.shifted_apply(z, resid);
      double r = 0.0;
      for (std::size_t i = 0; i < un; ++i)
        r = std::max(r, std::abs(resid[i] - z[i] - lambda1 * z[i]));
      last_residual = r;
      if (r <= opt.residual_tol) {
        SpectralResult out;
        out.lambda1 = lambda1;
        out.perron = Measure{std::move(z)};
        out.iterations = it;
        out.residual = r;
        return out;
      }
    }
  }
  throw ComputeError("power iteration did not converge in " + std::to_string(opt.max_iter) +
                     " iterations (last residual " +
                     (last_residual < 0.0 ? std::string("n/a") : std::to_string(last_residual)) + ")");
}

// C0_G = 1 + lambda_1(A_G); the unique minimizing measure is the Perron vector.
inline double c0_spectral(const Graph& g, SpectralOptions opt = {}) {
  return 1.0 + power_iteration(g, opt).lambda1;
}

// C0 of the n-vertex path: 1 + 2 cos(pi/(n+1)).
inline double c0_path_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("path closed form requires n >= 2");
  return 1.0 + 2.0 * std::cos(std::numbers::pi / (n + 1));
}

// Chebyshev polynomial of the second kind, forward recurrence.
inline double chebyshev_u(int k, double x) {
  if (k < 0) throw std::invalid_argument("chebyshev_u requires k >= 0");
  double um1 = 1.0;  // U_0
  if (k == 0) return um1;
  double u = 2.0 * x;  // U_1
  for (int i = 2; i <= k; ++i) {
    double next = 2.0 * x * u - um1;
    um1 = u;
    u = next;
  }
  return u;
}

}  // namespace doubling
