#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "doubling/errors.hpp"

namespace doubling {

// Strictly positive weight per vertex. Index i is vertex i (0-based).
struct Measure {
  std::vector<double> w;

  int size() const { return static_cast<int>(w.size()); }

  double total() const {
    double s = 0.0;
    for (double x : w) s += x;
    return s;
  }

  double operator[](int i) const { return w[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return w[static_cast<std::size_t>(i)]; }
};

namespace detail {

inline void check_weights(const std::vector<double>& w) {
  if (w.empty()) throw std::invalid_argument("measure must have at least one weight");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] <= 0.0)
      throw std::invalid_argument("measure weight at vertex " + std::to_string(i + 1) +
                                  " must be positive and finite");
  }
}

}  // namespace detail

inline Measure explicit_measure(std::vector<double> w) {
  detail::check_weights(w);
  return Measure{std::move(w)};
}

inline Measure counting_measure(int n) {
  if (n < 1) throw std::invalid_argument("counting measure requires n >= 1");
  return Measure{std::vector<double>(static_cast<std::size_t>(n), 1.0)};
}

// sigma(j) = sin(j*pi/(n+1)), 1-based j.
inline Measure sine_measure(int n) {
  if (n < 1) throw std::invalid_argument("sine measure requires n >= 1");
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    w[static_cast<std::size_t>(j - 1)] = std::sin(j * std::numbers::pi / (n + 1));
  return Measure{std::move(w)};
}

// Weight alpha at vertex 1, unit weight elsewhere. alpha in [1/2, 1].
inline Measure lambda_alpha_measure(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("lambda_alpha measure requires n >= 1");
  if (!(alpha >= 0.5 && alpha <= 1.0))
    throw std::invalid_argument("lambda_alpha requires alpha in [1/2, 1]");
  std::vector<double> w(static_cast<std::size_t>(n), 1.0);
  w[0] = alpha;
  return Measure{std::move(w)};
}

// mu~(j) = mu(j) + mu(n+1-j); preserves total mass up to factor 2.
inline Measure symmetrize(const Measure& mu) {
  const int n = mu.size();
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = mu[j] + mu[n - 1 - j];
  return Measure{std::move(w)};
}

// Adds theta to one vertex weight; the result must stay positive.
inline Measure perturb(const Measure& mu, int vertex, double theta) {
  if (vertex < 0 || vertex >= mu.size())
    throw std::invalid_argument("perturb: vertex out of range");
  if (!std::isfinite(theta)) throw std::invalid_argument("perturb: theta must be finite");
  double nw = mu[vertex] + theta;
  if (!(nw > 0.0))
    throw std::invalid_argument("perturb: resulting weight must stay positive");
  Measure out = mu;
  out[vertex] = nw;
  return out;
}

// Measure file: one positive decimal per line ('#' comments allowed), or a
// single JSON array. expected_n < 0 accepts any length.
inline Measure parse_measure_file(std::string_view text, int expected_n = -1) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty measure input");
  std::vector<double> w;
  if (text[first] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw ParseError("measure file: malformed JSON array");
    for (const auto& v : j) {
      if (!v.is_number()) throw ParseError("measure file: JSON array must hold numbers");
      w.push_back(v.get<double>());
    }
  } else {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
      pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
      ++line_no;
      std::size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string_view::npos || line[b] == '#') continue;
      std::size_t e = line.find_last_not_of(" \t\r");
      std::string tok(line.substr(b, e - b + 1));
      try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        w.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected one decimal weight, got '" +
                         tok + "'");
      }
    }
  }
  if (expected_n >= 0 && static_cast<int>(w.size()) != expected_n)
    throw ParseError("measure has " + std::to_string(w.size()) + " weights, expected " +
                     std::to_string(expected_n));
  try {
    detail::check_weights(w);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return Measure{std::move(w)};
}

}  // namespace doubling
