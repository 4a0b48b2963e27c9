#pragma once

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doubling/errors.hpp"

namespace doubling {

// Finite connected simple graph. Vertices are 0-based internally; all file
// and CLI interfaces speak 1-based ids.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj) deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
  }

  int max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adj) d = std::max(d, nb.size());
    return static_cast<int>(d);
  }
};

enum class Family { path, cycle, star, complete };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete: return "complete";
  }
  return "?";
}

namespace detail {

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  g.adj.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

inline bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        q.push(y);
      }
    }
  }
  return reached == g.n;
}

}  // namespace detail

// L_n: vertices 0..n-1, edges {i, i+1}. Singleton allowed.
inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path graph requires n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return detail::graph_from_edges(n, e);
}

// C_n, n >= 3.
inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph requires n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return detail::graph_from_edges(n, e);
}

// S_n: center 0, leaves 1..n-1. n >= 2.
inline Graph make_star(int n) {
  if (n < 2) throw std::invalid_argument("star graph requires n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return detail::graph_from_edges(n, e);
}

// K_n. Singleton allowed.
inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return detail::graph_from_edges(n, e);
}

inline Graph build_named(Family f, int n) {
  switch (f) {
    case Family::path: return make_path(n);
    case Family::cycle: return make_cycle(n);
    case Family::star: return make_star(n);
    case Family::complete: return make_complete(n);
  }
  throw std::invalid_argument("unknown graph family");
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected integer " + what +
                     ", got '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

// Edge-list text: header "n m", then m lines "u v" with 1 <= u < v <= n.
// Lines starting with '#' are comments; blank lines are skipped.
inline Graph parse_edge_list(std::string_view text) {
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (n < 0) {
      if (toks.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n m'");
      n = detail::parse_int(toks[0], line_no, "vertex count");
      m = detail::parse_int(toks[1], line_no, "edge count");
      if (n < 1) throw ParseError("line " + std::to_string(line_no) + ": vertex count must be >= 1");
      if (m < 0) throw ParseError("line " + std::to_string(line_no) + ": edge count must be >= 0");
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected edge 'u v'");
    int u = detail::parse_int(toks[0], line_no, "vertex id");
    int v = detail::parse_int(toks[1], line_no, "vertex id");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop " +
                                 std::to_string(u) + " " + std::to_string(v));
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range 1.." +
                       std::to_string(n));
    if (u > v)
      throw ParseError("line " + std::to_string(line_no) + ": edges must satisfy u < v");
    if (!seen.emplace(u, v).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                       std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) throw ParseError("empty edge-list input");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                     std::to_string(edges.size()));
  Graph g = detail::graph_from_edges(n, edges);
  if (!detail::is_connected(g)) throw ParseError("graph is not connected");
  return g;
}

}  // namespace doubling
