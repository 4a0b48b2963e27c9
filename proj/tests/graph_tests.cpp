#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>

#include "doubling/ball_index.hpp"
#include "doubling/errors.hpp"
#include "doubling/graph.hpp"
#include "support/generators.hpp"

using doubling::BallIndex;
using doubling::Graph;
using doubling::build_ball_index;
using doubling::make_complete;
using doubling::make_cycle;
using doubling::make_path;
using doubling::make_star;
using doubling::parse_edge_list;

TEST_CASE("path graph structure") {
  Graph g = make_path(5);
  REQUIRE(g.n == 5);
  REQUIRE(g.edge_count() == 4);
  REQUIRE(g.max_degree() == 2);
  REQUIRE(g.adj[0] == std::vector<int>{1});
  REQUIRE(g.adj[2] == (std::vector<int>{1, 3}));
  Graph g1 = make_path(1);
  REQUIRE(g1.n == 1);
  REQUIRE(g1.edge_count() == 0);
  REQUIRE_THROWS_AS(make_path(0), std::invalid_argument);
}

TEST_CASE("cycle graph structure") {
  Graph g = make_cycle(6);
  REQUIRE(g.edge_count() == 6);
  for (int v = 0; v < 6; ++v) REQUIRE(g.adj[static_cast<std::size_t>(v)].size() == 2);
  REQUIRE(g.adj[0] == (std::vector<int>{1, 5}));
  REQUIRE_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("star graph structure") {
  Graph g = make_star(5);
  REQUIRE(g.n == 5);
  REQUIRE(g.edge_count() == 4);
  REQUIRE(g.max_degree() == 4);
  REQUIRE(g.adj[0].size() == 4);
  for (int v = 1; v < 5; ++v) REQUIRE(g.adj[static_cast<std::size_t>(v)] == std::vector<int>{0});
  REQUIRE(make_star(2).edge_count() == 1);
  REQUIRE_THROWS_AS(make_star(1), std::invalid_argument);
}

TEST_CASE("complete graph structure") {
  Graph g = make_complete(4);
  REQUIRE(g.edge_count() == 6);
  REQUIRE(g.max_degree() == 3);
  for (int v = 0; v < 4; ++v) REQUIRE(g.adj[static_cast<std::size_t>(v)].size() == 3);
  // K_3 and C_3 are the same graph.
  Graph c3 = make_cycle(3);
  Graph k3 = make_complete(3);
  for (int v = 0; v < 3; ++v) REQUIRE(c3.adj[static_cast<std::size_t>(v)] == k3.adj[static_cast<std::size_t>(v)]);
}

TEST_CASE("edge list parsing accepts a well-formed graph") {
  std::string text =
      "# triangle with a tail\n"
      "4 4\n"
      "1 2\n"
      "2 3\n"
      "1 3\n"
      "\n"
      "3 4\n";
  Graph g = parse_edge_list(text);
  REQUIRE(g.n == 4);
  REQUIRE(g.edge_count() == 4);
  REQUIRE(g.adj[0] == (std::vector<int>{1, 2}));
  REQUIRE(g.adj[3] == std::vector<int>{2});
}

TEST_CASE("edge list parsing rejects malformed input") {
  using doubling::ParseError;
  REQUIRE_THROWS_AS(parse_edge_list(""), ParseError);
  // Self loop.
  REQUIRE_THROWS_AS(parse_edge_list("2 1\n1 1\n"), ParseError);
  // Duplicate edge.
  REQUIRE_THROWS_AS(parse_edge_list("3 3\n1 2\n2 3\n1 2\n"), ParseError);
  // Vertex out of range.
  REQUIRE_THROWS_AS(parse_edge_list("3 2\n1 2\n2 4\n"), ParseError);
  // Edge count mismatch.
  REQUIRE_THROWS_AS(parse_edge_list("3 3\n1 2\n2 3\n"), ParseError);
  // Disconnected.
  REQUIRE_THROWS_AS(parse_edge_list("4 2\n1 2\n3 4\n"), ParseError);
  // Token that is not an integer.
  REQUIRE_THROWS_AS(parse_edge_list("3 2\n1 2\n2 x\n"), ParseError);
}

TEST_CASE("edge list parse errors name the offending line") {
  try {
    parse_edge_list("3 3\n1 2\n2 3\n1 2\n");
    FAIL("expected a parse error");
  } catch (const doubling::ParseError& e) {
    REQUIRE(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("distances match an independent oracle on random graphs") {
  testsupport::Rng rng(20240801);
  for (int trial = 0; trial < 100; ++trial) {
    int n = testsupport::uniform_int(rng, 2, 12);
    Graph g = testsupport::random_connected_graph(rng, n, testsupport::uniform_int(rng, 0, n));
    BallIndex idx = build_ball_index(g);
    auto d = testsupport::floyd_warshall(g);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        REQUIRE(idx.dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                d[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  }
}

TEST_CASE("path ball sizes follow the interval formula") {
  // On a path, the ball around vertex j with radius k is the clamped
  // interval [j-k, j+k] in 1-based coordinates.
  for (int n = 1; n <= 30; ++n) {
    BallIndex idx = build_ball_index(make_path(n));
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        int expect = std::min(j + k, n) - std::max(j - k, 1) + 1;
        REQUIRE(idx.ball_count(j - 1, k) == expect);
      }
  }
}

TEST_CASE("ball index geometry on named graphs") {
  BallIndex p = build_ball_index(make_path(4));
  REQUIRE(p.diameter == 3);
  REQUIRE(p.dist[0][3] == 3);
  REQUIRE(p.k_max() == 1);

  BallIndex c = build_ball_index(make_cycle(5));
  REQUIRE(c.diameter == 2);
  REQUIRE(c.dist[0][3] == 2);

  BallIndex s = build_ball_index(make_star(6));
  REQUIRE(s.diameter == 2);
  REQUIRE(s.dist[1][2] == 2);
  REQUIRE(s.dist[0][4] == 1);

  BallIndex k = build_ball_index(make_complete(7));
  REQUIRE(k.diameter == 1);
  REQUIRE(k.k_max() == 0);
}

TEST_CASE("ball order is sorted by distance then id") {
  testsupport::Rng rng(20240802);
  for (int trial = 0; trial < 50; ++trial) {
    int n = testsupport::uniform_int(rng, 2, 10);
    Graph g = testsupport::random_connected_graph(rng, n, 2);
    BallIndex idx = build_ball_index(g);
    for (int x = 0; x < n; ++x) {
      const auto& ord = idx.order[static_cast<std::size_t>(x)];
      REQUIRE(static_cast<int>(ord.size()) == n);
      for (std::size_t i = 1; i < ord.size(); ++i) {
        int du = idx.dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(ord[i - 1])];
        int dv = idx.dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(ord[i])];
        REQUIRE((du < dv || (du == dv && ord[i - 1] < ord[i])));
      }
    }
  }
}

TEST_CASE("ball counts are nondecreasing in the radius and saturate at n") {
  testsupport::Rng rng(20240803);
  for (int trial = 0; trial < 50; ++trial) {
    int n = testsupport::uniform_int(rng, 2, 12);
    Graph g = testsupport::random_connected_graph(rng, n, 3);
    BallIndex idx = build_ball_index(g);
    for (int x = 0; x < n; ++x) {
      for (int r = 1; r <= idx.diameter + 1; ++r)
        REQUIRE(idx.ball_count(x, r) >= idx.ball_count(x, r - 1));
      REQUIRE(idx.ball_count(x, idx.diameter) == n);
    }
  }
}

TEST_CASE("ball index rejects a disconnected graph") {
  Graph g = doubling::detail::graph_from_edges(4, {{0, 1}, {2, 3}});
  REQUIRE_FALSE(doubling::detail::is_connected(g));
  REQUIRE_THROWS_AS(build_ball_index(g), std::invalid_argument);
}
