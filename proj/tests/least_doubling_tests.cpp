#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "doubling/ball_index.hpp"
#include "doubling/doubling_constant.hpp"
#include "doubling/graph.hpp"
#include "doubling/least_doubling.hpp"
#include "doubling/measure.hpp"
#include "doubling/spectral.hpp"

using doubling::BallIndex;
using doubling::build_ball_index;
using doubling::doubling_constant;
using doubling::feasible_at;
using doubling::least_doubling;
using doubling::make_complete;
using doubling::make_cycle;
using doubling::make_path;
using doubling::make_star;

TEST_CASE("feasibility thresholds around known optima") {
  BallIndex p3 = build_ball_index(make_path(3));
  auto at3 = feasible_at(p3, 3.0);
  REQUIRE(at3.has_value());
  REQUIRE(doubling_constant(p3, *at3).c_mu <= 3.0 + 1e-7);
  REQUIRE_FALSE(feasible_at(p3, 2.0).has_value());

  BallIndex k4 = build_ball_index(make_complete(4));
  REQUIRE_FALSE(feasible_at(k4, 3.9).has_value());
  REQUIRE(feasible_at(k4, 4.0).has_value());
}

TEST_CASE("a witness stays feasible at any larger threshold") {
  BallIndex p6 = build_ball_index(make_path(6));
  auto res = least_doubling(p6);
  auto again = feasible_at(p6, res.t_high + 0.1);
  REQUIRE(again.has_value());
  REQUIRE(doubling_constant(p6, *again).c_mu <= res.t_high + 0.1 + 1e-7);
}

TEST_CASE("least doubling constant of small paths matches the closed form") {
  for (int n = 2; n <= 8; ++n) {
    BallIndex idx = build_ball_index(make_path(n));
    auto res = least_doubling(idx);
    REQUIRE_THAT(res.c_estimate,
                 Catch::Matchers::WithinAbs(doubling::c0_path_closed_form(n), 1e-7));
  }
}

TEST_CASE("least doubling constant of named families") {
  auto star = least_doubling(build_ball_index(make_star(10)));
  REQUIRE_THAT(star.c_estimate, Catch::Matchers::WithinAbs(4.0, 1e-6));

  auto cyc = least_doubling(build_ball_index(make_cycle(6)));
  REQUIRE_THAT(cyc.c_estimate, Catch::Matchers::WithinAbs(3.0, 1e-6));

  auto comp = least_doubling(build_ball_index(make_complete(5)));
  REQUIRE_THAT(comp.c_estimate, Catch::Matchers::WithinAbs(5.0, 1e-6));
}

TEST_CASE("least doubling constant of a longer path") {
  auto res = least_doubling(build_ball_index(make_path(9)));
  REQUIRE_THAT(res.c_estimate, Catch::Matchers::WithinAbs(2.9051661677540188, 1e-6));
}

TEST_CASE("bisection bracket and witness are coherent") {
  BallIndex p7 = build_ball_index(make_path(7));
  double tol = 1e-10;
  auto res = least_doubling(p7, tol);
  REQUIRE(res.t_high - res.t_low <= tol * (1.0 + 1e-12));
  REQUIRE(res.t_low <= res.c_estimate);
  REQUIRE(res.c_estimate <= res.t_high);
  REQUIRE(res.iterations > 0);
  REQUIRE(res.constraint_count > 0);
  REQUIRE(res.minimizer.size() == 7);
  // The witness comes from the last feasible threshold.
  REQUIRE(doubling_constant(p7, res.minimizer).c_mu <= res.t_high + 1e-7);
}

TEST_CASE("symmetrizing a path minimizer keeps it optimal") {
  BallIndex p10 = build_ball_index(make_path(10));
  auto res = least_doubling(p10);
  auto sym = doubling::symmetrize(res.minimizer);
  REQUIRE(doubling_constant(p10, sym).c_mu <= res.t_high + 1e-7);
}

TEST_CASE("two-vertex graphs short-circuit at the global lower bound") {
  auto res = least_doubling(build_ball_index(make_path(2)));
  REQUIRE(res.c_estimate == 2.0);
  REQUIRE(res.iterations == 0);
  REQUIRE(doubling_constant(build_ball_index(make_path(2)), res.minimizer).c_mu <= 2.0 + 1e-9);
}

TEST_CASE("least doubling input validation") {
  REQUIRE_THROWS_AS(least_doubling(build_ball_index(make_path(1))), std::invalid_argument);
  BallIndex p3 = build_ball_index(make_path(3));
  REQUIRE_THROWS_AS(least_doubling(p3, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(least_doubling(p3, -1e-3), std::invalid_argument);
}
