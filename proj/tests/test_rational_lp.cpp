#include <random>

#include "doctest.h"
#include "sclcone/rational_lp.hpp"

using namespace sclcone;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

LpProblem problem(std::vector<RationalVector> A, RationalVector b, RationalVector c) {
  return LpProblem{std::move(A), std::move(b), std::move(c)};
}

}  // namespace

TEST_CASE("single variable") {
  LpProblem p = problem({{q(1)}}, {q(1)}, {q(1)});
  LpOutcome o = solve(p);
  REQUIRE(o.status == LpStatus::Optimal);
  CHECK(o.value == 1);
  CHECK(check_certificate(p, o));
}

TEST_CASE("split a third") {
  LpProblem p = problem({{q(1), q(1)}}, {q(1, 3)}, {q(1), q(1)});
  LpOutcome o = solve(p);
  REQUIRE(o.status == LpStatus::Optimal);
  CHECK(o.value == q(1, 3));
  REQUIRE(o.y.size() == 1);
  CHECK(o.y[0] == 1);
  CHECK(check_certificate(p, o));
}

TEST_CASE("no constraints is unbounded") {
  LpProblem p = problem({}, {}, {q(1)});
  LpOutcome o = solve(p);
  CHECK(o.status == LpStatus::Unbounded);
  CHECK(check_certificate(p, o));
}

TEST_CASE("unbounded with a ray") {
  // x1 - x2 = 1, maximize x1
  LpProblem p = problem({{q(1), q(-1)}}, {q(1)}, {q(1), q(0)});
  LpOutcome o = solve(p);
  REQUIRE(o.status == LpStatus::Unbounded);
  CHECK(check_certificate(p, o));
  CHECK(o.ray[0] > 0);
}

TEST_CASE("infeasible with a Farkas vector") {
  LpProblem p = problem({{q(1), q(1)}, {q(1), q(1)}}, {q(1), q(2)}, {q(1), q(0)});
  LpOutcome o = solve(p);
  REQUIRE(o.status == LpStatus::Infeasible);
  CHECK(check_certificate(p, o));

  LpProblem neg = problem({{q(1)}}, {q(-1)}, {q(0)});
  LpOutcome n = solve(neg);
  REQUIRE(n.status == LpStatus::Infeasible);
  CHECK(check_certificate(neg, n));
}

TEST_CASE("perturbed certificates are rejected") {
  LpProblem p = problem({{q(1), q(2), q(0)}, {q(0), q(1), q(1)}}, {q(4), q(3)}, {q(1), q(3), q(1)});
  LpOutcome o = solve(p);
  REQUIRE(o.status == LpStatus::Optimal);
  CHECK(o.value == 7);
  REQUIRE(check_certificate(p, o));

  LpOutcome bad_y = o;
  bad_y.y[0] += 1;
  CHECK_FALSE(check_certificate(p, bad_y));

  LpOutcome bad_value = o;
  bad_value.value += q(1, 1000000);
  CHECK_FALSE(check_certificate(p, bad_value));

  LpOutcome bad_x = o;
  bad_x.x[0] += q(1, 1000000);
  CHECK_FALSE(check_certificate(p, bad_x));
}

TEST_CASE("feasibility test") {
  LpProblem p = problem({{q(1), q(2)}, {q(3), q(1)}}, {q(5), q(5)}, {q(1), q(1)});
  LpOutcome o = solve(p);
  REQUIRE(o.status == LpStatus::Optimal);
  CHECK(feasible(o.x, p));
  CHECK_FALSE(feasible(RationalVector{q(-1), q(3)}, p));
  CHECK_FALSE(feasible(RationalVector{q(0), q(0)}, p));
  CHECK_THROWS_AS(feasible(RationalVector{q(0)}, p), std::invalid_argument);
}

TEST_CASE("malformed problems") {
  LpProblem p = problem({{q(1), q(1)}}, {q(1), q(2)}, {q(1), q(1)});
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_THROWS_AS(solve(p), std::invalid_argument);
}

TEST_CASE("degenerate duplicated constraints terminate") {
  // Classic cycling example (Beale) written with slacks, then every row duplicated.
  std::vector<RationalVector> A = {
      {q(1, 4), q(-8), q(-1), q(9), q(1), q(0), q(0)},
      {q(1, 2), q(-12), q(-1, 2), q(3), q(0), q(1), q(0)},
      {q(0), q(0), q(1), q(0), q(0), q(0), q(1)},
  };
  RationalVector b = {q(0), q(0), q(1)};
  RationalVector c = {q(3, 4), q(-20), q(1, 2), q(-6), q(0), q(0), q(0)};
  for (int copies = 1; copies <= 3; ++copies) {
    LpProblem p;
    for (int k = 0; k < copies; ++k) {
      for (std::size_t i = 0; i < A.size(); ++i) {
        p.A.push_back(A[i]);
        p.b.push_back(b[i]);
      }
    }
    p.c = c;
    LpOutcome o = solve(p);
    REQUIRE(o.status == LpStatus::Optimal);
    CHECK(o.value == q(5, 4));
    CHECK(check_certificate(p, o));
  }
}

TEST_CASE("random problems: certificates and determinism") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-4, 6), dim(1, 6);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = dim(rng), n = dim(rng) + 1;
    LpProblem p;
    p.A.assign(m, RationalVector(n));
    p.b.assign(m, 0);
    p.c.assign(n, 0);
    for (auto& row : p.A)
      for (auto& x : row) x = entry(rng);
    for (auto& x : p.b) x = entry(rng);
    for (auto& x : p.c) x = entry(rng);
    LpOutcome first = solve(p);
    CHECK(check_certificate(p, first));
    LpOutcome second = solve(p);
    CHECK(first.status == second.status);
    CHECK(first.x == second.x);
    CHECK(first.y == second.y);
    optimal += first.status == LpStatus::Optimal;
    infeasible += first.status == LpStatus::Infeasible;
    unbounded += first.status == LpStatus::Unbounded;
  }
  CHECK(optimal > 0);
  CHECK(infeasible > 0);
  CHECK(unbounded > 0);
}

TEST_CASE("columns added after a solve") {
  LpProblem p = problem({{q(1), q(1)}}, {q(2)}, {q(1), q(2)});
  Simplex s(p);
  LpOutcome o = s.solve();
  REQUIRE(o.status == LpStatus::Optimal);
  CHECK(o.value == 4);
  RationalVector col{q(1)};
  s.add_column(col, q(5));
  LpOutcome more = s.solve();
  REQUIRE(more.status == LpStatus::Optimal);
  CHECK(more.value == 10);
  CHECK(check_certificate(s.problem(), more));

  LpProblem fresh = s.problem();
  CHECK(solve(fresh).value == 10);
}

TEST_CASE("json dump") {
  LpProblem p = problem({{q(1, 2)}}, {q(1)}, {q(1)});
  std::string js = to_json(p);
  CHECK(js.find("1/2") != std::string::npos);
}
