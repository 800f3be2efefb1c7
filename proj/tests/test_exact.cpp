#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "illum/linprog.hpp"
#include "illum/rational.hpp"
#include "lp_oracle.hpp"

using namespace illum;

TEST_CASE("scalar arithmetic is exact and canonical") {
  CHECK(parse_rat("1/3") + parse_rat("1/6") == parse_rat("1/2"));
  CHECK(parse_rat("2/3") * parse_rat("3/4") == parse_rat("1/2"));
  CHECK(parse_rat("1/5") < parse_rat("1/4"));
  Rat r = parse_rat("3/6");
  CHECK(rat_str(r) == "1/2");
  CHECK(rat_str(parse_rat("-4/2")) == "-2");
  CHECK(rat_str(Rat(7)) == "7");
}

TEST_CASE("rational parser accepts p/q and integers only") {
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK_THROWS(parse_rat("0.5"));
  CHECK_THROWS(parse_rat("1e3"));
  CHECK_THROWS(parse_rat(""));
  CHECK_THROWS(parse_rat(" 1"));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("1/-2"));
  CHECK_THROWS(parse_rat("--1"));
  CHECK_THROWS(parse_rat("1/2/3"));
}

TEST_CASE("scalar round trip ((a+b)-b) == a randomized") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    CHECK((a + b) - b == a);
    if (sgn(b) != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("vector helpers") {
  Vec v = {Rat(3), Rat(-1, 2), Rat(0)};
  CHECK(linf(v) == Rat(3));
  CHECK(abs_desc(v) == Vec{Rat(3), Rat(1, 2), Rat(0)});
  CHECK(sign_pattern(v) == std::vector<int>{1, -1, 0});
  CHECK(dot(v, basis(3, 0)) == Rat(3));
  CHECK(is_zero(vec_zero(4)));
  CHECK(!is_zero(v));
  CHECK(sorted_dot(Vec{Rat(1), Rat(0)}, Vec{Rat(-2), Rat(5)}) == Rat(5));
}

static LpProblem cross_gauge_lp() {
  // minimize sum(mu) s.t. mu1*(1,0)+mu2*(-1,0)+mu3*(0,1)+mu4*(0,-1) = (1,0)
  LpProblem p;
  p.c = ones(4);
  p.rows = {Vec{Rat(1), Rat(-1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1), Rat(-1)}};
  p.b = {Rat(1), Rat(0)};
  return p;
}

TEST_CASE("lp_solve: cross-polytope vertex gauge") {
  auto p = cross_gauge_lp();
  auto s = lp_solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == Rat(1));
  CHECK(s.x == Vec{Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(verify_lp_optimal(p, s));
}

TEST_CASE("lp_solve: representation of (1/2,1/2) costs 1") {
  LpProblem p;
  p.c = ones(4);
  p.rows = {Vec{Rat(1), Rat(-1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1), Rat(-1)}};
  p.b = {Rat(1, 2), Rat(1, 2)};
  auto s = lp_solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == Rat(1));
  CHECK(verify_lp_optimal(p, s));
  auto oracle = illum::testing::lp_oracle(p);
  REQUIRE(oracle.feasible);
  CHECK(oracle.objective == Rat(1));
}

TEST_CASE("lp_solve: infeasible equality detected with Farkas certificate") {
  LpProblem p;
  p.c = {Rat(0)};
  p.rows = {Vec{Rat(0)}};
  p.b = {Rat(1)};
  auto s = lp_solve(p);
  REQUIRE(s.status == LpStatus::Infeasible);
  REQUIRE(s.farkas.size() == 1);
  CHECK(s.farkas[0] * Rat(1) > 0);
}

TEST_CASE("lp_solve: unbounded detection") {
  LpProblem p;  // minimize -x1 s.t. x1 - x2 = 0
  p.c = {Rat(-1), Rat(0)};
  p.rows = {Vec{Rat(1), Rat(-1)}};
  p.b = {Rat(0)};
  auto s = lp_solve(p);
  CHECK(s.status == LpStatus::Unbounded);
}

TEST_CASE("lp_solve: variable lower bounds honored") {
  // minimize x1 + x2 s.t. x1 + x2 = 3, x >= (1, -2)
  LpProblem p;
  p.c = {Rat(1), Rat(2)};
  p.rows = {Vec{Rat(1), Rat(1)}};
  p.b = {Rat(3)};
  p.lower = {Rat(1), Rat(-2)};
  auto s = lp_solve(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x == Vec{Rat(5), Rat(-2)});  // x2 rides its lower bound
  CHECK(s.objective == Rat(1));
  CHECK(verify_lp_optimal(p, s));
  auto oracle = illum::testing::lp_oracle(p);
  REQUIRE(oracle.feasible);
  CHECK(s.objective == oracle.objective);
}

TEST_CASE("lp_solve: dimension mismatch raises") {
  LpProblem p;
  p.c = {Rat(1)};
  p.rows = {Vec{Rat(1), Rat(2)}};
  p.b = {Rat(1)};
  CHECK_THROWS(lp_solve(p));
}

TEST_CASE("lp_solve agrees with brute-force vertex enumeration on random LPs") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<int> val(-3, 3), den(1, 2), dim_n(1, 6), dim_m(1, 4);
  int optimal_seen = 0, infeasible_seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    std::size_t n = dim_n(rng), m = dim_m(rng);
    LpProblem p;
    p.c.resize(n);
    for (auto& x : p.c) x = Rat(val(rng), den(rng)), x.canonicalize();
    p.rows.assign(m, Vec(n));
    for (auto& row : p.rows)
      for (auto& x : row) x = Rat(val(rng), den(rng)), x.canonicalize();
    p.b.resize(m);
    for (auto& x : p.b) x = Rat(val(rng), den(rng)), x.canonicalize();
    auto s = lp_solve(p);
    auto oracle = illum::testing::lp_oracle(p);
    if (s.status == LpStatus::Optimal) {
      ++optimal_seen;
      REQUIRE(oracle.feasible);
      CHECK(s.objective == oracle.objective);
      CHECK(verify_lp_optimal(p, s));
    } else if (s.status == LpStatus::Infeasible) {
      ++infeasible_seen;
      CHECK(!oracle.feasible);
      // Farkas: y.b > 0 and A^T y <= 0
      REQUIRE(s.farkas.size() == m);
      Rat yb = dot(s.farkas, p.b);
      CHECK(yb > 0);
      for (std::size_t j = 0; j < n; ++j) {
        Rat col = 0;
        for (std::size_t i = 0; i < m; ++i) col += p.rows[i][j] * s.farkas[i];
        CHECK(sgn(col) <= 0);
      }
    }
    // Unbounded: oracle cannot certify; skipped (covered by the fixed case).
  }
  CHECK(optimal_seen > 50);
  CHECK(infeasible_seen > 50);
}
