#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "body_samples.hpp"
#include "illum/body.hpp"

using namespace illum;
using illum::testing::random_body;
using illum::testing::random_rat;

namespace {

Vec v3(const Rat& a, const Rat& b, const Rat& c) { return Vec{a, b, c}; }

SymmetricBody b1_cube_diag(std::size_t n) {
  return SymmetricBody(n, {basis(n, 0), scale(Rat(1, 2), ones(n))}, one_symmetric());
}

SymmetricBody cross_polytope(std::size_t n) {
  return SymmetricBody(n, {basis(n, 0)}, one_symmetric());
}

SymmetricBody cube(std::size_t n) {
  return SymmetricBody(n, {ones(n)}, one_unconditional());
}

}  // namespace

TEST_CASE("sign profile fields") {
  auto p = sign_profile(Vec{Rat(1, 2), Rat(0), Rat(-1, 2), Rat(1, 4)});
  CHECK(p.zero_set == std::vector<std::size_t>{1});
  CHECK(p.support == std::vector<std::size_t>{0, 2, 3});
  CHECK(p.max_set == std::vector<std::size_t>{0, 2});
  CHECK(p.pattern == std::vector<int>{1, 0, -1, 1});
  CHECK(sign_profile(vec_zero(3)).max_set.empty());
}

TEST_CASE("orbit expansion sizes") {
  CHECK(orbit_expand(v3(1, 0, 0), one_symmetric()).size() == 6);
  CHECK(orbit_expand(v3(Rat(1, 2), Rat(1, 2), Rat(1, 2)), one_symmetric()).size() == 8);

  Vec g(9, Rat(0));
  for (int i = 0; i < 4; ++i) g[i] = Rat(1, 2);
  CHECK(orbit_size_estimate(g, one_symmetric()) == 2016);
  CHECK(orbit_expand(g, one_symmetric()).size() == 2016);

  SymmetricBody b2(9, {basis(9, 0), g}, one_symmetric());
  CHECK(b2.orbit_points().size() == 2034);
}

TEST_CASE("orbit cap flips body to symbolic") {
  Vec g(25, Rat(0));
  for (int i = 0; i < 12; ++i) g[i] = Rat(1, 3);
  SymmetricBody b(25, {g}, one_symmetric());
  CHECK(b.symbolic_only());
  CHECK(b.orbit_size_bound() > 1000000);
  CHECK_THROWS_AS(b.orbit_points(), OrbitTooLarge);
  CHECK_THROWS_AS(b.vertices(), OrbitTooLarge);

  Vec u(25, Rat(0));
  for (int i = 0; i < 6; ++i) u[i] = 1;
  CHECK(b.support_value(u) == 2);
}

TEST_CASE("degenerate generator sets are rejected") {
  CHECK_THROWS_AS(SymmetricBody(3, {vec_zero(3)}, one_symmetric()), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricBody(2, {Vec{Rat(1), Rat(0)}}, one_unconditional()),
                  std::invalid_argument);
  CHECK_THROWS_AS(raw_polytope(2, {Vec{Rat(1), Rat(1)}, Vec{Rat(2), Rat(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymmetricBody(3, {}, one_symmetric()), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricBody(3, {v3(1, 0, 0), Vec{Rat(1)}}, one_symmetric()),
                  std::invalid_argument);
}

TEST_CASE("support values") {
  auto b1 = b1_cube_diag(3);
  CHECK(b1.support_value(v3(1, 1, 0)) == 1);
  CHECK(b1.support_value(v3(1, 1, 1)) == Rat(3, 2));
  CHECK(b1.support_value(v3(-2, 1, 0)) == 2);

  auto c = cube(4);
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Vec u(4);
    Rat l1 = 0;
    for (auto& x : u) {
      x = random_rat(rng, -8, 8);
      l1 += rat_abs(x);
    }
    CHECK(c.support_value(u) == l1);
  }
}

TEST_CASE("support matches brute force over the orbit") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto b = random_body(rng, 4, t % 2 ? SymKind::OneSymmetric : SymKind::OneUnconditional);
    Vec u(4);
    for (auto& x : u) x = random_rat(rng, -6, 6);
    Rat brute;
    bool first = true;
    for (const auto& v : b.orbit_points()) {
      Rat d = dot(v, u);
      if (first || d > brute) brute = d, first = false;
    }
    CHECK(b.support_value(u) == brute);
    auto [col, val] = b.price(u);
    CHECK(val == brute);
    CHECK(dot(col, u) == brute);
  }
}

TEST_CASE("gauge on the reference bodies") {
  auto b1 = b1_cube_diag(3);
  CHECK(b1.gauge(basis(3, 0)) == 1);
  CHECK(b1.gauge(ones(3)) == 2);
  CHECK(cross_polytope(3).gauge(v3(Rat(1, 2), Rat(1, 3), Rat(0))) == Rat(5, 6));
  CHECK(b1.gauge(vec_zero(3)) == 0);
}

TEST_CASE("membership and interior") {
  auto b1 = b1_cube_diag(3);
  CHECK(b1.is_member(v3(Rat(1, 2), Rat(1, 2), Rat(0))));
  CHECK_FALSE(b1.is_interior(v3(Rat(1, 2), Rat(1, 2), Rat(0))));
  CHECK(b1.is_interior(v3(Rat(1, 4), Rat(1, 4), Rat(1, 4))));
  CHECK_FALSE(b1.is_member(v3(Rat(3, 2), Rat(0), Rat(0))));
  CHECK(b1.is_interior(vec_zero(3)));
}

TEST_CASE("vertex enumeration") {
  auto vb1 = b1_cube_diag(3).vertices();
  CHECK(vb1.size() == 14);

  SymmetricBody shallow(3, {basis(3, 0), scale(Rat(1, 4), ones(3))}, one_symmetric());
  auto vs = shallow.vertices();
  CHECK(vs.size() == 6);
  for (const auto& v : vs) CHECK(abs_desc(v) == v3(1, 0, 0));

  CHECK(cube(4).vertices().size() == 16);
}

TEST_CASE("vertices are closed under the symmetry group") {
  auto verts = b1_cube_diag(3).vertices();
  std::set<Vec> vs(verts.begin(), verts.end());
  for (const auto& v : verts)
    for (const auto& w : orbit_expand(v, one_symmetric())) CHECK(vs.count(w) == 1);
}

TEST_CASE("normalization to unit basis gauges") {
  SymmetricBody raw(3, {scale(Rat(2), basis(3, 0)), ones(3)}, one_symmetric());
  CHECK(raw.gauge(basis(3, 0)) == Rat(1, 2));
  auto n = normalize_to_Sn(raw);
  CHECK(n.generators() == std::vector<Vec>{basis(3, 0), scale(Rat(1, 2), ones(3))});
  for (std::size_t i = 0; i < 3; ++i) CHECK(n.gauge(basis(3, i)) == 1);

  auto b1 = b1_cube_diag(3);
  CHECK(normalize_to_Sn(b1).generators() == b1.generators());

  SymmetricBody u(2, {Vec{Rat(2), Rat(1)}}, one_unconditional());
  auto nu = normalize_to_Sn(u);
  CHECK(nu.generators() == std::vector<Vec>{Vec{Rat(1), Rat(1)}});
  CHECK(nu.gauge(basis(2, 0)) == 1);
  CHECK(nu.gauge(basis(2, 1)) == 1);
}

TEST_CASE("body invariants") {
  auto ci = cube(4).invariants();
  CHECK(ci.m == 4);
  CHECK(ci.dist == 1);
  CHECK(ci.theta == 1);
  CHECK(ci.eta == 0);

  auto bi = b1_cube_diag(3).invariants();
  CHECK(bi.m == 1);
  CHECK(bi.dist == 2);
  CHECK(bi.theta == Rat(1, 2));
  CHECK(bi.eta == Rat(1, 10));

  auto xi = cross_polytope(5).invariants();
  CHECK(xi.m == 1);
  CHECK(xi.dist == 5);
}

TEST_CASE("alpha symmetry of a tilted parallelogram") {
  auto K = raw_polytope(2, {Vec{Rat(1), Rat(1, 10)}, Vec{Rat(-1), Rat(-1, 10)},
                            Vec{Rat(1, 10), Rat(9, 10)}, Vec{Rat(-1, 10), Rat(-9, 10)}});
  CHECK(K.vertices().size() == 4);
  CHECK(K.gauge(Vec{Rat(1, 10), Rat(1)}) == Rat(100, 89));
  CHECK_FALSE(is_alpha_symmetric(K, 1));
  CHECK(is_alpha_symmetric(K, Rat(120, 89)));
  CHECK_FALSE(is_alpha_symmetric(K, Rat(119, 89)));

  CHECK(symmetrized_gauge(K, Vec{Rat(1), Rat(0)}) == Rat(110, 89));
  CHECK(symmetrized_gauge(K, Vec{Rat(1), Rat(1, 10)}) == Rat(120, 89));
  CHECK(symmetrized_gauge(K, vec_zero(2)) == 0);
}

TEST_CASE("symmetrized gauge of a symmetric body is the gauge") {
  auto b1 = b1_cube_diag(3);
  CHECK(is_alpha_symmetric(b1, 1));
  for (const Vec& x : {v3(1, 1, 1), v3(Rat(1, 2), Rat(-1, 3), Rat(0))})
    CHECK(symmetrized_gauge(b1, x) == b1.gauge(x));
}

TEST_CASE("gauge homogeneity") {
  std::mt19937 rng(23);
  for (int t = 0; t < 25; ++t) {
    auto b = random_body(rng, 3, t % 2 ? SymKind::OneSymmetric : SymKind::OneUnconditional);
    Vec p(3);
    for (auto& x : p) x = random_rat(rng, -5, 5);
    Rat c = random_rat(rng, 1, 9);
    CHECK(b.gauge(scale(c, p)) == c * b.gauge(p));
  }
}

TEST_CASE("gauge is invariant under signed permutations") {
  std::mt19937 rng(29);
  auto group = full_signed_perms(4);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int t = 0; t < 20; ++t) {
    auto b = random_body(rng, 4, SymKind::OneSymmetric);
    Vec p(4);
    for (auto& x : p) x = random_rat(rng, -4, 4);
    CHECK(b.gauge(illum::apply(group[pick(rng)], p)) == b.gauge(p));
  }
}

TEST_CASE("entrywise domination respects membership and interior") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(0, 7);
  for (int t = 0; t < 25; ++t) {
    auto b = random_body(rng, 5, t % 2 ? SymKind::OneSymmetric : SymKind::OneUnconditional);
    Vec p(5);
    for (auto& x : p) x = random_rat(rng, -4, 4);
    Rat g = b.gauge(p);
    if (sgn(g) == 0) continue;
    Vec x = scale(frac(num(rng), 8) / g, p);
    REQUIRE(b.is_member(x));
    Vec weak(5), strict(5);
    for (std::size_t i = 0; i < 5; ++i) {
      weak[i] = x[i] * frac(num(rng), 7);
      strict[i] = x[i] * frac(num(rng), 8);
    }
    CHECK(b.is_member(weak));
    CHECK(b.is_interior(strict));
  }
}

TEST_CASE("support duality across the vertex set") {
  std::mt19937 rng(37);
  for (int t = 0; t < 20; ++t) {
    auto b = random_body(rng, 4, t % 2 ? SymKind::OneSymmetric : SymKind::OneUnconditional);
    Vec u(4);
    for (auto& x : u) x = random_rat(rng, -5, 5);
    Rat h = b.support_value(u);
    bool tight = false;
    for (const auto& v : b.vertices()) {
      CHECK(dot(v, u) <= h);
      if (dot(v, u) == h) tight = true;
    }
    CHECK(tight);
  }
}

TEST_CASE("column generation agrees with the full-orbit gauge") {
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + t % 4;
    auto b = random_body(rng, n, t % 2 ? SymKind::OneSymmetric : SymKind::OneUnconditional);
    Vec p(n);
    for (auto& x : p) x = random_rat(rng, -5, 5);
    CHECK(b.gauge(p, GaugeMode::FullOrbit) == b.gauge(p, GaugeMode::ColumnGeneration));
  }
}

TEST_CASE("subcube dimension halves once the cube distance reaches two") {
  std::mt19937 rng(43);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 3 + t % 3;
    auto b = normalize_to_Sn(random_body(rng, n, SymKind::OneSymmetric));
    auto inv = b.invariants();
    CHECK(inv.m >= 1);
    CHECK(inv.m <= n);
    CHECK(inv.dist >= 1);
    CHECK(inv.theta == 1 / inv.dist);
    if (inv.dist >= 2) CHECK(2 * inv.m <= n);
  }
}
