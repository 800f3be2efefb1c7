#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "illum/rational.hpp"
#include "illum/scenarios.hpp"

using illum::ClaimOptions;
using illum::ClaimResult;
using illum::NamedBody;
using illum::Rat;
using illum::Vec;
using illum::Verdict;
using illum::frac;

namespace {

bool has_fact(const ClaimResult& r, const std::string& needle) {
  return std::any_of(r.facts.begin(), r.facts.end(), [&](const std::string& f) {
    return f.find(needle) != std::string::npos;
  });
}

// Every attached certificate must re-check against the body it names (or the
// claim's own body when unnamed).
bool certs_revalidate(const ClaimResult& r) {
  std::map<std::string, NamedBody> cache;
  for (const auto& c : r.certs) {
    const std::string& id = c.body_id.empty() ? r.body_id : c.body_id;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, illum::body_from_id(id)).first;
    if (!illum::revalidate(it->second.body, c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("catalog bodies and id round-trips") {
  NamedBody b13 = illum::named_b1(3);
  CHECK(b13.id == "B1(3)");
  CHECK(b13.body.dim() == 3);
  CHECK(b13.body.vertices().size() == 14);

  // In the plane the half-ones orbit sits on the cross-polytope edges.
  CHECK(illum::named_b1(2).body.vertices().size() == 4);

  CHECK(illum::named_b2().body.dim() == 9);
  NamedBody b3 = illum::named_b3();
  CHECK(b3.body.dim() == 25);
  CHECK(b3.body.symbolic_only());
  NamedBody b44 = illum::named_b4(4);
  CHECK(b44.id == "B4(4)");
  CHECK(b44.body.invariants().dist == frac(16, 9));
  CHECK(illum::named_cross_polytope(3).id == "CrossPolytope(3)");
  CHECK(illum::named_cube(4).id == "Cube(4)");

  for (const std::string& id :
       {std::string("B1(4)"), std::string("B2"), std::string("B3"), std::string("B4(5)"),
        std::string("CrossPolytope(3)"), std::string("Cube(3)"),
        std::string("Random(3,17,mid)")}) {
    NamedBody nb = illum::body_from_id(id);
    CHECK(nb.id == id);
  }
  CHECK_THROWS_AS((void)illum::body_from_id("B9(3)"), std::invalid_argument);
  CHECK_THROWS_AS((void)illum::body_from_id("B1(two)"), std::invalid_argument);
  CHECK_THROWS_AS((void)illum::named_b1(1), std::invalid_argument);
  CHECK_THROWS_AS((void)illum::named_b4(3), std::invalid_argument);
}

TEST_CASE("random bodies: determinism and profile regimes") {
  NamedBody a = illum::random_symmetric(4, 99, "mid");
  NamedBody b = illum::random_symmetric(4, 99, "mid");
  CHECK(a.id == b.id);
  CHECK(a.body.generators() == b.body.generators());
  CHECK(a.body.gauge(illum::basis(4, 0)) == 1);

  bool some_differ = false;
  for (std::uint64_t s = 1; s <= 6; ++s) {
    NamedBody nc = illum::random_symmetric(3, s, "near-cube");
    Rat dist = nc.body.invariants().dist;
    CHECK(dist > 1);
    CHECK(dist < 2);
    NamedBody cl = illum::random_symmetric(3, s, "cross-like");
    CHECK(cl.body.invariants().dist >= 2);
    some_differ = some_differ || nc.body.generators() != illum::random_symmetric(3, s + 1, "near-cube").body.generators();
  }
  CHECK(some_differ);
  CHECK_THROWS_AS((void)illum::random_symmetric(3, 1, "planar"), std::invalid_argument);
  CHECK_THROWS_AS((void)illum::random_symmetric(7, 1, "mid"), std::invalid_argument);
}

TEST_CASE("revalidate accepts good records and rejects tampered ones") {
  NamedBody nb = illum::named_b1(3);
  illum::Certificate c;
  c.kind = illum::CertKind::Refutation;
  c.normal = Vec{Rat(1), Rat(1), Rat(0)};
  illum::CertRecord rec{"", illum::basis(3, 0), Vec{}, c};
  CHECK(illum::revalidate(nb.body, rec));
  rec.cert.normal = Vec{Rat(0), Rat(1), Rat(0)};  // supporting, but away from e_1
  CHECK_FALSE(illum::revalidate(nb.body, rec));
}

TEST_CASE("dimension-3 minimum over the ternary pool is 10") {
  ClaimResult r = illum::verify_b1_lower_bound(3);
  CHECK(r.confirmed());
  CHECK(r.body_id == "B1(3)");
  REQUIRE(r.cover_minimum.has_value());
  CHECK(r.cover_minimum->size == 10);
  CHECK(r.cover_minimum->exhausted);
  CHECK(has_fact(r, "pool=26"));
  CHECK(has_fact(r, "vertices=14"));
  CHECK(has_fact(r, "T2 covers=false"));
  CHECK(certs_revalidate(r));
  CHECK_THROWS_AS((void)illum::verify_b1_lower_bound(5), std::invalid_argument);
}

TEST_CASE("nine-dimensional half-support vertex analysis") {
  ClaimResult r = illum::verify_b2_claims();
  CHECK(r.confirmed());
  CHECK(has_fact(r, "normal family=90"));
  CHECK(has_fact(r, "refuted sparse (<=2 nonzero)=162"));
  CHECK(has_fact(r, "refuted dense (>=8 nonzero)=2816"));
  CHECK(has_fact(r, "unique single-coordinate illuminator=18"));
  CHECK(has_fact(r, "restricted minimum over the single-coordinate pool=18"));
  CHECK(certs_revalidate(r));
}

TEST_CASE("symbolic 25-dimensional class blocking") {
  ClaimResult r = illum::verify_b3_claims();
  CHECK(r.confirmed());
  CHECK(has_fact(r, "2/3-class normals=12320, failures=0"));
  CHECK(has_fact(r, "1/3-class normals=924, failures=0"));
  CHECK(has_fact(r, "window directions=6560, failures=0"));
  CHECK(has_fact(r, "sampled directions=2000, failures=0"));
  CHECK(certs_revalidate(r));
}

TEST_CASE("pole-heavy body: small dist yet the flat set fails") {
  ClaimResult r = illum::verify_b4_claims(4);
  CHECK(r.confirmed());
  CHECK(has_fact(r, "dist=16/9"));
  CHECK(has_fact(r, "T2 directions refuted at e1+(3/4)en=10/10"));
  CHECK(has_fact(r, "T1 covers=true"));
  CHECK(certs_revalidate(r));
}

TEST_CASE("cover checks on catalog bodies") {
  ClaimResult d13 = illum::theorem_d_check(illum::named_b1(3));
  CHECK(d13.confirmed());
  CHECK(has_fact(d13, "directions=8"));
  CHECK(certs_revalidate(d13));
  CHECK(illum::theorem_d_check(illum::named_cube(3)).confirmed());

  ClaimResult e13 = illum::theorem_e_check(illum::named_b1(3));
  CHECK(e13.confirmed());
  CHECK(has_fact(e13, "eta=1/10"));
  CHECK(has_fact(e13, "size=6"));
  ClaimResult ecube = illum::theorem_e_check(illum::named_cube(3));
  CHECK(ecube.verdict == Verdict::Skipped);
  CHECK(ecube.reason.find("dist = 1") != std::string::npos);

  CHECK(illum::thm41_check(illum::named_b1(3)).confirmed());
  ClaimResult t41cube = illum::thm41_check(illum::named_cube(3));
  CHECK(t41cube.verdict == Verdict::Skipped);
  CHECK(t41cube.reason.find("m = 3") != std::string::npos);

  CHECK(illum::thm44_check(illum::named_b1(4)).confirmed());
  CHECK(illum::thm44_check(illum::named_cube(4)).verdict == Verdict::Skipped);

  CHECK(illum::claim_f_check(illum::named_b4(4)).confirmed());
  ClaimResult fb1 = illum::claim_f_check(illum::named_b1(3));
  CHECK(fb1.verdict == Verdict::Skipped);
  CHECK(fb1.reason.find("dist = 2") != std::string::npos);
  CHECK(illum::claim_f_check(illum::named_cube(3)).verdict == Verdict::Skipped);
}

TEST_CASE("seeded suites at reduced scale") {
  ClaimResult d = illum::theorem_d_suite({3}, 5);
  CHECK(d.confirmed());
  CHECK(has_fact(d, "n=3: 5/5 bodies covered"));
  CHECK(certs_revalidate(d));

  ClaimResult e = illum::theorem_e_suite({3}, 5);
  CHECK(e.confirmed());
  CHECK(certs_revalidate(e));

  ClaimResult f = illum::claim_f_suite({3}, 4);
  CHECK(f.confirmed());
  CHECK(has_fact(f, "n=3: 4/4 in-regime bodies covered"));
  CHECK(certs_revalidate(f));

  ClaimResult lp = illum::lp_oracle_suite(40, 7);
  CHECK(lp.confirmed());
  CHECK(has_fact(lp, "equal=40"));

  ClaimResult al = illum::alpha_inclusion_suite(4, 11);
  CHECK(al.confirmed());
  CHECK(has_fact(al, "sampled points=48"));
}

TEST_CASE("combinatorial claims") {
  ClaimResult p = illum::prop35_claim();
  CHECK(p.confirmed());
  CHECK(has_fact(p, "n=10 method 2: missed patterns=0"));

  ClaimResult l52 = illum::lemma52_claim();
  CHECK(l52.confirmed());
  CHECK(has_fact(l52, "n=10: zero-coordinate misses=0, full-support misses=2"));

  ClaimResult l43 = illum::lemma43_claim();
  CHECK(l43.confirmed());
  CHECK(has_fact(l43, "n=200"));

  ClaimResult c = illum::census_claim();
  CHECK(c.confirmed());
  CHECK(has_fact(c, "n=10: full set 512 pairs"));
}

TEST_CASE("claim registry dispatch") {
  auto ids = illum::claim_ids();
  CHECK(ids.size() == 19);
  CHECK(std::find(ids.begin(), ids.end(), "b1.3.lower_bound") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "oracle.lp") != ids.end());

  ClaimResult c = illum::run_claim("census");
  CHECK(c.claim == "census");
  CHECK(c.confirmed());

  ClaimOptions opt;
  opt.n = 3;
  ClaimResult e = illum::run_claim("thmE", opt);
  CHECK(e.body_id == "B1(3)");
  CHECK(e.confirmed());

  ClaimOptions seeded;
  seeded.n = 3;
  seeded.seed = 12;
  seeded.profile = "near-cube";
  ClaimResult fr = illum::run_claim("claimF", seeded);
  CHECK(fr.body_id == "Random(3,12,near-cube)");
  CHECK(fr.confirmed());

  ClaimResult b4 = illum::run_claim("b4");
  CHECK(b4.body_id == "B4(4)");

  CHECK_THROWS_AS((void)illum::run_claim("thmZ"), std::invalid_argument);
  CHECK(illum::verdict_name(Verdict::Skipped) == "skipped-with-reason");
}
