#include "illum/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "illum/linprog.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace illum {
namespace {

using njson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

njson vec_json(const Vec& v) {
  njson a = njson::array();
  for (const auto& c : v) a.push_back(rat_str(c));
  return a;
}

Vec parse_vec_arg(const std::string& s, const std::string& flag) {
  Vec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument(flag + ": empty coordinate in \"" + s + "\"");
    try {
      out.push_back(parse_rat(tok.substr(b, e - b + 1)));
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument(flag + ": " + ex.what());
    }
  }
  if (out.empty()) throw std::invalid_argument(flag + ": no coordinates in \"" + s + "\"");
  return out;
}

[[noreturn]] void bad_body(const std::string& path, const std::string& what) {
  throw std::invalid_argument("body file " + path + ": " + what);
}

njson tool_header(const std::string& command, njson params) {
  njson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["parameters"] = std::move(params);
  return j;
}

njson cert_json(const Vec& x, const Vec& d, const Certificate& c, const std::string& body_id) {
  njson j;
  if (!body_id.empty()) j["body"] = body_id;
  j["vertex"] = vec_json(x);
  if (!d.empty()) j["direction"] = vec_json(d);
  if (c.kind == CertKind::Witness) {
    j["witness"] = njson{{"step", rat_str(c.step)}, {"gauge", rat_str(c.interior_gauge)}};
  } else {
    j["refutation"] = njson{{"normal", vec_json(c.normal)}, {"dot", rat_str(c.inner_product)}};
  }
  return j;
}

njson claim_report(const ClaimResult& r, njson params, bool timing) {
  njson j = tool_header("verify-paper", std::move(params));
  j["claim"] = r.claim;
  if (!r.body_id.empty()) j["body"] = r.body_id;
  j["verdict"] = verdict_name(r.verdict);
  j["reason"] = r.reason;
  j["facts"] = r.facts;
  njson certs = njson::array();
  for (const auto& c : r.certs)
    certs.push_back(cert_json(c.x, c.d, c.cert, c.body_id.empty() ? r.body_id : c.body_id));
  j["certificates"] = std::move(certs);
  njson covers = njson::array();
  for (const auto& cv : r.covers)
    covers.push_back(njson{{"body", cv.body_id},
                           {"set", cv.set_id},
                           {"covers", cv.covers},
                           {"vertices", cv.outcomes.size()},
                           {"uncovered", cv.uncovered.size()}});
  j["covers"] = std::move(covers);
  if (r.cover_minimum) {
    const MinCover& m = *r.cover_minimum;
    njson mj;
    mj["feasible"] = m.feasible;
    mj["exhausted"] = m.exhausted;
    mj["size"] = m.size;
    mj["nodes"] = m.nodes;
    j["minimum"] = std::move(mj);
  }
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

int emit(const njson& j, const std::string& out_path, std::ostream& out) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f << text;
  }
  return 0;
}

}  // namespace

SymmetricBody load_body_file(const std::string& path, std::size_t orbit_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad_body(path, "cannot open");
  njson j;
  try {
    j = njson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad_body(path, e.what());  // nlohmann reports line and column
  }
  if (!j.is_object()) bad_body(path, "top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    bad_body(path, "dim: expected an integer");
  long dim = j["dim"].get<long>();
  if (dim < 1 || dim > 64) bad_body(path, "dim: out of range [1, 64]");
  if (!j.contains("symmetry") || !j["symmetry"].is_string())
    bad_body(path, "symmetry: expected a string");
  std::string sym = j["symmetry"].get<std::string>();
  SymmetryClass cls = one_symmetric();
  if (sym == "one_unconditional")
    cls = one_unconditional();
  else if (sym != "one_symmetric")
    bad_body(path, "symmetry: expected \"one_symmetric\" or \"one_unconditional\", got \"" +
                       sym + "\"");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    bad_body(path, "generators: expected a nonempty array");
  std::vector<Vec> gens;
  for (std::size_t gi = 0; gi < j["generators"].size(); ++gi) {
    const njson& row = j["generators"][gi];
    std::string where = "generators[" + std::to_string(gi) + "]";
    if (!row.is_array() || row.size() != std::size_t(dim))
      bad_body(path, where + ": expected an array of length " + std::to_string(dim));
    Vec g(static_cast<std::size_t>(dim));
    for (std::size_t ci = 0; ci < row.size(); ++ci) {
      const njson& cell = row[ci];
      std::string cell_where = where + "[" + std::to_string(ci) + "]";
      std::string s;
      if (cell.is_string())
        s = cell.get<std::string>();
      else if (cell.is_number_integer())
        s = std::to_string(cell.get<long long>());
      else
        bad_body(path, cell_where + ": expected \"p/q\" or an integer, got " + cell.dump());
      try {
        g[ci] = parse_rat(s);
      } catch (const std::invalid_argument& e) {
        bad_body(path, cell_where + ": " + e.what());
      }
    }
    gens.push_back(std::move(g));
  }
  bool symbolic = false;
  if (j.contains("symbolic_only")) {
    if (!j["symbolic_only"].is_boolean()) bad_body(path, "symbolic_only: expected a boolean");
    symbolic = j["symbolic_only"].get<bool>();
  }
  return SymmetricBody(std::size_t(dim), std::move(gens), cls, symbolic, orbit_cap);
}

void save_body_file(const SymmetricBody& B, const std::string& path) {
  njson j;
  j["dim"] = B.dim();
  switch (B.symmetry().kind) {
    case SymKind::OneSymmetric: j["symmetry"] = "one_symmetric"; break;
    case SymKind::OneUnconditional: j["symmetry"] = "one_unconditional"; break;
    default:
      throw std::invalid_argument("save_body_file: explicit-group bodies have no file form");
  }
  njson gens = njson::array();
  for (const auto& g : B.generators()) gens.push_back(vec_json(g));
  j["generators"] = std::move(gens);
  j["symbolic_only"] = B.symbolic_only();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << j.dump(2) << "\n";
}

namespace {

struct NamedCheck {
  std::string name;
  double budget = 0;  // seconds; 0 = unlimited
  std::function<std::pair<bool, std::string>()> fn;
};

std::pair<bool, std::string> claim_outcome(const std::string& id, ClaimOptions opt = {}) {
  ClaimResult r = run_claim(id, opt);
  return {r.confirmed(), r.reason};
}

std::pair<bool, std::string> check_rational_format() {
  bool ok = rat_str(parse_rat("-7/2")) == "-7/2" && parse_rat("4/6") == frac(2, 3) &&
            parse_rat("12") == Rat(12) && frac(2, -4) == frac(-1, 2);
  for (const char* bad : {"0.5", "1e3", "", "1/0", "one"}) {
    try {
      (void)parse_rat(bad);
      return {false, std::string("accepted malformed rational \"") + bad + "\""};
    } catch (const std::invalid_argument&) {
    }
  }
  return {ok, ok ? "round trips exact, decimals rejected" : "round trip mismatch"};
}

std::pair<bool, std::string> check_lp_certificates() {
  LpProblem p;
  p.c = Vec{Rat(1), Rat(1)};
  p.rows = {Vec{Rat(1), Rat(1)}};
  p.b = Vec{Rat(1)};
  LpSolution s = lp_solve(p);
  bool ok = s.status == LpStatus::Optimal && s.objective == 1 && verify_lp_optimal(p, s);

  LpProblem q;
  q.c = Vec{Rat(0)};
  q.rows = {Vec{Rat(1)}};
  q.b = Vec{Rat(-1)};
  LpSolution t = lp_solve(q);
  ok = ok && t.status == LpStatus::Infeasible && !t.farkas.empty();
  return {ok, ok ? "optimal audited, infeasibility certified" : "LP audit failed"};
}

std::pair<bool, std::string> check_catalog_invariants() {
  bool ok = named_b1(3).body.vertices().size() == 14 &&
            named_b1(4).body.vertices().size() == 24 &&
            named_b4(4).body.invariants().dist == frac(16, 9) &&
            named_cross_polytope(3).body.vertices().size() == 6 &&
            named_cube(3).body.vertices().size() == 8;
  return {ok, ok ? "vertex counts and dist values pinned" : "catalog invariant broke"};
}

std::pair<bool, std::string> check_boundary_certificates() {
  NamedBody nb = named_b1(3);
  Vec e1 = basis(3, 0);
  Vec d_in{Rat(-1), frac(1, 4), Rat(0)};
  auto [yes, w] = illuminates(nb.body, e1, d_in);
  bool ok = yes && validate_certificate(nb.body, e1, d_in, w);
  Vec d_out{Rat(-1), Rat(1), Rat(0)};
  auto [yes2, rf] = illuminates(nb.body, e1, d_out);
  ok = ok && !yes2 && rf.kind == CertKind::Refutation &&
       validate_certificate(nb.body, e1, d_out, rf);
  return {ok, ok ? "witness and refutation both revalidate" : "certificate failed"};
}

// The deep-direction recipe: -sign(x_k) on one supported coordinate, small
// opposite-sign entries elsewhere. In range it illuminates; the control runs
// it with the oversized value 1/(n-1) on the cross-polytope, where the sign
// facet turns the strict inequality into equality.
Vec deep_recipe(const Vec& x, std::size_t k, const Rat& small) {
  Vec d(x.size(), Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    int s = sgn(x[i]);
    d[i] = -small * (s == 0 ? 1 : s);
  }
  d[k] = sgn(x[k]) < 0 ? 1 : -1;
  return d;
}

std::pair<bool, std::string> check_deep_delta() {
  for (int n = 3; n <= 5; ++n) {
    Rat small = frac(1, long(n) + 1);
    for (const NamedBody& nb : {named_b1(n), named_cross_polytope(n)}) {
      Vec e1 = basis(std::size_t(n), 0);
      Vec d = deep_recipe(e1, 0, small);
      auto [yes, cert] = illuminates(nb.body, e1, d);
      if (!yes || !validate_certificate(nb.body, e1, d, cert))
        return {false, "in-range recipe failed on " + nb.id + " at e1"};
    }
    NamedBody b1 = named_b1(n);
    Vec half = scale(frac(1, 2), ones(std::size_t(n)));
    Vec d = deep_recipe(half, std::size_t(n) - 1, small);
    auto [yes, cert] = illuminates(b1.body, half, d);
    if (!yes || !validate_certificate(b1.body, half, d, cert))
      return {false, "in-range recipe failed on " + b1.id + " at the half-ones vertex"};
  }
  return {true, "recipe with small value 1/(n+1) illuminates, n = 3..5"};
}

std::pair<bool, std::string> check_deep_delta_control() {
  for (int n = 3; n <= 5; ++n) {
    NamedBody cp = named_cross_polytope(n);
    Vec e1 = basis(std::size_t(n), 0);
    Vec d = deep_recipe(e1, 0, frac(1, long(n) - 1));
    auto [yes, cert] = illuminates(cp.body, e1, d);
    if (yes) return {false, "oversized value slipped through on " + cp.id};
    if (!validate_certificate(cp.body, e1, d, cert))
      return {false, "control refutation did not revalidate on " + cp.id};
  }
  return {true, "oversized value 1/(n-1) is caught with a refutation, n = 3..5"};
}

std::pair<bool, std::string> check_set_cardinalities() {
  for (int n = 3; n <= 8; ++n) {
    std::size_t full = std::size_t(1) << n;
    if (method1_set(n).size() != full) return {false, "first construction size"};
    if (method2_set(n).size() != full) return {false, "second construction size"};
    if (minus2_set(n).size() != full - 2) return {false, "pruned size"};
    if (theorem_e_set(n, frac(1, 2 * (long(n) + 1))).size() != full - 2)
      return {false, "pruned-plus-bent size"};
    if (t1(n).size() != full - 1) return {false, "all-but-one-orthant size"};
    if (t2(n).size() != full / 2 + 2) return {false, "sign-cube-plus-poles size"};
    for (FamilyTag tag : {FamilyTag::Method1, FamilyTag::Method2, FamilyTag::Minus2,
                          FamilyTag::ThmE, FamilyTag::T1, FamilyTag::T2}) {
      if (family_cardinality(tag, n) != make_family(tag, n).set.size())
        return {false, "family cardinality mismatch for " + family_tag_name(tag)};
    }
  }
  bool ok = tn_set(4).size() == 4 && tn_set(6).size() == 24;
  return {ok, ok ? "all family sizes match their closed forms, n = 3..8"
                 : "sparse-cap size mismatch"};
}

std::vector<NamedCheck> all_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"exact.rational-format", 0, check_rational_format});
  cs.push_back({"exact.lp-certificates", 0, check_lp_certificates});
  cs.push_back({"body.catalog-invariants", 0, check_catalog_invariants});
  cs.push_back({"body.gauge-oracles", 0, [] {
                  ClaimOptions o;
                  o.count = 40;
                  o.seed = 510;
                  return claim_outcome("oracle.lp", o);
                }});
  cs.push_back({"illum.boundary-certificates", 0, check_boundary_certificates});
  cs.push_back({"illum.deep-delta", 0, check_deep_delta});
  cs.push_back({"illum.deep-delta-control", 0, check_deep_delta_control});
  cs.push_back({"sets.cardinalities", 0, check_set_cardinalities});
  cs.push_back({"sets.negation-closure", 0, [] { return claim_outcome("census"); }});
  cs.push_back({"sets.deep-coverage", 0, [] { return claim_outcome("prop3.5"); }});
  cs.push_back({"paper.c01-b1.3-minimum", 10, [] { return claim_outcome("b1.3.lower_bound"); }});
  cs.push_back({"paper.c02-b1.4-minimum", 300, [] { return claim_outcome("b1.4.lower_bound"); }});
  cs.push_back({"paper.c03-deep-patterns", 60, [] { return claim_outcome("prop3.5"); }});
  cs.push_back({"paper.c04-random-cover", 1800, [] { return claim_outcome("thmD.suite"); }});
  cs.push_back({"paper.c05-pruned-cover", 1800, [] { return claim_outcome("thmE.suite"); }});
  cs.push_back({"paper.c06-pruned-patterns", 60, [] { return claim_outcome("lemma5.2"); }});
  cs.push_back({"paper.c07-binomial-bounds", 60, [] { return claim_outcome("lemma4.3"); }});
  cs.push_back({"paper.c08-halfsupport-vertex", 300, [] { return claim_outcome("b2"); }});
  cs.push_back({"paper.c09-symbolic-classes", 60, [] { return claim_outcome("b3"); }});
  cs.push_back({"paper.c10-pole-bodies", 600, [] {
                  ClaimOptions o4, o5;
                  o4.n = 4;
                  o5.n = 5;
                  ClaimResult a = run_claim("b4", o4);
                  ClaimResult b = run_claim("b4", o5);
                  bool ok = a.confirmed() && b.confirmed();
                  return std::pair<bool, std::string>{ok, a.reason + " | " + b.reason};
                }});
  cs.push_back({"paper.c11-small-dist-cover", 1800, [] { return claim_outcome("claimF.suite"); }});
  cs.push_back({"paper.c12-gauge-oracles", 600, [] { return claim_outcome("oracle.lp"); }});
  cs.push_back({"paper.c13-pair-census", 60, [] { return claim_outcome("census"); }});
  return cs;
}

}  // namespace

std::vector<CheckOutcome> run_checks(const std::string& filter) {
  std::vector<CheckOutcome> out;
  for (const NamedCheck& c : all_checks()) {
    if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
    CheckOutcome o;
    o.name = c.name;
    auto t0 = Clock::now();
    try {
      auto [pass, detail] = c.fn();
      o.pass = pass;
      o.detail = std::move(detail);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget > 0 && o.seconds > c.budget) {
      o.pass = false;
      o.detail += " [over budget " + std::to_string(c.budget) + "s]";
    }
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

struct CliOptions {
  std::string body_path;
  std::string family;
  int n = 0;
  std::string delta;
  std::string eta;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string x_arg;
  std::string d_arg;
  std::string claim;
  std::string profile = "mid";
  int count = 0;
  std::string out_path;
  std::string filter;
  std::uint64_t node_budget = 50000000;
  std::size_t orbit_cap = 1000000;
  bool timing = false;
};

int do_body_show(const CliOptions& o, std::ostream& out) {
  SymmetricBody B = load_body_file(o.body_path, o.orbit_cap);
  out << "dim: " << B.dim() << "\n";
  out << "symmetry: "
      << (B.symmetry().kind == SymKind::OneSymmetric ? "one_symmetric" : "one_unconditional")
      << "\n";
  out << "symbolic_only: " << (B.symbolic_only() ? "true" : "false") << "\n";
  out << "orbit bound: " << B.orbit_size_bound().get_str() << "\n";
  out << "generators:\n";
  for (const auto& g : B.generators()) out << "  " << vec_str(g) << "\n";
  if (!o.out_path.empty()) save_body_file(B, o.out_path);
  return 0;
}

int do_body_invariants(const CliOptions& o, std::ostream& out) {
  SymmetricBody B = load_body_file(o.body_path, o.orbit_cap);
  const BodyInvariants& inv = B.invariants();
  njson params;
  params["body"] = o.body_path;
  njson j = tool_header("body-invariants", params);
  j["m"] = inv.m;
  j["dist"] = rat_str(inv.dist);
  j["theta"] = rat_str(inv.theta);
  j["eta"] = rat_str(inv.eta);
  return emit(j, o.out_path, out);
}

DirectionFamily family_from_options(const CliOptions& o) {
  auto tag = family_tag_from(o.family);
  if (!tag) throw std::invalid_argument("unknown family \"" + o.family + "\"");
  std::optional<Rat> delta, eta;
  if (!o.delta.empty()) delta = parse_rat(o.delta);
  if (!o.eta.empty()) eta = parse_rat(o.eta);
  std::optional<std::uint64_t> seed;
  if (o.seed_set) seed = o.seed;
  return make_family(*tag, o.n, delta, eta, seed);
}

int do_sets_emit(const CliOptions& o, std::ostream& out) {
  DirectionFamily fam = family_from_options(o);
  njson params;
  params["family"] = family_tag_name(fam.tag);
  params["n"] = fam.n;
  params["delta"] = rat_str(fam.delta);
  params["eta"] = rat_str(fam.eta);
  if (o.seed_set) params["seed"] = fam.seed;
  njson j = tool_header("sets-emit", params);
  j["count"] = fam.set.size();
  njson dirs = njson::array(), labels = njson::array();
  for (const auto& d : fam.set) {
    dirs.push_back(vec_json(d.v));
    labels.push_back(d.label);
  }
  j["directions"] = std::move(dirs);
  j["labels"] = std::move(labels);
  return emit(j, o.out_path, out);
}

int do_check_illuminate(const CliOptions& o, std::ostream& out) {
  SymmetricBody B = load_body_file(o.body_path, o.orbit_cap);
  Vec x = parse_vec_arg(o.x_arg, "--x");
  Vec d = parse_vec_arg(o.d_arg, "--d");
  if (x.size() != B.dim() || d.size() != B.dim())
    throw std::invalid_argument("--x/--d: expected " + std::to_string(B.dim()) +
                                " coordinates");
  auto [yes, cert] = illuminates(B, x, d);
  njson params;
  params["body"] = o.body_path;
  params["x"] = o.x_arg;
  params["d"] = o.d_arg;
  njson j = tool_header("check-illuminate", params);
  njson c = cert_json(x, d, cert, "");
  for (auto& [k, v] : c.items()) j[k] = v;
  emit(j, o.out_path, out);
  return yes ? 0 : 1;
}

int do_check_deep(const CliOptions& o, std::ostream& out) {
  Vec x = parse_vec_arg(o.x_arg, "--x");
  Vec d = parse_vec_arg(o.d_arg, "--d");
  bool deep = deep_illuminates(d, x);
  njson params;
  params["x"] = o.x_arg;
  params["d"] = o.d_arg;
  njson j = tool_header("check-deep", params);
  j["deep"] = deep;
  emit(j, o.out_path, out);
  return deep ? 0 : 1;
}

int do_cover_min(const CliOptions& o, std::ostream& out) {
  SymmetricBody B = load_body_file(o.body_path, o.orbit_cap);
  DirectionSet pool;
  njson params;
  params["body"] = o.body_path;
  if (!o.family.empty()) {
    CliOptions fo = o;
    if (fo.n == 0) fo.n = int(B.dim());
    DirectionFamily fam = family_from_options(fo);
    pool = fam.set;
    params["family"] = family_tag_name(fam.tag);
  } else {
    // default pool: every nonzero {-1,0,1}^n direction
    std::size_t total = 1;
    for (std::size_t i = 0; i < B.dim(); ++i) total *= 3;
    for (std::size_t m = 0; m < total; ++m) {
      std::size_t v = m;
      Vec dvec(B.dim());
      bool nz = false;
      for (std::size_t i = B.dim(); i-- > 0;) {
        int dig = int(v % 3) - 1;
        v /= 3;
        dvec[i] = Rat(dig);
        nz = nz || dig != 0;
      }
      if (nz) pool.push_back({dvec, vec_str(dvec)});
    }
    params["pool"] = "ternary";
  }
  params["node_budget"] = o.node_budget;
  MinCover mc = min_cover(B, pool, o.node_budget);
  njson j = tool_header("cover-min", params);
  j["pool_size"] = pool.size();
  j["feasible"] = mc.feasible;
  j["exhausted"] = mc.exhausted;
  j["size"] = mc.size;
  j["nodes"] = mc.nodes;
  njson subset = njson::array();
  for (std::size_t i : mc.subset) subset.push_back(vec_json(pool[i].v));
  j["subset"] = std::move(subset);
  emit(j, o.out_path, out);
  if (!mc.exhausted && mc.feasible) return 3;  // node budget ran out
  return mc.feasible ? 0 : 1;
}

int do_verify_paper(const CliOptions& o, std::ostream& out) {
  ClaimOptions copt;
  if (o.n > 0) copt.n = o.n;
  if (o.seed_set) copt.seed = o.seed;
  copt.profile = o.profile;
  if (o.count > 0) copt.count = o.count;
  njson params;
  params["claim"] = o.claim;
  params["n"] = o.n > 0 ? njson(o.n) : njson(nullptr);
  params["seed"] = o.seed_set ? njson(o.seed) : njson(nullptr);
  params["profile"] = o.profile;
  params["count"] = o.count > 0 ? njson(o.count) : njson(nullptr);
  ClaimResult r = run_claim(o.claim, copt);
  emit(claim_report(r, std::move(params), o.timing), o.out_path, out);
  return r.verdict == Verdict::Refuted ? 1 : 0;
}

int do_selftest(const CliOptions& o, std::ostream& out) {
  std::vector<CheckOutcome> outcomes = run_checks(o.filter);
  if (outcomes.empty()) {
    out << "no checks match filter \"" << o.filter << "\"\n";
    return 2;
  }
  std::size_t passed = 0;
  for (const CheckOutcome& c : outcomes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%8.2fs", c.seconds);
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << buf << "  " << c.detail << "\n";
    out.flush();
    passed += c.pass;
  }
  out << passed << "/" << outcomes.size() << " checks passed\n";
  return passed == outcomes.size() ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact certificates for boundary illumination of coordinate-symmetric "
               "polytopes"};
  app.name(kToolName);
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  CliOptions o;
  int jobs = 0;

  auto add_body = [&](CLI::App* sub) {
    sub->add_option("--body", o.body_path, "body file (JSON)")->required();
    sub->add_option("--orbit-cap", o.orbit_cap, "orbit expansion cap");
  };
  auto add_family = [&](CLI::App* sub, bool required) {
    auto* f = sub->add_option("--family", o.family, "direction family tag");
    if (required) f->required();
    sub->add_option("--delta", o.delta, "small coordinate value, exact p/q");
    sub->add_option("--eta", o.eta, "bent coordinate value, exact p/q");
    sub->add_option("--seed", o.seed, "PRNG seed")->each([&](const std::string&) {
      o.seed_set = true;
    });
  };

  CLI::App* show = app.add_subcommand("body-show", "print a body file");
  add_body(show);
  show->add_option("--out", o.out_path, "write the normalized body file here");

  CLI::App* invc = app.add_subcommand("body-invariants", "exact m, dist, theta, eta");
  add_body(invc);
  invc->add_option("--out", o.out_path, "report path");

  CLI::App* emitc = app.add_subcommand("sets-emit", "materialize a direction family");
  add_family(emitc, true);
  emitc->add_option("--n", o.n, "dimension")->required();
  emitc->add_option("--out", o.out_path, "report path");

  CLI::App* illc = app.add_subcommand("check-illuminate", "witness or refute one pair");
  add_body(illc);
  illc->add_option("--x", o.x_arg, "boundary point, comma-separated exact coordinates")
      ->required();
  illc->add_option("--d", o.d_arg, "direction, comma-separated exact coordinates")->required();
  illc->add_option("--out", o.out_path, "report path");

  CLI::App* deepc = app.add_subcommand("check-deep", "sign-pattern deep-illumination test");
  deepc->add_option("--x", o.x_arg, "point, comma-separated exact coordinates")->required();
  deepc->add_option("--d", o.d_arg, "direction, comma-separated exact coordinates")
      ->required();
  deepc->add_option("--out", o.out_path, "report path");

  CLI::App* minc = app.add_subcommand("cover-min", "exact minimum illuminating subset");
  add_body(minc);
  add_family(minc, false);
  minc->add_option("--n", o.n, "family dimension override");
  minc->add_option("--node-budget", o.node_budget, "branch-and-bound node budget");
  minc->add_option("--out", o.out_path, "report path");

  CLI::App* verc = app.add_subcommand("verify-paper", "run one verification claim");
  verc->add_option("--claim", o.claim, "claim id")->required();
  verc->add_option("--n", o.n, "dimension");
  verc->add_option("--seed", o.seed, "random body seed")->each([&](const std::string&) {
    o.seed_set = true;
  });
  verc->add_option("--profile", o.profile, "random body profile");
  verc->add_option("--count", o.count, "suite size override");
  verc->add_option("--out", o.out_path, "report path");
  verc->add_flag("--timing", o.timing, "include wall_seconds in the report");

  CLI::App* selfc = app.add_subcommand("selftest", "named property checks");
  selfc->add_option("--filter", o.filter, "run only checks whose name contains this");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  app.add_option("--jobs", jobs, "worker thread cap");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (show->parsed()) return do_body_show(o, out);
    if (invc->parsed()) return do_body_invariants(o, out);
    if (emitc->parsed()) return do_sets_emit(o, out);
    if (illc->parsed()) return do_check_illuminate(o, out);
    if (deepc->parsed()) return do_check_deep(o, out);
    if (minc->parsed()) return do_cover_min(o, out);
    if (verc->parsed()) return do_verify_paper(o, out);
    if (selfc->parsed()) return do_selftest(o, out);
  } catch (const OrbitTooLarge& e) {
    err << e.what() << " (raise --orbit-cap)\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace illum
