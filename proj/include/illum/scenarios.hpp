#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "illum/illumination.hpp"
#include "illum/sets.hpp"

namespace illum {

struct NamedBody {
  std::string id;
  SymmetricBody body;
};

// Hull of the signed-permutation orbits of e_1 and (1/2, ..., 1/2).
NamedBody named_b1(int n);
// n = 9, orbits of e_1 and (1/2, 1/2, 1/2, 1/2, 0, ..., 0).
NamedBody named_b2();
// n = 25, orbits of e_1, (2/3, 2/3, 2/3, 0...) and twelve 1/3 entries;
// symbolic only: the orbit is far beyond expansion scale.
NamedBody named_b3();
// Orbits of e_1 + (3/4)e_n and (1/2, ..., 1/2, 3/4); 1 < dist < 2 yet the
// horizontal sign-cube-plus-poles set fails at e_1 + (3/4)e_n.
NamedBody named_b4(int n);
NamedBody named_cross_polytope(int n);
NamedBody named_cube(int n);

// Deterministic fuzz source, one body per (n, seed, profile). Profiles:
// "near-cube" (one two-valued generator next to the all-ones vector, so
// 1 < dist < 2), "mid" (1-3 dense generators with denominator <= 16), and
// "cross-like" (one generator whose tail entries are at most 1/4, so
// dist >= 2 once n >= 3). Every generator is sorted nonincreasing with
// leading entry 1, which puts e_1 on the boundary.
NamedBody random_symmetric(int n, std::uint64_t seed, const std::string& profile);

// Rebuilds a catalog or random body from its id string ("B1(3)", "B2",
// "Random(4,17,mid)", ...). Unrecognized ids throw std::invalid_argument.
NamedBody body_from_id(const std::string& id);

// One re-checkable fact. With d empty, cert.normal is an outer normal at x
// (support touches x). Otherwise cert is a full illuminates() certificate
// for the pair (x, d). body_id empty means the enclosing claim's own body.
struct CertRecord {
  std::string body_id;
  Vec x;
  Vec d;
  Certificate cert;
};

// Re-checks a record by gauge / support evaluations only.
bool revalidate(const SymmetricBody& B, const CertRecord& r);

enum class Verdict { Confirmed, Refuted, Skipped };

// "confirmed" / "refuted" / "skipped-with-reason".
std::string verdict_name(Verdict v);

struct ClaimResult {
  std::string claim;
  std::string body_id;  // empty for body-free claims
  Verdict verdict = Verdict::Skipped;
  std::string reason;               // skip reason, or a one-line summary
  std::vector<std::string> facts;   // exact values, deterministic order
  std::vector<CertRecord> certs;    // bounded certificate sample
  std::vector<CoverReport> covers;  // full cover evidence when a cover ran
  std::optional<MinCover> cover_minimum;
  double wall_seconds = 0;

  bool confirmed() const { return verdict == Verdict::Confirmed; }
};

// Exact minimum over the pool {-1,0,1}^n \ {0}: 10 in dimension 3, 16 in
// dimension 4; also records that the horizontal sign-cube-plus-poles set
// leaves e_1 dark. n must be 3 or 4.
ClaimResult verify_b1_lower_bound(int n);

// At x = (1/2)(e_1+e_2+e_3+e_4) in R^9: validates the listed outer-normal
// families, refutes every {-1,0,1}^9 direction with <= 2 or >= 8 nonzero
// coordinates, shows each signed basis vector is the sole single-coordinate
// illuminator of its opposite vertex, and exhibits a 3-nonzero witness.
ClaimResult verify_b2_claims();

// Symbolic-only refutations in R^25: directions with >= 6 nonzeros are
// blocked at the 2/3-class vertices, directions with <= 6 nonzeros at the
// 1/3-class vertices, so no single direction serves both classes.
ClaimResult verify_b3_claims();

// dist = gauge(ones) <= 4n/(2n+1) with dist > 1; every direction of the
// horizontal sign-cube-plus-poles set is refuted at e_1 + (3/4)e_n; the
// all-but-one-orthant set covers. n in [4, 6].
ClaimResult verify_b4_claims(int n);

// Cover checks: each builds its direction set, runs verify_set, and returns
// confirmed iff every vertex is lit. Preconditions turn into
// skipped-with-reason, never silence.
ClaimResult theorem_d_check(const NamedBody& nb);          // I^n(1/(n+1))
ClaimResult theorem_e_check(const NamedBody& nb);          // 2^n - 2 set, needs dist > 1
ClaimResult thm41_check(const NamedBody& nb);              // needs m = 1
ClaimResult thm44_check(const NamedBody& nb);              // needs 2m <= n
ClaimResult claim_f_check(const NamedBody& nb);            // needs 1 < dist < 2

// Property suites over the seeded random bodies (profiles rotate per seed).
ClaimResult theorem_d_suite(const std::vector<int>& dims, int per_dim);
ClaimResult theorem_e_suite(const std::vector<int>& dims, int per_dim);
// Scans seeds per dimension until per_dim bodies with 1 < dist < 2 ran.
ClaimResult claim_f_suite(const std::vector<int>& dims, int per_dim);
// Full-orbit gauge == column-generation gauge on randomized (body, point)
// pairs, n <= 5.
ClaimResult lp_oracle_suite(int pairs, std::uint64_t seed);
// Randomized non-symmetric bumps K of symmetric bodies (n = 2, 3):
// gauge_K <= symmetrized gauge <= alpha * gauge_K on sampled points.
ClaimResult alpha_inclusion_suite(int bodies, std::uint64_t seed);

// Exhaustive combinatorial claims over the direction families.
ClaimResult prop35_claim();   // every sign pattern deep-lit, n = 2..10
ClaimResult lemma52_claim();  // pruned set vs zero-coordinate patterns, n = 3..10
ClaimResult lemma43_claim();  // binomial bounds n = 3..50 plus ratio at 200
ClaimResult census_claim();   // negation closure and X-ray bounds, n = 3..10

struct ClaimOptions {
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::string profile = "mid";
  std::optional<int> count;  // suite size override
};

// Stable ids, e.g. "b1.3.lower_bound", "thmE", "claimF", "lemma4.3".
std::vector<std::string> claim_ids();

// Dispatches an id to its verifier. Unknown ids throw std::invalid_argument.
ClaimResult run_claim(const std::string& id, const ClaimOptions& opt = {});

}  // namespace illum
