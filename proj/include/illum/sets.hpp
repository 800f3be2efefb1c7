#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "illum/illumination.hpp"
#include "illum/rational.hpp"

namespace illum {

// Cyclic Gray sequence on {-1,1}^n: every sign vector exactly once,
// consecutive entries (wrapping around) differ in one coordinate,
// starts at (1,...,1) and ends at (1,...,1,-1).
struct GrayCodeSequence {
  int n = 0;
  std::vector<std::vector<int>> sequence;
};

GrayCodeSequence gray_code(int n);

// All n*2^n vectors with one coordinate equal to +-1 and every other
// coordinate equal to +-delta.
DirectionSet big_set(int n, const Rat& delta);

// 2^n directions read off consecutive Gray-sequence pairs: the flipped
// coordinate of (w_r, w_{r+1}) gets -w_r there, all other coordinates
// get -delta*w_r.
DirectionSet method1_set(int n, const Rat& delta);
DirectionSet method1_set(int n);

// 2^n directions built by the sign recursion seeded with
// {(1,delta), (-1,-delta), (delta,-1), (-delta,1)}: the first half appends
// a small coordinate matching the sign of the previous last coordinate, the
// second half shrinks everything to +-delta and appends the opposite unit.
// Closed under negation.
DirectionSet method2_set(int n, const Rat& delta);
DirectionSet method2_set(int n);

// method2_set minus the pair +-(delta,...,delta,-delta,1); still reaches
// every nonzero vector that has a zero coordinate.
DirectionSet minus2_set(int n, const Rat& delta);
DirectionSet minus2_set(int n);

// minus2_set(n, 1/(n+1)) with the pair +-(1, delta,...,delta) swapped for
// +-(1, delta,...,delta, eta, delta); requires 0 < eta < 1/(n+1).
DirectionSet theorem_e_set(int n, const Rat& eta);

// Sign vectors with a -1 somewhere among the first n-1 coordinates, plus
// (1,...,1,0).
DirectionSet t1(int n);

// ({-1,1}^{n-1} x {0}) together with -e_n, +e_n.
DirectionSet t2(int n);

// ({-1,1}^{n-1} x {0}) together with -e_i, +e_i for every i.
DirectionSet t2prime(int n);

// Every vector in {-1,0,1}^n with an odd number of nonzero entries; the
// deterministic witness for the (P1) extension property.
DirectionSet r0_full(int n);

// (P1): every y in {-1,0,1}^n with k <= ceil(n/2) nonzero entries extends to
// some z in R0 with exactly 2k-1 nonzero entries agreeing with y on y's
// support. Exhaustive check over all such y; entries of R0 must lie in
// {-1,0,1}. The plain version fans out across threads, the _serial one is
// the single-threaded reference.
bool p1_check(const DirectionSet& r0, int n);
bool p1_check_serial(const DirectionSet& r0, int n);

// Seeded greedy search for a small (P1) set: scores odd-support candidates
// by how many uncovered patterns they extend, shuffling ties with the seed.
// budget caps candidate/pattern pair evaluations; whatever the greedy phase
// leaves uncovered is finished deterministically. Result always passes
// p1_check.
DirectionSet r0_greedy(int n, std::uint64_t seed, std::uint64_t budget);

// ({-1,1}^{n-1} x {0}) plus R0 (duplicates dropped); rejects R0 that fails
// p1_check.
DirectionSet t3(int n, const DirectionSet& r0);

// The two scaled sign families of the small-subcube theorem: first n-1
// coordinates +-delta with at most floor((n-2)/4) minus (resp. plus) signs,
// last coordinate +-1. Cardinality 4*sum_{s<=floor((n-2)/4)} C(n-1,s).
DirectionSet tn_set(int n, const Rat& delta);
DirectionSet tn_set(int n);

// method2_set(n-1, delta) embedded with a trailing zero, plus -e_n, +e_n.
DirectionSet thm41_set(int n, const Rat& delta);
DirectionSet thm41_set(int n);

// Exact evaluation of the partial binomial-sum bounds:
// lhs = 2*sum_{s<=floor((n-1)/4)} C(n,s) against 2^{n-1}-2 and
// 2^{n-1}-C(n,floor(n/2)), plus log2(lhs)/n for the growth-rate check.
struct BinomialBounds {
  int n = 0;
  mpz_class lhs;
  mpz_class basic_rhs;
  mpz_class central_rhs;
  bool le_basic = false;
  bool eq_basic = false;
  bool eq_minus4 = false;
  bool eq_minus18 = false;
  bool le_central = false;
  double log2_lhs_over_n = 0.0;
};

BinomialBounds binomial_bounds(int n);

enum class FamilyTag { G, Method1, Method2, Minus2, ThmE, T1, T2, T2prime, T3, Tn, Thm41 };

struct DirectionFamily {
  FamilyTag tag = FamilyTag::G;
  int n = 0;
  Rat delta;
  Rat eta;
  std::uint64_t seed = 0;
  DirectionSet set;
};

std::string family_tag_name(FamilyTag tag);
std::optional<FamilyTag> family_tag_from(const std::string& name);

// Closed-form size for every family except T3 (whose size depends on R0).
std::size_t family_cardinality(FamilyTag tag, int n);

// Materializes a family with its default parameters unless overridden.
// T3 uses r0_full(n) by default, or r0_greedy(n, *seed, default budget)
// when a seed is supplied.
DirectionFamily make_family(FamilyTag tag, int n,
                            const std::optional<Rat>& delta = std::nullopt,
                            const std::optional<Rat>& eta = std::nullopt,
                            std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace illum
