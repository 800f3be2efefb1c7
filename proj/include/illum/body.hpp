#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "illum/linprog.hpp"
#include "illum/rational.hpp"
#include "illum/symmetry.hpp"

namespace illum {

struct OrbitTooLarge : std::runtime_error {
  explicit OrbitTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct BodyInvariants {
  std::size_t m = 0;   // largest k with e_1+...+e_k inside the body
  Rat dist = 1;        // gauge of the all-ones vector
  Rat theta = 1;       // 1 / dist
  Rat eta = 0;         // (1 - theta) / (n + 2)
};

enum class GaugeMode { Auto, FullOrbit, ColumnGeneration, Polar };

struct SignProfile {
  std::vector<std::size_t> zero_set;
  std::vector<std::size_t> support;
  std::vector<std::size_t> max_set;  // indices attaining the largest |x_i|
  std::vector<int> pattern;
};

SignProfile sign_profile(const Vec& x);

// Convex hull of the union of generator orbits under the symmetry class.
// Caches (orbit, vertices, invariants) are populated lazily by the first
// caller; construct-then-share across threads after warming the caches.
class SymmetricBody {
 public:
  static constexpr std::size_t kDefaultOrbitCap = 1000000;

  SymmetricBody(std::size_t dim, std::vector<Vec> generators, SymmetryClass sym,
                bool symbolic_only = false, std::size_t orbit_cap = kDefaultOrbitCap);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const SymmetryClass& symmetry() const { return sym_; }
  bool symbolic_only() const { return symbolic_; }
  std::size_t orbit_cap() const { return cap_; }
  mpz_class orbit_size_bound() const;

  // De-duplicated union of the generator orbits; throws OrbitTooLarge in
  // symbolic mode or beyond the cap.
  const std::vector<Vec>& orbit_points() const;

  // Extreme points of the hull, lexicographically sorted.
  const std::vector<Vec>& vertices() const;

  // max over orbit points v of <v,u>; never needs orbit expansion.
  Rat support_value(const Vec& u) const;

  // Best orbit point for the pricing direction y, with its value <v,y>.
  std::pair<Vec, Rat> price(const Vec& y) const;
  // One best column per generator (deduplicated), for column generation.
  std::vector<Vec> price_columns(const Vec& y) const;

  // Exact Minkowski gauge: min sum(mu) over representations p = sum mu_i v_i.
  // FullOrbit and ColumnGeneration price the orbit; Polar maximizes <p,u> over
  // the polar body reduced to the canonical cone (coordinate symmetry classes
  // only, never expands the orbit).
  Rat gauge(const Vec& p, GaugeMode mode = GaugeMode::Auto) const;

  bool is_member(const Vec& p) const;
  bool is_interior(const Vec& p) const;

  const BodyInvariants& invariants() const;

 private:
  friend SymmetricBody normalize_to_Sn(const SymmetricBody& B);

  Rat gauge_full(const Vec& p) const;
  Rat gauge_colgen(const Vec& p) const;
  Rat gauge_polar(const Vec& p) const;
  bool dominated_fast_path(const Vec& p, bool strict) const;

  std::size_t dim_;
  std::vector<Vec> gens_;
  SymmetryClass sym_;
  bool symbolic_;
  bool capped_ = false;
  std::size_t cap_;

  mutable bool orbit_ready_ = false;
  mutable std::vector<Vec> orbit_;
  mutable bool vertices_ready_ = false;
  mutable std::vector<Vec> vertices_;
  mutable bool invariants_ready_ = false;
  mutable BodyInvariants inv_;
};

// Uniform rescale (OneSymmetric) or per-axis diagonal rescale
// (OneUnconditional) so that every basis vector lands on the boundary.
SymmetricBody normalize_to_Sn(const SymmetricBody& B);

// Raw V-polytope view for the symmetrization operations: hull of the listed
// points with no symmetry assumed (trivial explicit group).
SymmetricBody raw_polytope(std::size_t dim, std::vector<Vec> points);

// True iff gauge_K(sigma v) <= alpha for every vertex v and every signed
// permutation sigma.
bool is_alpha_symmetric(const SymmetricBody& K, const Rat& alpha);

// gauge of x w.r.t. the largest 1-symmetric body inside K: max over the full
// signed-permutation group of gauge_K(sigma x).
Rat symmetrized_gauge(const SymmetricBody& K, const Vec& x);

}  // namespace illum
