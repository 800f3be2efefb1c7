#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "illum/body.hpp"

namespace illum {

struct Direction {
  Vec v;
  std::string label;
};

using DirectionSet = std::vector<Direction>;

enum class CertKind { Witness, Refutation };

// Witness: gauge(x + step*d) = interior_gauge < 1.
// Refutation: normal is an outer normal at x (support touches x) with
// <d, normal> = inner_product >= 0, scaled so the largest |entry| is 1.
struct Certificate {
  CertKind kind = CertKind::Witness;
  Rat step;
  Rat interior_gauge;
  Vec normal;
  Rat inner_product;
};

// Decides whether x + eps*d reaches the interior for some eps > 0, by a
// single LP maximizing the slack t in: x + eps*d = sum mu_i v_i,
// sum mu <= 1 - t, t <= eps <= 1, mu >= 0. Columns are priced on demand, so
// symbolic bodies work too. Throws std::invalid_argument unless gauge(x) = 1.
std::pair<bool, Certificate> illuminates(const SymmetricBody& B, const Vec& x, const Vec& d);

// Same decision through the polar route: the sign of the one-sided derivative
// of eps -> gauge(x + eps*d), read off an LP over the gauge contact face. For
// coordinate symmetry classes this never touches the orbit; explicit groups
// fall back to the column route. Verdicts agree with illuminates by
// construction; certificates may differ.
std::pair<bool, Certificate> illuminates_polar(const SymmetricBody& B, const Vec& x,
                                               const Vec& d);

// Re-checks a certificate by plain gauge / support evaluations only.
bool validate_certificate(const SymmetricBody& B, const Vec& x, const Vec& d,
                          const Certificate& c);

bool is_outer_normal(const SymmetricBody& B, const Vec& x, const Vec& u);

// Combinatorial predicate: sign(x_i) = -sign(d_i) off the zero set of x, and
// some coordinate of d with |d_j| = max|d| = 1 sits off the zero set.
bool deep_illuminates(const Vec& d, const Vec& x);

// Indices into B.vertices() of the vertices d illuminates.
std::vector<std::size_t> illuminated_vertices(const SymmetricBody& B, const Vec& d);

struct VertexOutcome {
  Vec vertex;
  bool illuminated = false;
  std::size_t direction_index = 0;
  Certificate certificate;
  // Populated only for uncovered vertices: one refutation per direction.
  std::vector<std::pair<std::size_t, Certificate>> refutations;
};

struct CoverReport {
  std::string body_id;
  std::string set_id;
  bool covers = false;
  std::vector<VertexOutcome> outcomes;  // one per vertex, in vertex order
  std::vector<std::size_t> uncovered;   // indices into outcomes
};

// Checks that every vertex is illuminated by some direction of D. Witness
// search tries combinatorially deep directions first, then the rest, in pool
// order; the outcome for each vertex is schedule-independent.
CoverReport verify_set(const SymmetricBody& B, const DirectionSet& D,
                       std::string body_id = "", std::string set_id = "");
// Single-threaded reference implementation with identical output.
CoverReport verify_set_serial(const SymmetricBody& B, const DirectionSet& D,
                              std::string body_id = "", std::string set_id = "");

struct MinCover {
  bool feasible = false;   // some subset of the pool covers all vertices
  bool exhausted = false;  // search completed; size is proven optimal
  std::size_t size = 0;
  std::vector<std::size_t> subset;  // indices into the pool, ascending
  std::uint64_t nodes = 0;
};

// Exact minimum-cardinality illuminating subset of the pool, by set-cover
// branch-and-bound over per-direction vertex bitmasks. Deterministic: branches
// on the most-constrained vertex, directions in ascending pool order.
MinCover min_cover(const SymmetricBody& B, const DirectionSet& pool,
                   std::uint64_t node_budget = 50000000);

struct PairCensus {
  std::size_t pairs = 0;
  std::size_t unpaired = 0;
};

// Counts {d, -d} pairs inside D (each once) and directions without their
// opposite; pairs + unpaired bounds the X-ray number from above.
PairCensus opposite_pair_census(const DirectionSet& D);

}  // namespace illum
