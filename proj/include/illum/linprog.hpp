#pragma once

#include <vector>

#include "illum/rational.hpp"

namespace illum {

// Equality-form linear program:
//   minimize c.x  subject to  A x = b,  x >= lower   (lower defaults to 0)
struct LpProblem {
  Vec c;
  std::vector<Vec> rows;  // the matrix A, one Vec per equality constraint
  Vec b;
  Vec lower;  // empty means all-zeros
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// On Optimal: x is primal feasible, y is dual feasible (A^T y <= c) and the
// duality gap is exactly zero. On Infeasible: farkas holds a certificate y
// with y.(b - A.lower) > 0 and A^T y <= 0.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vec x;
  Vec y;
  Rat objective = 0;
  Vec farkas;
};

// Dense two-phase simplex over exact rationals. Pivoting starts with the
// most-negative-reduced-cost rule and switches permanently to Bland's rule
// after a degenerate stall, which makes termination provable while keeping
// typical runs short.
LpSolution lp_solve(const LpProblem& p);

// Exact optimality audit: primal feasibility, dual feasibility and
// complementary slackness, all with zero tolerance.
bool verify_lp_optimal(const LpProblem& p, const LpSolution& s);

}  // namespace illum
