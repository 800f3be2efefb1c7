#include "illum/linprog.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace illum {

namespace {

// Dense simplex working state. Columns 0..n-1 are the problem variables
// (shifted to x' = x - lower >= 0), columns n..n+m-1 the artificials whose
// block doubles as B^{-1} for dual extraction; column n+m is the rhs.
struct Tableau {
  std::size_t m, n;
  std::vector<Vec> t;          // m rows, n+m+1 entries each
  std::vector<std::size_t> basis;  // one basic column per row

  Rat& at(std::size_t i, std::size_t j) { return t[i][j]; }
  Rat& rhs(std::size_t i) { return t[i][n + m]; }

  void pivot(std::size_t r, std::size_t jin) {
    Rat piv = t[r][jin];
    for (auto& x : t[r]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(t[i][jin]) == 0) continue;
      Rat f = t[i][jin];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = jin;
  }

  // Bland-tie-broken ratio test; returns m when the column is unbounded.
  std::size_t ratio_row(std::size_t jin) {
    std::size_t r = m;
    Rat best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][jin]) <= 0) continue;
      Rat ratio = rhs(i) / t[i][jin];
      if (r == m || ratio < best || (ratio == best && basis[i] < basis[r])) {
        r = i;
        best = ratio;
      }
    }
    return r;
  }
};

// cost[j] for every column; artificial columns barred from entering get no
// cost slot (allowed limits the scan). Returns false when optimal.
bool choose_entering(Tableau& tab, const Vec& cost, std::size_t allowed,
                     bool bland, std::size_t& jin, Rat& red_out) {
  // reduced cost r_j = c_j - cB . column_j
  Vec cb(tab.m);
  for (std::size_t i = 0; i < tab.m; ++i) cb[i] = cost[tab.basis[i]];
  bool found = false;
  Rat best = 0;
  for (std::size_t j = 0; j < allowed; ++j) {
    Rat r = cost[j];
    for (std::size_t i = 0; i < tab.m; ++i)
      if (sgn(tab.t[i][j]) != 0) r -= cb[i] * tab.t[i][j];
    if (sgn(r) < 0) {
      if (bland) {
        jin = j;
        red_out = r;
        return true;
      }
      if (!found || r < best) {
        found = true;
        best = r;
        jin = j;
      }
    }
  }
  if (found) red_out = best;
  return found;
}

// Runs the simplex loop on the given cost vector. Returns false iff the
// problem is unbounded below.
bool run_simplex(Tableau& tab, const Vec& cost, std::size_t allowed) {
  bool bland = false;
  std::size_t stall = 0;
  const std::size_t stall_limit = 2 * (tab.m + allowed);
  Rat last_obj;
  bool have_last = false;
  for (;;) {
    std::size_t jin = 0;
    Rat red;
    if (!choose_entering(tab, cost, allowed, bland, jin, red)) return true;
    std::size_t r = tab.ratio_row(jin);
    if (r == tab.m) return false;
    tab.pivot(r, jin);
    if (!bland) {
      Rat obj = 0;
      for (std::size_t i = 0; i < tab.m; ++i) obj += cost[tab.basis[i]] * tab.rhs(i);
      if (have_last && obj == last_obj) {
        if (++stall > stall_limit) bland = true;
      } else {
        stall = 0;
      }
      last_obj = obj;
      have_last = true;
    }
  }
}

}  // namespace

LpSolution lp_solve(const LpProblem& p)
{
  const std::size_t m = p.rows.size();
  const std::size_t n = p.c.size();
  if (p.b.size() != m) throw std::invalid_argument("lp_solve: rhs size mismatch");
  for (const auto& row : p.rows)
    if (row.size() != n) throw std::invalid_argument("lp_solve: row size mismatch");
  if (!p.lower.empty() && p.lower.size() != n)
    throw std::invalid_argument("lp_solve: lower size mismatch");

  Vec lower = p.lower.empty() ? vec_zero(n) : p.lower;

  // Shift to x' >= 0 and flip rows so the rhs is nonnegative.
  Vec bshift(m);
  std::vector<int> rowsign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    bshift[i] = p.b[i] - dot(p.rows[i], lower);
    if (sgn(bshift[i]) < 0) rowsign[i] = -1;
  }

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(m, Vec(n + m + 1, Rat(0)));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(p.rows[i][j]) != 0)
        tab.t[i][j] = rowsign[i] > 0 ? p.rows[i][j] : Rat(-p.rows[i][j]);
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = rowsign[i] > 0 ? bshift[i] : Rat(-bshift[i]);
    tab.basis[i] = n + i;
  }

  LpSolution sol;

  // Phase 1: drive the artificials to zero.
  Vec cost1(n + m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) cost1[n + i] = 1;
  run_simplex(tab, cost1, n + m);  // bounded below by 0, never unbounded

  Rat phase1 = 0;
  for (std::size_t i = 0; i < m; ++i) phase1 += cost1[tab.basis[i]] * tab.rhs(i);
  if (sgn(phase1) > 0) {
    sol.status = LpStatus::Infeasible;
    // Farkas certificate from the phase-1 duals: y = cB . B^{-1}, flipped
    // back through the row scaling.
    sol.farkas.assign(m, Rat(0));
    for (std::size_t j = 0; j < m; ++j) {
      Rat y = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (sgn(tab.t[i][n + j]) != 0) y += cost1[tab.basis[i]] * tab.t[i][n + j];
      sol.farkas[j] = rowsign[j] > 0 ? y : Rat(-y);
    }
    return sol;
  }

  // Pivot leftover basic artificials onto problem columns where possible;
  // rows that are all-zero on problem columns are redundant and inert.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(tab.t[i][j]) != 0) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 on the real objective; artificials may not re-enter.
  Vec cost2(n + m, Rat(0));
  for (std::size_t j = 0; j < n; ++j) cost2[j] = p.c[j];
  if (!run_simplex(tab, cost2, n)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x = lower;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) sol.x[tab.basis[i]] += tab.rhs(i);
  sol.objective = dot(p.c, sol.x);
  sol.y.assign(m, Rat(0));
  for (std::size_t j = 0; j < m; ++j) {
    Rat y = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(tab.t[i][n + j]) != 0) y += cost2[tab.basis[i]] * tab.t[i][n + j];
    sol.y[j] = rowsign[j] > 0 ? y : Rat(-y);
  }
  return sol;
}

bool verify_lp_optimal(const LpProblem& p, const LpSolution& s)
{
  if (s.status != LpStatus::Optimal) return false;
  const std::size_t m = p.rows.size();
  const std::size_t n = p.c.size();
  if (s.x.size() != n || s.y.size() != m) return false;
  Vec lower = p.lower.empty() ? vec_zero(n) : p.lower;
  for (std::size_t j = 0; j < n; ++j)
    if (s.x[j] < lower[j]) return false;
  for (std::size_t i = 0; i < m; ++i)
    if (dot(p.rows[i], s.x) != p.b[i]) return false;
  // reduced costs r = c - A^T y >= 0, complementary with x - lower
  for (std::size_t j = 0; j < n; ++j) {
    Rat r = p.c[j];
    for (std::size_t i = 0; i < m; ++i) r -= p.rows[i][j] * s.y[i];
    if (sgn(r) < 0) return false;
    if (sgn(r) > 0 && s.x[j] != lower[j]) return false;
  }
  return s.objective == dot(p.c, s.x);
}

}  // namespace illum
