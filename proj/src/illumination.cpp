#include "illum/illumination.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <exception>
#include <set>
#include <stdexcept>

namespace illum {

namespace {

// Master LP columns: [mu_0..mu_{k-1}, eps, t, s1, s2, s3]; rows 1..n carry
// x + eps*d = sum mu_i v_i, then sum mu + t + s1 = 1, t - eps + s2 = 0,
// eps + s3 = 1. Objective: minimize -t.
LpProblem illum_master(const SymmetricBody& B, const std::vector<Vec>& cols, const Vec& x,
                       const Vec& d) {
  std::size_t n = B.dim(), k = cols.size();
  LpProblem lp;
  lp.c.assign(k + 5, Rat(0));
  lp.c[k + 1] = -1;
  lp.rows.assign(n + 3, Vec(k + 5, Rat(0)));
  lp.b.assign(n + 3, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) lp.rows[i][j] = cols[j][i];
    lp.rows[i][k] = -d[i];
    lp.b[i] = x[i];
  }
  for (std::size_t j = 0; j < k; ++j) lp.rows[n][j] = 1;
  lp.rows[n][k + 1] = 1;
  lp.rows[n][k + 2] = 1;
  lp.b[n] = 1;
  lp.rows[n + 1][k + 1] = 1;
  lp.rows[n + 1][k] = -1;
  lp.rows[n + 1][k + 3] = 1;
  lp.rows[n + 2][k] = 1;
  lp.rows[n + 2][k + 4] = 1;
  lp.b[n + 2] = 1;
  return lp;
}

std::pair<bool, Certificate> illuminates_core(const SymmetricBody& B, const Vec& x,
                                              const Vec& d) {
  std::size_t n = B.dim();
  std::set<Vec> colset;
  auto seed = [&](const Vec& y) {
    for (auto& v : B.price_columns(y))
      if (!is_zero(v)) colset.insert(std::move(v));
  };
  seed(x);
  seed(add(x, d));
  for (;;) {
    std::vector<Vec> cols(colset.begin(), colset.end());
    LpSolution s = lp_solve(illum_master(B, cols, x, d));
    if (s.status == LpStatus::Unbounded)
      throw std::logic_error("illuminates: slack is bounded by construction");
    const Vec& y = s.status == LpStatus::Infeasible ? s.farkas : s.y;
    Vec u(y.begin(), y.begin() + n);
    Rat a = -y[n];
    bool grew = false;
    for (auto& v : B.price_columns(u))
      if (dot(v, u) > a && colset.insert(std::move(v)).second) grew = true;
    if (grew) continue;
    if (s.status == LpStatus::Infeasible)
      throw std::logic_error("illuminates: master infeasible although x lies in the body");
    if (sgn(s.objective) < 0) {
      Certificate c;
      c.kind = CertKind::Witness;
      c.step = s.x[cols.size()];
      c.interior_gauge = B.gauge(add(x, scale(c.step, d)));
      if (sgn(c.step) <= 0 || c.interior_gauge >= 1)
        throw std::logic_error("illuminates: witness failed re-validation");
      return {true, c};
    }
    Rat m = linf(u);
    if (sgn(m) == 0) throw std::logic_error("illuminates: zero refutation normal");
    Certificate c;
    c.kind = CertKind::Refutation;
    c.normal = scale(1 / m, u);
    c.inner_product = dot(d, c.normal);
    if (B.support_value(c.normal) != dot(x, c.normal) || sgn(c.inner_product) < 0)
      throw std::logic_error("illuminates: refutation failed re-validation");
    return {false, c};
  }
}

// Frame for the one-sided derivative of eps -> gauge(x + eps*d): stable signs,
// the canonical ordering of |x + eps*d| for small eps, per-slot level and
// slope, and the horizon eps0 below which that pattern holds.
struct DerivFrame {
  std::vector<int> sign;
  std::vector<std::size_t> ord;
  Vec a, r;
  Rat eps0;  // 0 = no finite horizon
};

DerivFrame deriv_frame(const Vec& x, const Vec& d, bool sorted) {
  std::size_t n = x.size();
  DerivFrame f;
  f.sign.resize(n);
  Vec lev(n), slo(n);
  for (std::size_t i = 0; i < n; ++i) {
    int s = sgn(x[i]) != 0 ? sgn(x[i]) : sgn(d[i]);
    f.sign[i] = s;
    lev[i] = rat_abs(x[i]);
    slo[i] = sgn(x[i]) != 0 ? Rat(Rat(s) * d[i]) : rat_abs(d[i]);
  }
  f.ord.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.ord[i] = i;
  if (sorted)
    std::sort(f.ord.begin(), f.ord.end(), [&](std::size_t i, std::size_t j) {
      if (lev[i] != lev[j]) return lev[i] > lev[j];
      if (slo[i] != slo[j]) return slo[i] > slo[j];
      return i < j;
    });
  f.a.resize(n);
  f.r.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.a[i] = lev[f.ord[i]];
    f.r[i] = slo[f.ord[i]];
  }
  f.eps0 = 0;
  auto tighten = [&](const Rat& cand) {
    if (sgn(cand) > 0 && (sgn(f.eps0) == 0 || cand < f.eps0)) f.eps0 = cand;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0 && sgn(slo[i]) < 0) tighten(Rat(lev[i] / -slo[i]));
  if (sorted)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (f.a[i] > f.a[j] && f.r[j] > f.r[i])
          tighten(Rat((f.a[i] - f.a[j]) / (f.r[j] - f.r[i])));
  return f;
}

std::pair<bool, Certificate> illuminates_polar_core(const SymmetricBody& B, const Vec& x,
                                                    const Vec& d) {
  bool sorted = B.symmetry().kind == SymKind::OneSymmetric;
  std::size_t n = B.dim();
  const auto& gens = B.generators();
  std::size_t k = gens.size();
  DerivFrame f = deriv_frame(x, d, sorted);

  // maximize <r,w> over the gauge contact face: w in the canonical cone,
  // <|g|,w> <= 1 per generator, <a,w> = 1.
  std::size_t mono = sorted ? n - 1 : 0;
  std::size_t rows = mono + k + 1;
  std::size_t vars = n + mono + k;
  LpProblem lp;
  lp.c.assign(vars, Rat(0));
  for (std::size_t i = 0; i < n; ++i) lp.c[i] = -f.r[i];
  lp.rows.assign(rows, Vec(vars, Rat(0)));
  lp.b.assign(rows, Rat(0));
  for (std::size_t rr = 0; rr < mono; ++rr) {
    lp.rows[rr][rr] = 1;
    lp.rows[rr][rr + 1] = -1;
    lp.rows[rr][n + rr] = -1;
  }
  for (std::size_t g = 0; g < k; ++g) {
    Vec key;
    if (sorted)
      key = abs_desc(gens[g]);
    else {
      key.reserve(n);
      for (const auto& v : gens[g]) key.push_back(rat_abs(v));
    }
    for (std::size_t i = 0; i < n; ++i) lp.rows[mono + g][i] = key[i];
    lp.rows[mono + g][n + mono + g] = 1;
    lp.b[mono + g] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) lp.rows[mono + k][i] = f.a[i];
  lp.b[mono + k] = 1;
  LpSolution s = lp_solve(lp);
  if (s.status != LpStatus::Optimal)
    throw std::logic_error("illuminates: contact face LP must be optimal");

  if (sgn(s.objective) <= 0) {
    // derivative >= 0: the maximizer is a supporting normal not opposed by d
    Vec u(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) u[f.ord[i]] = Rat(Rat(f.sign[f.ord[i]]) * s.x[i]);
    Rat m = linf(u);
    if (sgn(m) == 0) throw std::logic_error("illuminates: zero contact normal");
    Certificate c;
    c.kind = CertKind::Refutation;
    c.normal = scale(1 / m, u);
    c.inner_product = dot(d, c.normal);
    if (B.support_value(c.normal) != dot(x, c.normal) || sgn(c.inner_product) < 0)
      throw std::logic_error("illuminates: refutation failed re-validation");
    return {false, c};
  }

  Rat eps = sgn(f.eps0) > 0 ? Rat(f.eps0 / 2) : Rat(1);
  for (int it = 0; it < 64; ++it, eps /= 2) {
    Rat g = B.gauge(add(x, scale(eps, d)));
    if (g < 1) {
      Certificate c;
      c.kind = CertKind::Witness;
      c.step = eps;
      c.interior_gauge = g;
      return {true, c};
    }
  }
  return illuminates_core(B, x, d);
}

std::pair<bool, Certificate> illuminates_fast(const SymmetricBody& B, const Vec& x,
                                              const Vec& d) {
  if (B.symmetry().kind == SymKind::ExplicitGroup) return illuminates_core(B, x, d);
  return illuminates_polar_core(B, x, d);
}

}  // namespace

std::pair<bool, Certificate> illuminates(const SymmetricBody& B, const Vec& x, const Vec& d) {
  if (is_zero(d)) throw std::invalid_argument("illuminates: zero direction");
  if (B.gauge(x) != 1) throw std::invalid_argument("illuminates: x not on the boundary");
  return illuminates_core(B, x, d);
}

std::pair<bool, Certificate> illuminates_polar(const SymmetricBody& B, const Vec& x,
                                               const Vec& d) {
  if (is_zero(d)) throw std::invalid_argument("illuminates: zero direction");
  if (B.gauge(x) != 1) throw std::invalid_argument("illuminates: x not on the boundary");
  return illuminates_fast(B, x, d);
}

bool validate_certificate(const SymmetricBody& B, const Vec& x, const Vec& d,
                          const Certificate& c) {
  if (c.kind == CertKind::Witness) {
    if (sgn(c.step) <= 0) return false;
    Rat g = B.gauge(add(x, scale(c.step, d)));
    return g == c.interior_gauge && g < 1;
  }
  if (is_zero(c.normal)) return false;
  if (B.support_value(c.normal) != dot(x, c.normal)) return false;
  return dot(d, c.normal) == c.inner_product && sgn(c.inner_product) >= 0;
}

bool is_outer_normal(const SymmetricBody& B, const Vec& x, const Vec& u) {
  return B.support_value(u) == dot(x, u);
}

bool deep_illuminates(const Vec& d, const Vec& x) {
  if (d.size() != x.size()) throw std::invalid_argument("deep_illuminates: dimension mismatch");
  if (linf(d) != 1) return false;
  bool max_in_support = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    if (sgn(x[i]) != -sgn(d[i])) return false;
    if (rat_abs(d[i]) == 1) max_in_support = true;
  }
  return max_in_support;
}

std::vector<std::size_t> illuminated_vertices(const SymmetricBody& B, const Vec& d) {
  const auto& verts = B.vertices();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (illuminates_fast(B, verts[i], d).first) out.push_back(i);
  return out;
}

namespace {

CoverReport verify_core(const SymmetricBody& B, const DirectionSet& D, std::string body_id,
                        std::string set_id, bool parallel) {
  for (const auto& dir : D)
    if (is_zero(dir.v) || dir.v.size() != B.dim())
      throw std::invalid_argument("verify_set: malformed direction " + dir.label);
  CoverReport rep;
  rep.body_id = std::move(body_id);
  rep.set_id = std::move(set_id);
  const auto& verts = B.vertices();
  rep.outcomes.resize(verts.size());

  auto work = [&](std::size_t vi) {
    const Vec& x = verts[vi];
    VertexOutcome out;
    out.vertex = x;
    std::vector<char> rejected(D.size(), 0);
    auto attempt = [&](std::size_t j) {
      auto [ok, cert] = illuminates_fast(B, x, D[j].v);
      if (ok) {
        out.illuminated = true;
        out.direction_index = j;
        out.certificate = cert;
      } else {
        rejected[j] = 1;
      }
      return ok;
    };
    for (std::size_t j = 0; j < D.size() && !out.illuminated; ++j)
      if (deep_illuminates(D[j].v, x)) attempt(j);
    for (std::size_t j = 0; j < D.size() && !out.illuminated; ++j)
      if (!rejected[j]) attempt(j);
    if (!out.illuminated)
      for (std::size_t j = 0; j < D.size(); ++j)
        out.refutations.emplace_back(j, illuminates_fast(B, x, D[j].v).second);
    rep.outcomes[vi] = std::move(out);
  };

  if (parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long vi = 0; vi < static_cast<long>(verts.size()); ++vi) {
      try {
        work(static_cast<std::size_t>(vi));
      } catch (...) {
#pragma omp critical
        err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t vi = 0; vi < verts.size(); ++vi) work(vi);
  }

  rep.covers = true;
  for (std::size_t vi = 0; vi < rep.outcomes.size(); ++vi)
    if (!rep.outcomes[vi].illuminated) {
      rep.covers = false;
      rep.uncovered.push_back(vi);
    }
  return rep;
}

}  // namespace

CoverReport verify_set(const SymmetricBody& B, const DirectionSet& D, std::string body_id,
                       std::string set_id) {
  return verify_core(B, D, std::move(body_id), std::move(set_id), true);
}

CoverReport verify_set_serial(const SymmetricBody& B, const DirectionSet& D,
                              std::string body_id, std::string set_id) {
  return verify_core(B, D, std::move(body_id), std::move(set_id), false);
}

MinCover min_cover(const SymmetricBody& B, const DirectionSet& pool,
                   std::uint64_t node_budget) {
  const auto& verts = B.vertices();
  if (verts.size() > 64) throw std::invalid_argument("min_cover: more than 64 vertices");
  std::size_t nv = verts.size(), np = pool.size();
  std::vector<std::uint64_t> mask(np, 0);
  for (std::size_t j = 0; j < np; ++j)
    for (std::size_t vi : illuminated_vertices(B, pool[j].v)) mask[j] |= std::uint64_t(1) << vi;
  std::uint64_t full = nv == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << nv) - 1;

  MinCover res;
  // Greedy incumbent; also detects vertices nothing in the pool covers.
  std::vector<std::size_t> incumbent;
  {
    std::uint64_t uncov = full;
    while (uncov) {
      std::size_t bestj = np;
      int bestc = 0;
      for (std::size_t j = 0; j < np; ++j) {
        int c = std::popcount(mask[j] & uncov);
        if (c > bestc) bestc = c, bestj = j;
      }
      if (bestj == np) {
        res.exhausted = true;
        return res;  // some vertex is uncoverable
      }
      incumbent.push_back(bestj);
      uncov &= ~mask[bestj];
    }
  }

  std::vector<std::size_t> best = incumbent, chosen;
  bool aborted = false;
  auto dfs = [&](auto&& self, std::uint64_t uncov) -> void {
    if (aborted) return;
    if (++res.nodes > node_budget) {
      aborted = true;
      return;
    }
    if (!uncov) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    int maxcov = 0;
    for (std::size_t j = 0; j < np; ++j)
      maxcov = std::max(maxcov, std::popcount(mask[j] & uncov));
    if (maxcov == 0) return;
    std::size_t lb = (std::popcount(uncov) + maxcov - 1) / maxcov;
    if (chosen.size() + lb >= best.size()) return;
    std::size_t branch_v = nv;
    std::size_t branch_deg = np + 1;
    for (std::size_t vi = 0; vi < nv; ++vi) {
      if (!((uncov >> vi) & 1)) continue;
      std::size_t deg = 0;
      for (std::size_t j = 0; j < np; ++j)
        if ((mask[j] >> vi) & 1) ++deg;
      if (deg < branch_deg) branch_deg = deg, branch_v = vi;
    }
    for (std::size_t j = 0; j < np && !aborted; ++j) {
      if (!((mask[j] >> branch_v) & 1)) continue;
      chosen.push_back(j);
      self(self, uncov & ~mask[j]);
      chosen.pop_back();
    }
  };
  dfs(dfs, full);

  std::sort(best.begin(), best.end());
  res.feasible = true;
  res.exhausted = !aborted;
  res.size = best.size();
  res.subset = std::move(best);
  return res;
}

PairCensus opposite_pair_census(const DirectionSet& D) {
  std::set<Vec> s;
  for (const auto& d : D) s.insert(d.v);
  PairCensus c;
  for (const auto& v : s) {
    Vec m = neg(v);
    if (s.count(m)) {
      if (v < m) ++c.pairs;
    } else {
      ++c.unpaired;
    }
  }
  return c;
}

}  // namespace illum
