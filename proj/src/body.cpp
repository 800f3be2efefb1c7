#include "illum/body.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace illum {

SignProfile sign_profile(const Vec& x) {
  SignProfile p;
  p.pattern.resize(x.size());
  Rat mx = 0;
  for (const auto& v : x) {
    Rat a = rat_abs(v);
    if (a > mx) mx = a;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    int s = sgn(x[i]);
    p.pattern[i] = s;
    if (s == 0)
      p.zero_set.push_back(i);
    else
      p.support.push_back(i);
    if (sgn(mx) != 0 && rat_abs(x[i]) == mx) p.max_set.push_back(i);
  }
  return p;
}

namespace {

// Incremental exact rank via row reduction; add() reports whether v grew the
// span.
struct RankAccum {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  bool add(Vec v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (sgn(v[pivots[k]]) == 0) continue;
      Rat f = v[pivots[k]] / rows[k][pivots[k]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[k][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) != 0) {
        pivots.push_back(j);
        rows.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }
};

bool spans_full_space(std::size_t dim, const std::vector<Vec>& gens, const SymmetryClass& sym) {
  switch (sym.kind) {
    case SymKind::OneSymmetric:
      for (const auto& g : gens)
        if (!is_zero(g)) return true;
      return false;
    case SymKind::OneUnconditional: {
      std::vector<bool> hit(dim, false);
      for (const auto& g : gens)
        for (std::size_t i = 0; i < dim; ++i)
          if (sgn(g[i]) != 0) hit[i] = true;
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
    case SymKind::ExplicitGroup: {
      RankAccum acc;
      for (const auto& s : sym.group)
        for (const auto& g : gens)
          if (acc.add(apply(s, g)) && acc.rows.size() == dim) return true;
      return acc.rows.size() == dim;
    }
  }
  return false;
}

std::vector<std::size_t> order_by_abs_desc(const Vec& y) {
  std::vector<std::size_t> idx(y.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return rat_abs(y[a]) > rat_abs(y[b]);
  });
  return idx;
}

}  // namespace

SymmetricBody::SymmetricBody(std::size_t dim, std::vector<Vec> generators, SymmetryClass sym,
                             bool symbolic_only, std::size_t orbit_cap)
    : dim_(dim),
      gens_(std::move(generators)),
      sym_(std::move(sym)),
      symbolic_(symbolic_only),
      cap_(orbit_cap) {
  if (dim_ == 0) throw std::invalid_argument("body: dimension must be positive");
  if (gens_.empty()) throw std::invalid_argument("body: no generators");
  for (const auto& g : gens_)
    if (g.size() != dim_) throw std::invalid_argument("body: generator dimension mismatch");
  if (sym_.kind == SymKind::ExplicitGroup)
    for (const auto& e : sym_.group)
      if (e.perm.size() != dim_) throw std::invalid_argument("body: group dimension mismatch");
  if (!spans_full_space(dim_, gens_, sym_))
    throw std::invalid_argument("body: generators span a proper subspace");
  if (!symbolic_ && orbit_size_bound() > cap_) {
    symbolic_ = true;
    capped_ = true;
  }
}

mpz_class SymmetricBody::orbit_size_bound() const {
  mpz_class total = 0;
  for (const auto& g : gens_) total += orbit_size_estimate(g, sym_);
  return total;
}

const std::vector<Vec>& SymmetricBody::orbit_points() const {
  if (orbit_ready_) return orbit_;
  if (capped_)
    throw OrbitTooLarge("orbit size bound " + orbit_size_bound().get_str() +
                        " exceeds cap " + std::to_string(cap_));
  if (symbolic_)
    throw OrbitTooLarge("orbit expansion suppressed: symbolic-only body (bound " +
                        orbit_size_bound().get_str() + ")");
  std::set<Vec> all;
  for (const auto& g : gens_) {
    auto part = orbit_expand(g, sym_);
    all.insert(part.begin(), part.end());
  }
  orbit_.assign(all.begin(), all.end());
  orbit_ready_ = true;
  return orbit_;
}

Rat SymmetricBody::support_value(const Vec& u) const {
  if (u.size() != dim_) throw std::invalid_argument("support_value: dimension mismatch");
  bool first = true;
  Rat best = 0;
  switch (sym_.kind) {
    case SymKind::OneSymmetric: {
      Vec su = abs_desc(u);
      for (const auto& g : gens_) {
        Rat v = sorted_dot(abs_desc(g), su);
        if (first || v > best) best = v, first = false;
      }
      break;
    }
    case SymKind::OneUnconditional:
      for (const auto& g : gens_) {
        Rat v = 0;
        for (std::size_t i = 0; i < dim_; ++i) v += rat_abs(g[i]) * rat_abs(u[i]);
        if (first || v > best) best = v, first = false;
      }
      break;
    case SymKind::ExplicitGroup:
      for (const auto& s : sym_.group)
        for (const auto& g : gens_) {
          Rat v = dot(apply(s, g), u);
          if (first || v > best) best = v, first = false;
        }
      break;
  }
  return best;
}

std::pair<Vec, Rat> SymmetricBody::price(const Vec& y) const {
  if (y.size() != dim_) throw std::invalid_argument("price: dimension mismatch");
  bool first = true;
  Vec bestv;
  Rat best = 0;
  auto consider = [&](Vec v) {
    Rat val = dot(v, y);
    if (first || val > best) {
      best = val;
      bestv = std::move(v);
      first = false;
    }
  };
  switch (sym_.kind) {
    case SymKind::OneSymmetric: {
      auto idx = order_by_abs_desc(y);
      for (const auto& g : gens_) {
        Vec a = abs_desc(g);
        Vec v(dim_);
        for (std::size_t t = 0; t < dim_; ++t)
          v[idx[t]] = sgn(y[idx[t]]) < 0 ? -a[t] : a[t];
        consider(std::move(v));
      }
      break;
    }
    case SymKind::OneUnconditional:
      for (const auto& g : gens_) {
        Vec v(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
          v[i] = sgn(y[i]) < 0 ? -rat_abs(g[i]) : rat_abs(g[i]);
        consider(std::move(v));
      }
      break;
    case SymKind::ExplicitGroup:
      for (const auto& s : sym_.group)
        for (const auto& g : gens_) consider(apply(s, g));
      break;
  }
  return {bestv, best};
}

std::vector<Vec> SymmetricBody::price_columns(const Vec& y) const {
  std::set<Vec> cols;
  if (sym_.kind == SymKind::ExplicitGroup) {
    cols.insert(price(y).first);
  } else {
    auto idx = order_by_abs_desc(y);
    for (const auto& g : gens_) {
      Vec a = abs_desc(g);
      Vec v(dim_);
      if (sym_.kind == SymKind::OneSymmetric) {
        for (std::size_t t = 0; t < dim_; ++t)
          v[idx[t]] = sgn(y[idx[t]]) < 0 ? -a[t] : a[t];
      } else {
        for (std::size_t i = 0; i < dim_; ++i)
          v[i] = sgn(y[i]) < 0 ? -rat_abs(g[i]) : rat_abs(g[i]);
      }
      cols.insert(std::move(v));
    }
  }
  return {cols.begin(), cols.end()};
}

Rat SymmetricBody::gauge(const Vec& p, GaugeMode mode) const {
  if (p.size() != dim_) throw std::invalid_argument("gauge: dimension mismatch");
  if (is_zero(p)) return 0;
  if (mode == GaugeMode::Auto) {
    if (sym_.kind != SymKind::ExplicitGroup)
      mode = GaugeMode::Polar;
    else
      mode = (symbolic_ || orbit_size_bound() > 64) ? GaugeMode::ColumnGeneration
                                                    : GaugeMode::FullOrbit;
  }
  if (mode == GaugeMode::Polar) return gauge_polar(p);
  return mode == GaugeMode::FullOrbit ? gauge_full(p) : gauge_colgen(p);
}

namespace {

LpProblem gauge_master(std::size_t dim, const std::vector<Vec>& cols, const Vec& p) {
  LpProblem lp;
  lp.c.assign(cols.size(), Rat(1));
  lp.rows.assign(dim, Vec(cols.size()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) lp.rows[i][j] = cols[j][i];
  lp.b = p;
  return lp;
}

}  // namespace

Rat SymmetricBody::gauge_full(const Vec& p) const {
  const auto& pts = orbit_points();
  LpSolution s = lp_solve(gauge_master(dim_, pts, p));
  if (s.status != LpStatus::Optimal)
    throw std::domain_error("gauge: point outside the cone of the body");
  return s.objective;
}

Rat SymmetricBody::gauge_colgen(const Vec& p) const {
  std::set<Vec> colset;
  auto add_from = [&](const Vec& y) {
    for (auto& v : price_columns(y))
      if (!is_zero(v)) colset.insert(std::move(v));
  };
  add_from(p);
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec e = basis(dim_, i);
    add_from(e);
    add_from(neg(e));
  }
  for (;;) {
    std::vector<Vec> cols(colset.begin(), colset.end());
    LpSolution s = lp_solve(gauge_master(dim_, cols, p));
    if (s.status == LpStatus::Unbounded)
      throw std::logic_error("gauge: master cannot be unbounded");
    std::size_t before = colset.size();
    if (s.status == LpStatus::Infeasible) {
      for (auto& v : price_columns(s.farkas))
        if (sgn(dot(v, s.farkas)) > 0) colset.insert(std::move(v));
      if (colset.size() == before)
        throw std::domain_error("gauge: point outside the cone of the body");
    } else {
      for (auto& v : price_columns(s.y))
        if (dot(v, s.y) > 1) colset.insert(std::move(v));
      if (colset.size() == before) return s.objective;
    }
  }
}

// gauge(p) = max <p,u> over the polar body.  Reduced to the canonical cone
// of the symmetry class, the polar is cut out by one half-space per
// generator, so the whole computation is an n-variable LP independent of the
// orbit size.
Rat SymmetricBody::gauge_polar(const Vec& p) const {
  if (sym_.kind == SymKind::ExplicitGroup)
    throw std::invalid_argument("gauge: polar route needs a coordinate symmetry class");
  bool sorted = sym_.kind == SymKind::OneSymmetric;
  Vec a;
  if (sorted)
    a = abs_desc(p);
  else {
    a.reserve(dim_);
    for (const auto& v : p) a.push_back(rat_abs(v));
  }
  std::size_t k = gens_.size();
  std::size_t mono = sorted ? dim_ - 1 : 0;
  std::size_t rows = mono + k;
  std::size_t vars = dim_ + rows;
  LpProblem lp;
  lp.c.assign(vars, Rat(0));
  for (std::size_t i = 0; i < dim_; ++i) lp.c[i] = -a[i];
  lp.rows.assign(rows, Vec(vars, Rat(0)));
  lp.b.assign(rows, Rat(0));
  for (std::size_t r = 0; r < mono; ++r) {
    lp.rows[r][r] = 1;
    lp.rows[r][r + 1] = -1;
    lp.rows[r][dim_ + r] = -1;
  }
  for (std::size_t g = 0; g < k; ++g) {
    Vec key;
    if (sorted)
      key = abs_desc(gens_[g]);
    else {
      key.reserve(dim_);
      for (const auto& v : gens_[g]) key.push_back(rat_abs(v));
    }
    for (std::size_t i = 0; i < dim_; ++i) lp.rows[mono + g][i] = key[i];
    lp.rows[mono + g][dim_ + mono + g] = 1;
    lp.b[mono + g] = 1;
  }
  LpSolution s = lp_solve(lp);
  if (s.status != LpStatus::Optimal)
    throw std::logic_error("gauge: polar master must be optimal");
  return -s.objective;
}

bool SymmetricBody::dominated_fast_path(const Vec& p, bool strict) const {
  if (sym_.kind == SymKind::ExplicitGroup) return false;
  bool sorted = sym_.kind == SymKind::OneSymmetric;
  Vec a;
  if (sorted)
    a = abs_desc(p);
  else {
    a.reserve(dim_);
    for (const auto& v : p) a.push_back(rat_abs(v));
  }
  for (const auto& g : gens_) {
    Vec b;
    if (sorted)
      b = abs_desc(g);
    else {
      b.reserve(dim_);
      for (const auto& v : g) b.push_back(rat_abs(v));
    }
    bool ok = true;
    for (std::size_t i = 0; i < dim_ && ok; ++i) {
      if (a[i] > b[i]) ok = false;
      if (strict && sgn(a[i]) != 0 && a[i] == b[i]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool SymmetricBody::is_member(const Vec& p) const {
  if (dominated_fast_path(p, false)) return true;
  return gauge(p) <= 1;
}

bool SymmetricBody::is_interior(const Vec& p) const {
  if (dominated_fast_path(p, true)) return true;
  return gauge(p) < 1;
}

namespace {

// Strict separators in the canonical cone: u strictly decreasing and positive
// under full permutation symmetry, merely positive under sign symmetry alone.
// Strict rearrangement separates the representative from its own orbit for
// free, and every foreign orbit attains its maximum at its own representative,
// so one tiny LP per class settles extremality.
bool class_separated(const std::vector<Vec>& reps, std::size_t a, bool sorted_cone) {
  std::size_t n = reps[a].size(), nc = reps.size();
  std::size_t rows = n + (nc - 1) + 1;
  std::size_t vars = n + 1 + rows;
  LpProblem lp;
  lp.c.assign(vars, Rat(0));
  lp.c[n] = -1;
  lp.rows.assign(rows, Vec(vars, Rat(0)));
  lp.b.assign(rows, Rat(0));
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i, ++r) {
    lp.rows[r][i] = 1;
    if (sorted_cone && i + 1 < n) lp.rows[r][i + 1] = -1;
    lp.rows[r][n] = -1;
    lp.rows[r][n + 1 + r] = -1;
  }
  for (std::size_t b = 0; b < nc; ++b) {
    if (b == a) continue;
    for (std::size_t i = 0; i < n; ++i) lp.rows[r][i] = reps[a][i] - reps[b][i];
    lp.rows[r][n] = -1;
    lp.rows[r][n + 1 + r] = -1;
    ++r;
  }
  for (std::size_t i = 0; i < n; ++i) lp.rows[r][i] = 1;
  lp.rows[r][n + 1 + r] = 1;
  lp.b[r] = 1;
  LpSolution s = lp_solve(lp);
  return s.status == LpStatus::Optimal && sgn(s.objective) < 0;
}

bool outside_hull_of_rest(const std::vector<Vec>& pts, const Vec& rep, std::size_t dim) {
  LpProblem lp;
  std::size_t k = pts.size() - 1;
  lp.c.assign(k, Rat(0));
  lp.rows.assign(dim + 1, Vec(k));
  lp.b = rep;
  lp.b.push_back(1);
  std::size_t j = 0;
  for (const auto& w : pts) {
    if (w == rep) continue;
    for (std::size_t i = 0; i < dim; ++i) lp.rows[i][j] = w[i];
    lp.rows[dim][j] = 1;
    ++j;
  }
  return lp_solve(lp).status == LpStatus::Infeasible;
}

}  // namespace

const std::vector<Vec>& SymmetricBody::vertices() const {
  if (vertices_ready_) return vertices_;
  const auto& pts = orbit_points();
  std::map<Vec, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < pts.size(); ++i)
    classes[canonical_key(pts[i], sym_)].push_back(i);
  std::vector<Vec> reps;
  reps.reserve(classes.size());
  for (const auto& [rep, members] : classes) reps.push_back(rep);
  std::vector<Vec> verts;
  std::size_t a = 0;
  for (const auto& [rep, members] : classes) {
    bool extreme = sym_.kind == SymKind::ExplicitGroup
                       ? outside_hull_of_rest(pts, rep, dim_)
                       : class_separated(reps, a, sym_.kind == SymKind::OneSymmetric);
    if (extreme)
      for (std::size_t i : members) verts.push_back(pts[i]);
    ++a;
  }
  std::sort(verts.begin(), verts.end());
  vertices_ = std::move(verts);
  vertices_ready_ = true;
  return vertices_;
}

const BodyInvariants& SymmetricBody::invariants() const {
  if (invariants_ready_) return inv_;
  BodyInvariants r;
  Vec prefix = vec_zero(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    prefix[k] = 1;
    if (!is_member(prefix)) break;
    r.m = k + 1;
  }
  r.dist = gauge(ones(dim_));
  r.theta = Rat(1) / r.dist;
  r.eta = (1 - r.theta) / Rat(static_cast<long>(dim_) + 2);
  inv_ = std::move(r);
  invariants_ready_ = true;
  return inv_;
}

SymmetricBody normalize_to_Sn(const SymmetricBody& B) {
  std::size_t n = B.dim();
  std::vector<Vec> gens = B.generators();
  switch (B.symmetry().kind) {
    case SymKind::OneSymmetric: {
      Rat c = B.gauge(basis(n, 0));
      for (auto& g : gens) g = scale(c, g);
      break;
    }
    case SymKind::OneUnconditional: {
      for (std::size_t i = 0; i < n; ++i) {
        Rat c = B.gauge(basis(n, i));
        for (auto& g : gens) g[i] *= c;
      }
      break;
    }
    case SymKind::ExplicitGroup:
      throw std::invalid_argument("normalize_to_Sn: only the coordinate symmetry classes");
  }
  return SymmetricBody(n, std::move(gens), B.symmetry(), B.symbolic_only(), B.orbit_cap());
}

SymmetricBody raw_polytope(std::size_t dim, std::vector<Vec> points) {
  return SymmetricBody(dim, std::move(points), make_explicit_group({sp_identity(dim)}));
}

bool is_alpha_symmetric(const SymmetricBody& K, const Rat& alpha) {
  auto group = full_signed_perms(K.dim());
  for (const auto& v : K.vertices())
    for (const auto& s : group) {
      try {
        if (K.gauge(apply(s, v)) > alpha) return false;
      } catch (const std::domain_error&) {
        return false;
      }
    }
  return true;
}

Rat symmetrized_gauge(const SymmetricBody& K, const Vec& x) {
  Rat best = 0;
  bool first = true;
  for (const auto& s : full_signed_perms(K.dim())) {
    Rat g = K.gauge(apply(s, x));
    if (first || g > best) best = g, first = false;
  }
  return best;
}

}  // namespace illum
