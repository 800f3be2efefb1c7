#include "illum/sets.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace illum {

namespace {

void require_dim(int n, int lo, int hi, const char* who) {
  if (n < lo)
    throw std::invalid_argument(std::string(who) + ": n must be at least " + std::to_string(lo));
  if (n > hi)
    throw std::invalid_argument(std::string(who) + ": n capped at " + std::to_string(hi));
}

void require_delta(const Rat& delta, const char* who) {
  if (delta <= 0 || delta >= 1)
    throw std::invalid_argument(std::string(who) + ": delta must lie in (0,1)");
}

std::string tag_label(const std::string& tag, std::size_t i) {
  return tag + "[" + std::to_string(i) + "]";
}

DirectionSet labeled(std::vector<Vec> vs, const std::string& tag) {
  DirectionSet out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    out.push_back({std::move(vs[i]), tag_label(tag, i)});
  return out;
}

// Sign vectors of {-1,1}^m in ascending lexicographic order with -1 < 1 and
// coordinate 0 most significant.
std::vector<std::vector<int>> sign_cube(int m) {
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t(1) << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = ((mask >> (m - 1 - i)) & 1) ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

Vec unit(int n, int i, int s) {
  Vec v = vec_zero(n);
  v[i] = s;
  return v;
}

struct TernaryMask {
  std::uint32_t supp = 0;  // bit i set iff v[i] != 0
  std::uint32_t neg = 0;   // bit i set iff v[i] < 0
};

TernaryMask to_ternary(const Vec& v, int n, const char* who) {
  if (int(v.size()) != n)
    throw std::invalid_argument(std::string(who) + ": entry dimension mismatch");
  TernaryMask m;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 && v[i] != -1)
      throw std::invalid_argument(std::string(who) + ": entries must lie in {-1,0,1}");
    m.supp |= std::uint32_t(1) << i;
    if (v[i] < 0) m.neg |= std::uint32_t(1) << i;
  }
  if (m.supp == 0) throw std::invalid_argument(std::string(who) + ": zero vector");
  return m;
}

// (P1) instance lists, shared by p1_check and r0_greedy: every y with
// 1 <= k <= ceil(n/2) nonzero entries, as support/sign masks.
std::vector<TernaryMask> p1_patterns(int n) {
  const int kmax = (n + 1) / 2;
  std::vector<TernaryMask> out;
  for (std::uint32_t supp = 1; supp < (std::uint32_t(1) << n); ++supp) {
    const int k = __builtin_popcount(supp);
    if (k > kmax) continue;
    // Enumerate sign choices on the support.
    std::vector<int> bits;
    for (int i = 0; i < n; ++i)
      if (supp & (std::uint32_t(1) << i)) bits.push_back(i);
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << k); ++s) {
      std::uint32_t neg = 0;
      for (int j = 0; j < k; ++j)
        if (s & (std::uint32_t(1) << j)) neg |= std::uint32_t(1) << bits[j];
      out.push_back({supp, neg});
    }
  }
  return out;
}

bool extends(const TernaryMask& z, const TernaryMask& y) {
  return (y.supp & ~z.supp) == 0 && (z.neg & y.supp) == y.neg;
}

bool p1_core(const std::vector<TernaryMask>& r0, int n, bool parallel) {
  // Bucket candidates by nonzero count so each pattern only scans its level.
  std::vector<std::vector<TernaryMask>> by_nnz(n + 1);
  for (const auto& z : r0) by_nnz[__builtin_popcount(z.supp)].push_back(z);
  const auto patterns = p1_patterns(n);
  std::atomic<bool> ok{true};
  const std::int64_t count = std::int64_t(patterns.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t t = 0; t < count; ++t) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    const auto& y = patterns[std::size_t(t)];
    const int level = 2 * __builtin_popcount(y.supp) - 1;
    bool hit = false;
    for (const auto& z : by_nnz[level])
      if (extends(z, y)) {
        hit = true;
        break;
      }
    if (!hit) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

std::vector<TernaryMask> ternary_masks(const DirectionSet& r0, int n, const char* who) {
  std::vector<TernaryMask> masks;
  masks.reserve(r0.size());
  for (const auto& d : r0) masks.push_back(to_ternary(d.v, n, who));
  return masks;
}

Vec from_ternary(const TernaryMask& m, int n) {
  Vec v = vec_zero(n);
  for (int i = 0; i < n; ++i)
    if (m.supp & (std::uint32_t(1) << i)) v[i] = (m.neg & (std::uint32_t(1) << i)) ? -1 : 1;
  return v;
}

}  // namespace

GrayCodeSequence gray_code(int n) {
  require_dim(n, 2, 16, "gray_code");
  std::vector<std::vector<int>> seq = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (int m = 3; m <= n; ++m) {
    std::vector<std::vector<int>> next;
    next.reserve(seq.size() * 2);
    for (const auto& w : seq) {
      auto v = w;
      v.push_back(1);
      next.push_back(std::move(v));
    }
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      auto v = *it;
      v.push_back(-1);
      next.push_back(std::move(v));
    }
    seq = std::move(next);
  }
  return {n, std::move(seq)};
}

DirectionSet big_set(int n, const Rat& delta) {
  require_dim(n, 2, 12, "big_set");
  require_delta(delta, "big_set");
  std::vector<Vec> vs;
  vs.reserve(std::size_t(n) << n);
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1})
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
        Vec v(n);
        v[i] = s;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          v[j] = ((mask >> (n - 2 - pos)) & 1) ? -delta : delta;
          ++pos;
        }
        vs.push_back(std::move(v));
      }
  return labeled(std::move(vs), "g");
}

DirectionSet method1_set(int n, const Rat& delta) {
  require_dim(n, 2, 14, "method1_set");
  require_delta(delta, "method1_set");
  const auto gray = gray_code(n).sequence;
  const std::size_t m = gray.size();
  std::vector<Vec> vs;
  vs.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& w = gray[r];
    const auto& next = gray[(r + 1) % m];
    int flip = -1;
    for (int i = 0; i < n; ++i)
      if (w[i] != next[i]) {
        if (flip >= 0) throw std::logic_error("method1_set: non-adjacent Gray pair");
        flip = i;
      }
    if (flip < 0) throw std::logic_error("method1_set: degenerate Gray pair");
    Vec d(n);
    for (int i = 0; i < n; ++i) d[i] = (i == flip) ? Rat(-w[i]) : -delta * w[i];
    vs.push_back(std::move(d));
  }
  return labeled(std::move(vs), "method1");
}

DirectionSet method1_set(int n) { return method1_set(n, frac(1, n + 1)); }

DirectionSet method2_set(int n, const Rat& delta) {
  require_dim(n, 2, 14, "method2_set");
  require_delta(delta, "method2_set");
  std::vector<Vec> cur = {{Rat(1), delta}, {Rat(-1), -delta}, {delta, Rat(-1)}, {-delta, Rat(1)}};
  for (int m = 3; m <= n; ++m) {
    std::vector<Vec> next;
    next.reserve(cur.size() * 2);
    for (const auto& d : cur) {
      Vec v = d;
      v.push_back(sgn(d[m - 2]) > 0 ? delta : -delta);
      next.push_back(std::move(v));
    }
    for (const auto& d : cur) {
      Vec v(m);
      for (int i = 0; i < m - 1; ++i) v[i] = sgn(d[i]) > 0 ? delta : -delta;
      v[m - 1] = Rat(-sgn(d[m - 2]));
      next.push_back(std::move(v));
    }
    cur = std::move(next);
  }
  return labeled(std::move(cur), "method2");
}

DirectionSet method2_set(int n) { return method2_set(n, frac(1, n + 1)); }

DirectionSet minus2_set(int n, const Rat& delta) {
  require_dim(n, 3, 14, "minus2_set");
  auto full = method2_set(n, delta);
  Vec drop(n, delta);
  drop[n - 2] = -delta;
  drop[n - 1] = 1;
  const Vec drop_neg = neg(drop);
  std::vector<Vec> vs;
  vs.reserve(full.size() - 2);
  std::size_t removed = 0;
  for (auto& d : full) {
    if (d.v == drop || d.v == drop_neg) {
      ++removed;
      continue;
    }
    vs.push_back(std::move(d.v));
  }
  if (removed != 2) throw std::logic_error("minus2_set: expected exactly one opposite pair to drop");
  return labeled(std::move(vs), "minus2");
}

DirectionSet minus2_set(int n) { return minus2_set(n, frac(1, n + 1)); }

DirectionSet theorem_e_set(int n, const Rat& eta) {
  require_dim(n, 3, 14, "theorem_e_set");
  const Rat delta = frac(1, n + 1);
  if (eta <= 0 || eta >= delta)
    throw std::invalid_argument("theorem_e_set: eta must lie in (0, 1/(n+1))");
  auto base = minus2_set(n, delta);
  Vec drop(n, delta);
  drop[0] = 1;
  const Vec drop_neg = neg(drop);
  std::vector<Vec> vs;
  vs.reserve(base.size());
  std::size_t removed = 0;
  for (auto& d : base) {
    if (d.v == drop || d.v == drop_neg) {
      ++removed;
      continue;
    }
    vs.push_back(std::move(d.v));
  }
  if (removed != 2) throw std::logic_error("theorem_e_set: expected the all-plus pair in minus2_set");
  Vec bent(n, delta);
  bent[0] = 1;
  bent[n - 2] = eta;
  vs.push_back(bent);
  vs.push_back(neg(bent));
  return labeled(std::move(vs), "thme");
}

DirectionSet t1(int n) {
  require_dim(n, 2, 14, "t1");
  std::vector<Vec> vs;
  for (const auto& w : sign_cube(n)) {
    bool has_minus = false;
    for (int i = 0; i < n - 1 && !has_minus; ++i) has_minus = w[i] < 0;
    if (!has_minus) continue;
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = w[i];
    vs.push_back(std::move(v));
  }
  Vec tail = ones(n);
  tail[n - 1] = 0;
  vs.push_back(std::move(tail));
  return labeled(std::move(vs), "t1");
}

DirectionSet t2(int n) {
  require_dim(n, 2, 14, "t2");
  std::vector<Vec> vs;
  for (const auto& w : sign_cube(n - 1)) {
    Vec v = vec_zero(n);
    for (int i = 0; i < n - 1; ++i) v[i] = w[i];
    vs.push_back(std::move(v));
  }
  vs.push_back(unit(n, n - 1, -1));
  vs.push_back(unit(n, n - 1, 1));
  return labeled(std::move(vs), "t2");
}

DirectionSet t2prime(int n) {
  require_dim(n, 2, 14, "t2prime");
  std::vector<Vec> vs;
  for (const auto& w : sign_cube(n - 1)) {
    Vec v = vec_zero(n);
    for (int i = 0; i < n - 1; ++i) v[i] = w[i];
    vs.push_back(std::move(v));
  }
  for (int i = 0; i < n; ++i) {
    vs.push_back(unit(n, i, -1));
    vs.push_back(unit(n, i, 1));
  }
  return labeled(std::move(vs), "t2prime");
}

DirectionSet r0_full(int n) {
  require_dim(n, 2, 10, "r0_full");
  std::vector<Vec> vs;
  // Ascending base-3 enumeration, coordinate 0 most significant.
  std::vector<int> digits(n, -1);
  while (true) {
    int nnz = 0;
    for (int x : digits) nnz += x != 0;
    if (nnz % 2 == 1) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = digits[i];
      vs.push_back(std::move(v));
    }
    int pos = n - 1;
    while (pos >= 0 && digits[pos] == 1) digits[pos--] = -1;
    if (pos < 0) break;
    ++digits[pos];
  }
  return labeled(std::move(vs), "r0");
}

bool p1_check(const DirectionSet& r0, int n) {
  require_dim(n, 2, 14, "p1_check");
  return p1_core(ternary_masks(r0, n, "p1_check"), n, true);
}

bool p1_check_serial(const DirectionSet& r0, int n) {
  require_dim(n, 2, 14, "p1_check");
  return p1_core(ternary_masks(r0, n, "p1_check"), n, false);
}

DirectionSet r0_greedy(int n, std::uint64_t seed, std::uint64_t budget) {
  require_dim(n, 2, 14, "r0_greedy");
  const auto patterns = p1_patterns(n);
  std::mt19937_64 rng(seed);

  // Candidates: every odd-support ternary vector, one bucket per (P1) level.
  std::vector<TernaryMask> candidates;
  for (std::uint32_t supp = 1; supp < (std::uint32_t(1) << n); ++supp) {
    const int nnz = __builtin_popcount(supp);
    if (nnz % 2 == 0 || nnz > n - (n % 2 == 0)) continue;
    std::vector<int> bits;
    for (int i = 0; i < n; ++i)
      if (supp & (std::uint32_t(1) << i)) bits.push_back(i);
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << nnz); ++s) {
      std::uint32_t neg = 0;
      for (int j = 0; j < nnz; ++j)
        if (s & (std::uint32_t(1) << j)) neg |= std::uint32_t(1) << bits[j];
      candidates.push_back({supp, neg});
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  if (budget / std::max<std::size_t>(patterns.size(), 1) < candidates.size())
    candidates.resize(std::size_t(budget / std::max<std::size_t>(patterns.size(), 1)));

  // Coverage bitsets: candidate -> patterns it extends.
  const std::size_t words = (patterns.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cover(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    cover[c].assign(words, 0);
    const int level = __builtin_popcount(candidates[c].supp);
    for (std::size_t t = 0; t < patterns.size(); ++t)
      if (2 * __builtin_popcount(patterns[t].supp) - 1 == level &&
          extends(candidates[c], patterns[t]))
        cover[c][t / 64] |= std::uint64_t(1) << (t % 64);
  }

  std::vector<std::uint64_t> uncovered(words, ~std::uint64_t(0));
  if (patterns.size() % 64) uncovered[words - 1] = (std::uint64_t(1) << (patterns.size() % 64)) - 1;
  std::size_t remaining = patterns.size();
  std::vector<TernaryMask> chosen;
  while (remaining > 0) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t w = 0; w < words; ++w)
        gain += std::size_t(__builtin_popcountll(cover[c][w] & uncovered[w]));
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == candidates.size()) break;
    chosen.push_back(candidates[best]);
    for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~cover[best][w];
    remaining -= best_gain;
  }

  // Deterministic completion for anything the budgeted greedy phase missed.
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& z : chosen) seen.insert({z.supp, z.neg});
  for (std::size_t t = 0; t < patterns.size(); ++t) {
    if (!(uncovered[t / 64] & (std::uint64_t(1) << (t % 64)))) continue;
    TernaryMask z = patterns[t];
    int need = __builtin_popcount(z.supp) - 1;
    for (int i = 0; i < n && need > 0; ++i)
      if (!(z.supp & (std::uint32_t(1) << i))) {
        z.supp |= std::uint32_t(1) << i;
        --need;
      }
    if (seen.insert({z.supp, z.neg}).second) chosen.push_back(z);
  }

  std::vector<Vec> vs;
  vs.reserve(chosen.size());
  for (const auto& z : chosen) vs.push_back(from_ternary(z, n));
  auto out = labeled(std::move(vs), "r0greedy(seed=" + std::to_string(seed) + ")");
  if (!p1_core(chosen, n, true)) throw std::logic_error("r0_greedy: completed set fails p1_check");
  return out;
}

DirectionSet t3(int n, const DirectionSet& r0) {
  require_dim(n, 2, 14, "t3");
  if (!p1_check(r0, n)) throw std::invalid_argument("t3: R0 fails the (P1) extension property");
  std::vector<Vec> vs;
  std::set<std::string> seen;
  for (const auto& w : sign_cube(n - 1)) {
    Vec v = vec_zero(n);
    for (int i = 0; i < n - 1; ++i) v[i] = w[i];
    seen.insert(vec_str(v));
    vs.push_back(std::move(v));
  }
  for (const auto& d : r0)
    if (seen.insert(vec_str(d.v)).second) vs.push_back(d.v);
  return labeled(std::move(vs), "t3");
}

DirectionSet tn_set(int n, const Rat& delta) {
  require_dim(n, 4, 16, "tn_set");
  require_delta(delta, "tn_set");
  const int cap = (n - 2) / 4;
  std::vector<Vec> vs;
  for (int rare : {-1, 1}) {
    for (const auto& w : sign_cube(n - 1)) {
      int count = 0;
      for (int x : w) count += x == rare;
      if (count > cap) continue;
      for (int last : {1, -1}) {
        Vec v(n);
        for (int i = 0; i < n - 1; ++i) v[i] = w[i] > 0 ? delta : -delta;
        v[n - 1] = last;
        vs.push_back(std::move(v));
      }
    }
  }
  return labeled(std::move(vs), "tn");
}

DirectionSet tn_set(int n) { return tn_set(n, frac(1, n + 1)); }

DirectionSet thm41_set(int n, const Rat& delta) {
  require_dim(n, 3, 15, "thm41_set");
  auto inner = method2_set(n - 1, delta);
  std::vector<Vec> vs;
  vs.reserve(inner.size() + 2);
  for (auto& d : inner) {
    Vec v = std::move(d.v);
    v.push_back(0);
    vs.push_back(std::move(v));
  }
  vs.push_back(unit(n, n - 1, -1));
  vs.push_back(unit(n, n - 1, 1));
  return labeled(std::move(vs), "thm41");
}

DirectionSet thm41_set(int n) { return thm41_set(n, frac(1, n)); }

BinomialBounds binomial_bounds(int n) {
  if (n < 3) throw std::invalid_argument("binomial_bounds: n must be at least 3");
  BinomialBounds b;
  b.n = n;
  mpz_class sum = 0;
  for (int s = 0; s <= (n - 1) / 4; ++s) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
    sum += c;
  }
  b.lhs = 2 * sum;
  const mpz_class half = mpz_class(1) << (n - 1);
  mpz_class central;
  mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(n / 2));
  b.basic_rhs = half - 2;
  b.central_rhs = half - central;
  b.le_basic = b.lhs <= b.basic_rhs;
  b.eq_basic = b.lhs == b.basic_rhs;
  b.eq_minus4 = b.lhs == half - 4;
  b.eq_minus18 = b.lhs == half - 18;
  b.le_central = b.lhs <= b.central_rhs;
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, b.lhs.get_mpz_t());
  b.log2_lhs_over_n = (std::log2(mant) + double(exp)) / double(n);
  return b;
}

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::G: return "g";
    case FamilyTag::Method1: return "method1";
    case FamilyTag::Method2: return "method2";
    case FamilyTag::Minus2: return "minus2";
    case FamilyTag::ThmE: return "thme";
    case FamilyTag::T1: return "t1";
    case FamilyTag::T2: return "t2";
    case FamilyTag::T2prime: return "t2prime";
    case FamilyTag::T3: return "t3";
    case FamilyTag::Tn: return "tn";
    case FamilyTag::Thm41: return "thm41";
  }
  throw std::logic_error("family_tag_name: unknown tag");
}

std::optional<FamilyTag> family_tag_from(const std::string& name) {
  for (FamilyTag tag :
       {FamilyTag::G, FamilyTag::Method1, FamilyTag::Method2, FamilyTag::Minus2, FamilyTag::ThmE,
        FamilyTag::T1, FamilyTag::T2, FamilyTag::T2prime, FamilyTag::T3, FamilyTag::Tn,
        FamilyTag::Thm41})
    if (family_tag_name(tag) == name) return tag;
  return std::nullopt;
}

std::size_t family_cardinality(FamilyTag tag, int n) {
  const auto pow2 = [](int k) { return std::size_t(1) << k; };
  switch (tag) {
    case FamilyTag::G: return std::size_t(n) * pow2(n);
    case FamilyTag::Method1:
    case FamilyTag::Method2: return pow2(n);
    case FamilyTag::Minus2:
    case FamilyTag::ThmE: return pow2(n) - 2;
    case FamilyTag::T1: return pow2(n) - 1;
    case FamilyTag::T2:
    case FamilyTag::Thm41: return pow2(n - 1) + 2;
    case FamilyTag::T2prime: return pow2(n - 1) + 2 * std::size_t(n);
    case FamilyTag::Tn: {
      std::size_t sum = 0;
      for (int s = 0; s <= (n - 2) / 4; ++s) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n - 1),
                     static_cast<unsigned long>(s));
        sum += c.get_ui();
      }
      return 4 * sum;
    }
    case FamilyTag::T3:
      throw std::invalid_argument("family_cardinality: T3 size depends on the chosen R0");
  }
  throw std::logic_error("family_cardinality: unknown tag");
}

DirectionFamily make_family(FamilyTag tag, int n, const std::optional<Rat>& delta,
                            const std::optional<Rat>& eta, std::optional<std::uint64_t> seed) {
  if (eta && tag != FamilyTag::ThmE)
    throw std::invalid_argument("make_family: eta only applies to thme");
  if (seed && tag != FamilyTag::T3)
    throw std::invalid_argument("make_family: seed only applies to t3");
  if (delta && (tag == FamilyTag::ThmE || tag == FamilyTag::T1 || tag == FamilyTag::T2 ||
                tag == FamilyTag::T2prime || tag == FamilyTag::T3))
    throw std::invalid_argument("make_family: this family has no delta parameter");

  DirectionFamily fam;
  fam.tag = tag;
  fam.n = n;
  switch (tag) {
    case FamilyTag::G:
      fam.delta = delta.value_or(frac(1, n + 1));
      fam.set = big_set(n, fam.delta);
      break;
    case FamilyTag::Method1:
      fam.delta = delta.value_or(frac(1, n + 1));
      fam.set = method1_set(n, fam.delta);
      break;
    case FamilyTag::Method2:
      fam.delta = delta.value_or(frac(1, n + 1));
      fam.set = method2_set(n, fam.delta);
      break;
    case FamilyTag::Minus2:
      fam.delta = delta.value_or(frac(1, n + 1));
      fam.set = minus2_set(n, fam.delta);
      break;
    case FamilyTag::ThmE:
      fam.delta = frac(1, n + 1);
      fam.eta = eta.value_or(frac(1, 2 * (n + 1)));
      fam.set = theorem_e_set(n, fam.eta);
      break;
    case FamilyTag::T1: fam.set = t1(n); break;
    case FamilyTag::T2: fam.set = t2(n); break;
    case FamilyTag::T2prime: fam.set = t2prime(n); break;
    case FamilyTag::T3:
      if (seed) {
        fam.seed = *seed;
        fam.set = t3(n, r0_greedy(n, fam.seed, 50000000));
      } else {
        fam.set = t3(n, r0_full(n));
      }
      break;
    case FamilyTag::Tn:
      fam.delta = delta.value_or(frac(1, n + 1));
      fam.set = tn_set(n, fam.delta);
      break;
    case FamilyTag::Thm41:
      fam.delta = delta.value_or(frac(1, n));
      fam.set = thm41_set(n, fam.delta);
      break;
  }
  return fam;
}

}  // namespace illum
