#include "illum/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace illum {

Vec apply(const SignedPerm& s, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[i] = x[s.perm[i]];
    if (s.sign[i] < 0) r[i] = -r[i];
  }
  return r;
}

SignedPerm sp_identity(std::size_t n) {
  SignedPerm s;
  s.perm.resize(n);
  s.sign.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) s.perm[i] = i;
  return s;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  // (a o b) x = a (b x): result[i] = a.sign[i] * (b x)[a.perm[i]]
  std::size_t n = a.perm.size();
  SignedPerm r;
  r.perm.resize(n);
  r.sign.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.perm[i] = b.perm[a.perm[i]];
    r.sign[i] = a.sign[i] * b.sign[a.perm[i]];
  }
  return r;
}

bool sp_equal(const SignedPerm& a, const SignedPerm& b) {
  return a.perm == b.perm && a.sign == b.sign;
}

std::vector<SignedPerm> full_signed_perms(std::size_t n) {
  if (n > 6) throw std::invalid_argument("full_signed_perms: group too large for dimension cap");
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<SignedPerm> out;
  do {
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      SignedPerm s;
      s.perm = p;
      s.sign.resize(n);
      for (std::size_t i = 0; i < n; ++i) s.sign[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SymmetryClass one_symmetric() { return SymmetryClass{SymKind::OneSymmetric, {}}; }

SymmetryClass one_unconditional() { return SymmetryClass{SymKind::OneUnconditional, {}}; }

SymmetryClass make_explicit_group(std::vector<SignedPerm> elems) {
  if (elems.empty()) throw std::invalid_argument("explicit group: empty");
  std::size_t n = elems[0].perm.size();
  bool has_id = false;
  for (const auto& e : elems) {
    if (e.perm.size() != n || e.sign.size() != n)
      throw std::invalid_argument("explicit group: mixed dimensions");
    if (sp_equal(e, sp_identity(n))) has_id = true;
  }
  if (!has_id) throw std::invalid_argument("explicit group: identity missing");
  for (const auto& a : elems)
    for (const auto& b : elems) {
      SignedPerm c = compose(a, b);
      bool found = false;
      for (const auto& e : elems)
        if (sp_equal(e, c)) {
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("explicit group: not closed under composition");
    }
  return SymmetryClass{SymKind::ExplicitGroup, std::move(elems)};
}

mpz_class orbit_size_estimate(const Vec& g, const SymmetryClass& sym) {
  std::size_t n = g.size();
  std::size_t nonzero = 0;
  for (const auto& x : g)
    if (sgn(x) != 0) ++nonzero;
  switch (sym.kind) {
    case SymKind::OneSymmetric: {
      Vec sorted = abs_desc(g);
      mpz_class count = 1;
      for (std::size_t i = 2; i <= n; ++i) count *= static_cast<unsigned long>(i);
      std::size_t run = 1;
      for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && sorted[i] == sorted[i - 1]) {
          ++run;
        } else {
          mpz_class fact = 1;
          for (std::size_t k = 2; k <= run; ++k) fact *= static_cast<unsigned long>(k);
          count /= fact;
          run = 1;
        }
      }
      mpz_class two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, nonzero);
      return count * two_pow;
    }
    case SymKind::OneUnconditional: {
      mpz_class two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, nonzero);
      return two_pow;
    }
    case SymKind::ExplicitGroup:
      return mpz_class(static_cast<unsigned long>(sym.group.size()));
  }
  return 0;
}

namespace {

void sign_patterns_into(const Vec& base, std::set<Vec>& out) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (sgn(base[i]) != 0) nz.push_back(i);
  for (std::size_t mask = 0; mask < (std::size_t(1) << nz.size()); ++mask) {
    Vec v = base;
    for (std::size_t t = 0; t < nz.size(); ++t)
      if ((mask >> t) & 1) v[nz[t]] = -v[nz[t]];
    out.insert(std::move(v));
  }
}

}  // namespace

std::vector<Vec> orbit_expand(const Vec& g, const SymmetryClass& sym) {
  std::set<Vec> out;
  switch (sym.kind) {
    case SymKind::OneSymmetric: {
      Vec sorted = abs_desc(g);
      std::sort(sorted.begin(), sorted.end());
      do {
        sign_patterns_into(sorted, out);
      } while (std::next_permutation(sorted.begin(), sorted.end()));
      break;
    }
    case SymKind::OneUnconditional:
      sign_patterns_into(g, out);
      break;
    case SymKind::ExplicitGroup:
      for (const auto& s : sym.group) out.insert(apply(s, g));
      break;
  }
  return {out.begin(), out.end()};
}

Vec canonical_key(const Vec& x, const SymmetryClass& sym) {
  switch (sym.kind) {
    case SymKind::OneSymmetric:
      return abs_desc(x);
    case SymKind::OneUnconditional: {
      Vec r;
      r.reserve(x.size());
      for (const auto& v : x) r.push_back(rat_abs(v));
      return r;
    }
    case SymKind::ExplicitGroup: {
      Vec best = x;
      for (const auto& s : sym.group) {
        Vec img = apply(s, x);
        if (img < best) best = img;
      }
      return best;
    }
  }
  return x;
}

}  // namespace illum
