#pragma once

#include <cstddef>
#include <vector>

#include "illum/rational.hpp"

namespace illum {

// A signed permutation: (sigma x)[i] = sign[i] * x[perm[i]].
struct SignedPerm {
  std::vector<std::size_t> perm;
  std::vector<int> sign;  // entries in {-1, +1}
};

Vec apply(const SignedPerm& s, const Vec& x);
SignedPerm sp_identity(std::size_t n);
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b
bool sp_equal(const SignedPerm& a, const SignedPerm& b);

// Every element of the hyperoctahedral group in dimension n (n! * 2^n
// elements); refuses dimensions where that count is no longer desk scale.
std::vector<SignedPerm> full_signed_perms(std::size_t n);

enum class SymKind { OneSymmetric, OneUnconditional, ExplicitGroup };

// ExplicitGroup must contain the identity and be closed under composition;
// checked at construction via make_explicit_group.
struct SymmetryClass {
  SymKind kind = SymKind::OneSymmetric;
  std::vector<SignedPerm> group;  // ExplicitGroup only
};

SymmetryClass one_symmetric();
SymmetryClass one_unconditional();
SymmetryClass make_explicit_group(std::vector<SignedPerm> elems);

// Exact orbit cardinality before expansion (multinomial of the absolute-value
// multiset times 2^#nonzero for OneSymmetric; 2^#nonzero for
// OneUnconditional; group size as an upper bound for ExplicitGroup).
mpz_class orbit_size_estimate(const Vec& g, const SymmetryClass& sym);

// De-duplicated full orbit of g. Caller enforces any size cap beforehand.
std::vector<Vec> orbit_expand(const Vec& g, const SymmetryClass& sym);

// Canonical representative of the orbit of x: the key is equal for two
// vectors iff they lie in a common orbit (used to collapse per-orbit work).
Vec canonical_key(const Vec& x, const SymmetryClass& sym);

}  // namespace illum
