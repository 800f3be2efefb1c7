#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace illum {

// Exact rational scalar. mpq_class keeps every value in lowest terms with a
// positive denominator, and all arithmetic is exact.
using Rat = mpq_class;

// Fixed-dimension rational coordinate vector.
using Vec = std::vector<Rat>;

// Parses "p/q" or a plain integer (optional leading '-'). Rejects decimals,
// whitespace, empty strings, zero denominators and any other notation so that
// exactness is total.
Rat parse_rat(const std::string& s);

// Renders as "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// mpq_class(n, d) keeps the pair as-is; this always reduces to lowest terms.
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Vec vec_zero(std::size_t n);
Vec basis(std::size_t n, std::size_t i);  // e_{i+1}, zero-based index
Vec ones(std::size_t n);

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& t, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);

// Largest absolute value of any coordinate.
Rat linf(const Vec& a);

// Absolute values sorted in nonincreasing order.
Vec abs_desc(const Vec& a);

// Maximum of <sigma(a), b> over signed permutations sigma; by the
// rearrangement inequality this is the dot product of the two sorted
// absolute-value profiles.
Rat sorted_dot(const Vec& a, const Vec& b);

std::vector<int> sign_pattern(const Vec& a);

std::string vec_str(const Vec& a);

}  // namespace illum
