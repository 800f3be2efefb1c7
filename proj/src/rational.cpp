#include "illum/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace illum {

Rat parse_rat(const std::string& s) {
  // grammar: -?digits(/digits)?  with nonzero denominator
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') ++pos;
  std::size_t num_start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == num_start) throw std::invalid_argument("not a rational: '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != '/') throw std::invalid_argument("not a rational: '" + s + "'");
    ++pos;
    std::size_t den_start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == den_start || pos != s.size())
      throw std::invalid_argument("not a rational: '" + s + "'");
  }
  Rat r(s, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Vec vec_zero(std::size_t n) { return Vec(n, Rat(0)); }

Vec basis(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

Vec ones(std::size_t n) { return Vec(n, Rat(1)); }

Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rat& t, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= t;
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = -x;
  return r;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Rat linf(const Vec& a) {
  Rat m = 0;
  for (const auto& x : a) {
    Rat ax = rat_abs(x);
    if (ax > m) m = ax;
  }
  return m;
}

Vec abs_desc(const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(rat_abs(x));
  std::sort(r.begin(), r.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return r;
}

Rat sorted_dot(const Vec& a, const Vec& b) { return dot(abs_desc(a), abs_desc(b)); }

std::vector<int> sign_pattern(const Vec& a) {
  std::vector<int> s;
  s.reserve(a.size());
  for (const auto& x : a) s.push_back(sgn(x));
  return s;
}

std::string vec_str(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(a[i]);
  }
  s += ")";
  return s;
}

}  // namespace illum
