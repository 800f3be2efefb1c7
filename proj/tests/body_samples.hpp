#pragma once

#include <algorithm>
#include <random>

#include "illum/body.hpp"

namespace illum::testing {

// Small random bodies with few distinct generator values keep orbits tiny.
inline SymmetricBody random_body(std::mt19937& rng, std::size_t n, SymKind kind) {
  static const Rat menu[] = {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(3, 4), Rat(1)};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> gens(1, 2);
  std::vector<Vec> g;
  std::size_t count = gens(rng);
  for (std::size_t t = 0; t < count; ++t) {
    Rat a = menu[pick(rng)], b = menu[pick(rng)];
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      int c = coin(rng) + coin(rng);
      v[i] = c == 0 ? Rat(0) : (c == 1 ? a : b);
    }
    if (t == 0) v[0] = 1;
    g.push_back(std::move(v));
  }
  auto sym = kind == SymKind::OneSymmetric ? one_symmetric() : one_unconditional();
  if (kind == SymKind::OneUnconditional)
    for (std::size_t i = 0; i < n; ++i) g[0][i] = std::max(g[0][i], Rat(1, 4));
  return SymmetricBody(n, std::move(g), sym);
}

inline Rat random_rat(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 6);
  return frac(num(rng), den(rng));
}

}  // namespace illum::testing
