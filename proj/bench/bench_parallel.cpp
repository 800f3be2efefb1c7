#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "illum/scenarios.hpp"

using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 5;
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
  int pn = argc > 3 ? std::atoi(argv[3]) : 10;

  illum::NamedBody nb = illum::random_symmetric(n, seed, "mid");
  illum::DirectionSet set = illum::method2_set(n);
  std::printf("cover body=%s directions=%zu vertices=%zu\n", nb.id.c_str(), set.size(),
              nb.body.vertices().size());

  auto t0 = Clock::now();
  illum::CoverReport serial = illum::verify_set_serial(nb.body, set, nb.id, "bench");
  double ts = secs(t0);
  t0 = Clock::now();
  illum::CoverReport parallel = illum::verify_set(nb.body, set, nb.id, "bench");
  double tp = secs(t0);
  bool same = serial.covers == parallel.covers && serial.uncovered == parallel.uncovered;
  std::printf("verify_set    serial %.3fs  parallel %.3fs  speedup %.2fx  agree=%s\n", ts, tp,
              ts / tp, same ? "yes" : "NO");

  illum::DirectionSet r0 = illum::r0_full(pn);
  t0 = Clock::now();
  bool ps = illum::p1_check_serial(r0, pn);
  double us = secs(t0);
  t0 = Clock::now();
  bool pp = illum::p1_check(r0, pn);
  double up = secs(t0);
  std::printf("p1_check n=%d serial %.3fs  parallel %.3fs  speedup %.2fx  agree=%s\n", pn, us,
              up, us / up, ps == pp ? "yes" : "NO");
  return same && ps == pp ? 0 : 1;
}
