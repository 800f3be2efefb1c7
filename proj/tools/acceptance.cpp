#include <cstdio>

#include "illum/cli.hpp"

int main() {
  auto outcomes = illum::run_checks("paper.");
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.pass;
    std::printf("%s  %-28s %8.1fs  %s\n", o.pass ? "PASS" : "FAIL", o.name.c_str(),
                o.seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", passed, outcomes.size());
  return passed == outcomes.size() ? 0 : 1;
}
