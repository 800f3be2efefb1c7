#include <iostream>
#include <vector>

#include "illum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return illum::cli_run(args, std::cout, std::cerr);
}
