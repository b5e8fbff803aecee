#include <iostream>
#include <string>
#include <vector>

#include "unitlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unitlab::run_cli(args, std::cout, std::cerr);
}
