#include <iostream>

#include "oddred/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oddred::run_cli(args, std::cout, std::cerr);
}
