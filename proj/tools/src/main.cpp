#include <iostream>
#include <string>
#include <vector>

#include "avecond_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return avecond::cli::run_args(args, std::cout, std::cerr);
}
