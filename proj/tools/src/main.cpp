#include <iostream>
#include <string>
#include <vector>

#include "singular_lrt_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return slrt::cli::run_cli(args, std::cout, std::cerr);
}
