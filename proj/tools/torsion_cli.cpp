#include <iostream>
#include <string>
#include <vector>

#include "torsion/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torsion::cli::run_cli(args, std::cout, std::cerr);
}
