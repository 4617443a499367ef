#include <iostream>
#include <string>
#include <vector>

#include "shannon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return shannon::cli::run_cli(std::move(args), std::cout, std::cerr);
}
