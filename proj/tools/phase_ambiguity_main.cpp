#include <iostream>
#include <string>
#include <vector>

#include "phase_ambiguity/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return phase_ambiguity::cli::run(args, std::cin, std::cout, std::cerr);
}
