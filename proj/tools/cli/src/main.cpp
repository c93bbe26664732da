#include <iostream>

#include "eulerode_cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eulerode::cli::run(args, std::cout, std::cerr);
}
