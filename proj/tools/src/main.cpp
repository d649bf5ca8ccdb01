#include <iostream>
#include <string>
#include <vector>

#include "ivhs_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ivhs::cli::run(args, std::cout, std::cerr);
}
