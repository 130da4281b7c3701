#include <iostream>
#include <string>
#include <vector>

#include "hstrip/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hstrip::cli::run(args, std::cout, std::cerr);
}
