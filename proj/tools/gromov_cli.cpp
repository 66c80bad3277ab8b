#include <iostream>
#include <string>
#include <vector>

#include "gromov/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gromov::run(args, std::cout, std::cerr);
}
