#include <iostream>
#include <string>
#include <vector>

#include "eskel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eskel::run_cli(args, std::cin, std::cout, std::cerr);
}
