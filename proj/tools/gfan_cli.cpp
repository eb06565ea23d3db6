#include <iostream>
#include <string>
#include <vector>

#include "gfan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gfan::run_cli(args, std::cout, std::cerr);
}
