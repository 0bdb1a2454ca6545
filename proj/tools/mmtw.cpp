#include <iostream>
#include <string>
#include <vector>

#include "mmtw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mmtw::run_cli(args, std::cout, std::cerr);
}
