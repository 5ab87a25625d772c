#include <iostream>
#include <string>
#include <vector>

#include "bisem/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bisem::run_cli(args, std::cout, std::cerr);
}
