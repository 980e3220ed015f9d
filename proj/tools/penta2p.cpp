#include <iostream>
#include <string>
#include <vector>

#include "penta2p/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return penta2p::run(args, std::cin, std::cout, std::cerr);
}
