#include <iostream>
#include <string>
#include <vector>

#include "outfk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return outfk::run(args, std::cout, std::cerr);
}
