#include <iostream>

#include "oddsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oddsym::cli_main(args, std::cout, std::cerr);
}
