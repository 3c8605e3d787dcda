#include <iostream>
#include <string>
#include <vector>

#include "consec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return consec::run_cli(args, std::cout, std::cerr);
}
