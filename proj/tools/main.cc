#include <iostream>
#include <string>
#include <vector>

#include "cnfgraph/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cnfgraph::run_cli(args, std::cin, std::cout, std::cerr);
}
