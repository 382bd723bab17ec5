#include <iostream>

#include "center_order/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return center_order::run_cli(args, std::cout, std::cerr);
}
