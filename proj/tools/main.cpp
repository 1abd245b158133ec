#include <iostream>
#include <string>
#include <vector>

#include "latflow/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return latflow::run_command(args, std::cout, std::cerr);
}
