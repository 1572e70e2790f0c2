#include "dwcount/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dwcount::cli::run_command_line(args, std::cin, std::cout, std::cerr);
}
