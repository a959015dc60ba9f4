#include <iostream>
#include <string>
#include <vector>

#include "partent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return partent::cli::run_command(args, std::cout, std::cerr);
}
