#include "zonocert/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zonocert::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
