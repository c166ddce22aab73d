#include <iostream>

#include "tilings/cli.hpp"

int main(int argc, char** argv) {
  int code = 0;
  auto config = tilings::cli::parse_args(argc, argv, std::cout, std::cerr, code);
  if (!config) return code;
  return tilings::cli::run(*config, std::cout, std::cerr);
}
