#include <iostream>

#include "uqso/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uqso::cli::run(args, std::cout, std::cerr);
}
