#include <iostream>

#include "cyclohecke/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclohecke::cli::run(args, std::cout, std::cerr);
}
