#include <iostream>

#include "cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orbicoh::cli::run(args, std::cout, std::cerr);
}
