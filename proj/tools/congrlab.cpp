#include <iostream>

#include "congrlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return congrlab::cli::run(args, std::cout, std::cerr);
}
