#include <iostream>
#include <string>
#include <vector>

#include "bfact/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bfact::cli::dispatch(args, std::cout, std::cerr);
}
