#include <iostream>
#include <string>
#include <vector>

#include "fracspec/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return fracspec::cli::run(args, std::cout, std::cerr);
}
