#include <iostream>
#include <string>
#include <vector>

#include "haar_newton/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return haar_newton::cli::run(args, std::cout, std::cerr);
}
