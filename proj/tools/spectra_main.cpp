#include <iostream>
#include <string>
#include <vector>

#include "spectra/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return spectra::cli::run(args, std::cout, std::cerr);
}
