#include "boustro/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return boustro::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
