#include <iostream>

#include "simplex_lattice/cli.hpp"

int main(int argc, char** argv) {
  return simplex_lattice::cli::run(argc, argv, std::cout, std::cerr);
}
