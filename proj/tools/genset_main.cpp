#include "genset/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return genset::cli::run(argc, argv, std::cout, std::cerr);
}
