#include <iostream>

#include "zsym/cli.hpp"

int main(int argc, char** argv) {
  return zsym::cli::run(argc, argv, std::cout, std::cerr);
}
