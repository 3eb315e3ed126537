#include <iostream>

#include "l1l2/cli.hpp"

int main(int argc, char** argv) {
  return l1l2::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
