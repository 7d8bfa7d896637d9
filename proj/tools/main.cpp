#include "stolarsky/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return stolarsky::cli::main(argc, argv, std::cout, std::cerr);
}
