#include <iostream>

#include "sure/cli.hpp"

int main(int argc, char** argv) {
  return sure::cli::run(argc, argv, std::cout, std::cerr);
}
