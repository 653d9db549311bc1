#include <iostream>

#include "acs/cli.hpp"

int main(int argc, char** argv) {
  return acs::cli::run(argc, argv, std::cout, std::cerr);
}
