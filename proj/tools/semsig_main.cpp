#include <iostream>

#include "semsig/cli.hpp"

int main(int argc, char** argv) {
  return semsig::cli::run_cli(argc, argv, std::cout, std::cerr);
}
