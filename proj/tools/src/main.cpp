#include <iostream>

#include "finring/cli/commands.hpp"

int main(int argc, char** argv) {
  return finring::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
