#include <iostream>

#include "antcd/commands.hpp"

int main(int argc, char** argv) {
  return antcd::cli::run(argc, argv, std::cout, std::cerr);
}
