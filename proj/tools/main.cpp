#include <iostream>

#include "fracprob/cli.hpp"

int main(int argc, char** argv) {
  return fracprob::cli::main_entry(argc, argv, std::cout, std::cerr);
}
