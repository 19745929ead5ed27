#include "sixfold/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return sixfold::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "sixfold: internal error: " << e.what() << '\n';
    return 3;
  }
}
