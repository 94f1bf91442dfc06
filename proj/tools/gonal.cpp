#include <iostream>

#include "gonal/cli.hpp"

int main(int argc, char** argv) {
  return gonal::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
