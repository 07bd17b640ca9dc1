#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
  bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return prvkit::cli::dispatch(argc, argv, std::cout, std::cerr, color);
}
