#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "glaisher/cli.hpp"

int main(int argc, char** argv) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
  return glaisher::cli::run(argc, argv, std::cout, std::cerr, color);
}
