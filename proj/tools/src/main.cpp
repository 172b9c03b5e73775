#include "bnkit/cli/commands.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::ios::sync_with_stdio(false);
  return bnkit::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
