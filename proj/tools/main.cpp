#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "mcurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return mcurve::cli::run(args, std::cout, std::cerr,
                            {isatty(STDOUT_FILENO) != 0});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
