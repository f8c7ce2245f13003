#include <iostream>
#include <string>
#include <vector>

#include "mloc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mloc::run(args, std::cout, std::cerr);
}
