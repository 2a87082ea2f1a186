#include <iostream>
#include <vector>

#include "skewpbw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewpbw::cli_dispatch(args, std::cout, std::cerr);
}
