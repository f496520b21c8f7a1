#include <iostream>
#include <string>
#include <vector>

#include "gaptrack/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gaptrack::interface::dispatch(std::move(args), std::cout, std::cerr);
}
