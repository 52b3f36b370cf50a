#include <iostream>
#include <string>
#include <vector>

#include "glaisher/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glaisher::run_cli(args, std::cout, std::cerr);
}
