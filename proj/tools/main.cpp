#include <iostream>
#include <string>
#include <vector>

#include "balfan/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return balfan::runCli(args, std::cout, std::cerr);
}
