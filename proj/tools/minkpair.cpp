#include <iostream>
#include <string>
#include <vector>

#include "minkpair/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return minkpair::run(args, std::cout, std::cerr);
}
