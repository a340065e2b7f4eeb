#include <iostream>
#include <string>
#include <vector>

#include "tarski/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return tarski::cli::run(args, std::cout, std::cerr);
}
