#include <iostream>
#include <string>
#include <vector>

#include "nonstatic/run.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return nonstatic::cli::main_entry(args, std::cout, std::cerr);
}
