#include <iostream>
#include <string>
#include <vector>

#include "addcomb/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const addcomb::cli::run_outcome r = addcomb::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
