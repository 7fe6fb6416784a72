#include <iostream>
#include <string>
#include <vector>

#include "nilcert/pipeline.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilcert::run_cli(args, std::cout, std::cerr);
}
