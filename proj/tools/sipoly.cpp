#include <iostream>
#include <string>
#include <vector>

#include "sipoly/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const sipoly::CliOutput r = sipoly::run_cli(args, std::cin);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
