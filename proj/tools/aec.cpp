#include "aec/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string input;
  if (std::find(args.begin(), args.end(), "-") != args.end()) {
    input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  aec::CliResult r = aec::run_cli(args, input);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit;
}
