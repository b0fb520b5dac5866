#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto parsed = adams_cli::parse_args(args, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return adams_cli::run(*parsed.config, std::cout, std::cerr);
}
