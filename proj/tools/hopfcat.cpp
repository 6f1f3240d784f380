#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_field;
  if (const char* f = std::getenv("HOPFCAT_FIELD")) env_field = f;
  return hopfcat::run_command(args, std::cout, std::cerr, env_field);
}
