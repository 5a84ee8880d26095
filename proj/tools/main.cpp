#include <string>
#include <vector>

#include "pqn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pqn::cli::run(args);
}
