#include <cstdio>
#include <string>
#include <vector>

#include "cinf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cinf::CommandResult result = cinf::run_command(args);
  std::fputs(result.report.c_str(), stdout);
  return result.exit_code;
}
