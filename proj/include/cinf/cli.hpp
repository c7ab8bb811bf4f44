#pragma once

#include <string>
#include <vector>

namespace cinf {

struct CommandResult {
  int exit_code = 0;
  std::string report;
};

// Runs one subcommand (args without the program name). Exit codes: 0 for a
// decisive success, 2 for an Unknown verdict, 1 for refutations and errors.
// Reports are line oriented and byte-stable for a fixed --seed.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace cinf
