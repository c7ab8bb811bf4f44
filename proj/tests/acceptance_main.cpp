#include <cstdlib>
#include <iostream>

#include "cinf/cli.hpp"

#include "../src/accept/acceptance.hpp"

int main() {
  cinf::accept::Options opts;
  opts.seed = 20240817ull;
  opts.corpus_dir = CINF_CORPUS_DIR;
  if (const char* env = std::getenv("CINF_CORPUS")) opts.corpus_dir = env;
  opts.cli = [](const std::vector<std::string>& args) {
    cinf::CommandResult r = cinf::run_command(args);
    return cinf::accept::CliResult{r.exit_code, r.report};
  };
  bool ok = cinf::accept::run_all(opts, std::cout);
  return ok ? 0 : 1;
}
