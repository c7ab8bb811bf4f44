#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace cinf::accept {

struct CliResult {
  int exit_code = 0;
  std::string report;
};

// How the determinism criterion drives the command line front end; both the
// cinf binary and the acceptance test pass their own entry point here.
using CliRunner = std::function<CliResult(const std::vector<std::string>&)>;

struct Options {
  std::uint64_t seed = 0;
  std::string corpus_dir;  // directory holding the shipped .cinf corpus
  CliRunner cli;
};

// Runs the whole acceptance suite, one PASS/FAIL line per criterion; returns
// true iff everything passed.
bool run_all(const Options& opts, std::ostream& out);

}  // namespace cinf::accept
