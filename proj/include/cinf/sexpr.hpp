#pragma once

#include <string>
#include <vector>

#include "cinf/errors.hpp"

namespace cinf {

// Plain S-expression reader with source locations. Atoms are identifiers or
// rationals; ';' starts a comment to end of line.
struct Sexpr {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexpr> items;
  int line = 0, column = 0;
};

std::vector<Sexpr> parse_sexpr_document(const std::string& text);

// exactly one expression, surrounded only by whitespace/comments
Sexpr parse_sexpr(const std::string& text);

bool is_identifier(const std::string& s);  // [A-Za-z_][A-Za-z0-9_]*

}  // namespace cinf
