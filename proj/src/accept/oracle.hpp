#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cinf/term.hpp"

namespace cinf::accept {

// Brute-force polynomial ideal membership over the rationals, kept separate
// from the kernel's machinery: its own term ingestion, graded-lex monomial
// order and a plain completion-plus-reduction loop with no cofactor
// bookkeeping. Only suitable for tiny instances, which is the point.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

struct OraclePoly {
  int nvars = 0;
  std::map<std::vector<int>, Rational, GradedLexLess> coeffs;

  bool is_zero() const { return coeffs.empty(); }
};

std::optional<OraclePoly> oracle_ingest(const Term& raw, int nvars);

// decides e in (gens) inside Q[x1..xn]
bool oracle_member(const OraclePoly& e, const std::vector<OraclePoly>& gens);

}  // namespace cinf::accept
