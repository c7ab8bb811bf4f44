#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cinf/term.hpp"

namespace cinf {

// Sparse multivariate polynomial over ℚ with a fixed slot count, ordered by
// degrevlex. This is the workhorse behind the polynomial membership strategy
// and the closed-form segment integrals.
struct DegRevLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

struct MPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rational, DegRevLexLess> terms;

  static MPoly zero(int nvars);
  static MPoly constant(int nvars, Rational c);
  static MPoly variable(int nvars, int index);  // 0-based

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;
  const std::vector<int>& leading_monomial() const;  // terms nonempty
  const Rational& leading_coefficient() const;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rational& c, const MPoly& a);
MPoly mono_mul(const MPoly& p, const std::vector<int>& mono, const Rational& c);

// nullopt when the body is not polynomial
std::optional<MPoly> to_mpoly(const SmoothMap& f);
SmoothMap from_mpoly(const MPoly& p);

// substitute each variable by a polynomial
MPoly compose_mpoly(const MPoly& f, const std::vector<MPoly>& args);

struct Reduction {
  MPoly remainder;
  std::vector<MPoly> quotients;  // p = sum quotients[i] * basis[i] + remainder
};
Reduction reduce(const MPoly& p, const std::vector<MPoly>& basis);

struct GroebnerResult {
  std::vector<MPoly> basis;
  // basis[i] = sum reps[i][j] * generator[j]
  std::vector<std::vector<MPoly>> reps;
  bool complete = true;  // false when a degree or size cap was hit
};

GroebnerResult buchberger(const std::vector<MPoly>& generators, int degree_cap, int basis_cap);

// Remainder-zero division of e by the basis, pushed back to cofactors over the
// ORIGINAL generators; nullopt when the remainder is nonzero.
std::optional<std::vector<MPoly>> member_cofactors(const MPoly& e, const GroebnerResult& gb);

}  // namespace cinf
