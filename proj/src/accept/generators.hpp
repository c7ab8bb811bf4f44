#pragma once

#include <vector>

#include "cinf/random.hpp"
#include "cinf/term.hpp"

namespace cinf::accept {

inline Term random_poly_term(Rng& rng, int nvars, int max_degree, int max_terms) {
  std::vector<Term> monomials;
  const int count = rng.uniform_int(1, max_terms);
  for (int t = 0; t < count; ++t) {
    std::vector<Term> factors{Term::constant(rng.small_rational(3, 2))};
    int degree = rng.uniform_int(0, max_degree);
    for (int d = 0; d < degree; ++d) factors.push_back(slot(rng.uniform_int(1, nvars)));
    monomials.push_back(Term::apply(Prim::mul, std::move(factors)));
  }
  return Term::apply(Prim::add, std::move(monomials));
}

inline SmoothMap random_poly_map(Rng& rng, int nvars, int max_degree, int max_terms) {
  return SmoothMap(nvars, random_poly_term(rng, nvars, max_degree, max_terms));
}

// total primitives only, exp kept rare so values stay finite
inline Term random_total_term(Rng& rng, int nvars, int depth) {
  if (depth <= 0 || rng.uniform_int(0, 4) == 0) {
    if (rng.uniform_int(0, 3) == 0) return Term::constant(rng.small_rational(2, 2));
    return slot(rng.uniform_int(1, nvars));
  }
  switch (rng.uniform_int(0, 8)) {
    case 0:
    case 1:
      return random_total_term(rng, nvars, depth - 1) + random_total_term(rng, nvars, depth - 1);
    case 2:
    case 3:
      return random_total_term(rng, nvars, depth - 1) * random_total_term(rng, nvars, depth - 1);
    case 4:
      return Term::apply(Prim::sin, {random_total_term(rng, nvars, depth - 1)});
    case 5:
      return Term::apply(Prim::cos, {random_total_term(rng, nvars, depth - 1)});
    case 6:
      return Term::apply(Prim::atan, {random_total_term(rng, nvars, depth - 1)});
    case 7:
      return -random_total_term(rng, nvars, depth - 1);
    default:
      return Term::apply(Prim::exp, {random_total_term(rng, nvars, depth - 2)});
  }
}

inline SmoothMap random_total_map(Rng& rng, int nvars, int depth) {
  return SmoothMap(nvars, random_total_term(rng, nvars, depth));
}

inline std::vector<double> random_point(Rng& rng, int n, double box) {
  std::vector<double> p(n);
  for (int i = 0; i < n; ++i) p[i] = rng.uniform(-box, box);
  return p;
}

}  // namespace cinf::accept
