#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cinf/hadamard.hpp"
#include "cinf/quadrature.hpp"

#include "../src/accept/generators.hpp"

using namespace cinf;

namespace {
SmoothMap M(int arity, const std::string& text) { return SmoothMap(arity, parse_term(text)); }

// residual f(x) - f(y) - sum (x_i - y_i) g_i as a map in 2n slots
SmoothMap symbolic_residual(const HadamardDecomposition& d) {
  const int n = d.f.arity();
  std::vector<SmoothMap> xs, ys;
  for (int i = 1; i <= n; ++i) xs.push_back(SmoothMap::projection(2 * n, i));
  for (int i = 1; i <= n; ++i) ys.push_back(SmoothMap::projection(2 * n, n + i));
  SmoothMap residual = compose(d.f, xs) - compose(d.f, ys);
  for (int i = 0; i < n; ++i) residual = residual - (xs[i] - ys[i]) * d.cofactors[i];
  return residual;
}
}  // namespace

TEST_CASE("adaptive quadrature baseline") {
  // closed forms: going through the integrator itself, so the Hadamard checks
  // below do not lean on an untested primitive
  double one_third = integrate_adaptive([](double t) { return t * t; }, 0.0, 1.0);
  CHECK(one_third == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  double e_minus_1 = integrate_adaptive([](double t) { return std::exp(t); }, 0.0, 1.0);
  CHECK(std::abs(e_minus_1 - (std::exp(1.0) - 1.0)) <= 1e-10);
  CHECK_THROWS_AS(integrate_adaptive([](double t) { return 1.0 / (t * t * t); }, 1e-9, 1.0,
                                     1e-12, 8),
                  QuadratureFailure);
}

TEST_CASE("cofactor of the square is the symmetric sum") {
  // segment integral of 2(y + t(x - y)) over [0,1] is x + y; cross-checked by
  // the factoring x^2 - y^2 = (x - y)(x + y)
  HadamardDecomposition d = hadamard_exact(M(1, "(* v1 v1)"));
  CHECK(equal(d.cofactors[0], M(2, "(+ v1 v2)")));
  CHECK(symbolic_residual(d).is_zero());
  // symmetry in x and y
  std::vector<SmoothMap> swap{SmoothMap::projection(2, 2), SmoothMap::projection(2, 1)};
  CHECK(equal(compose(d.cofactors[0], swap), d.cofactors[0]));
}

TEST_CASE("constant maps decompose with zero cofactors") {
  HadamardDecomposition d = hadamard_exact(SmoothMap::constant(2, 7));
  for (const auto& g : d.cofactors) CHECK(g.is_zero());
}

TEST_CASE("cofactors of the binary product") {
  // g_1 = (x2 + y2)/2 and g_2 = (x1 + y1)/2; the identity
  // x1 x2 - y1 y2 = (x1 - y1)(x2 + y2)/2 + (x2 - y2)(x1 + y1)/2 checks them
  HadamardDecomposition d = hadamard_exact(M(2, "(* v1 v2)"));
  CHECK(equal(d.cofactors[0], M(4, "(* 1/2 (+ v2 v4))")));
  CHECK(equal(d.cofactors[1], M(4, "(* 1/2 (+ v1 v3))")));
  CHECK(symbolic_residual(d).is_zero());
}

TEST_CASE("rejects transcendental and partial maps") {
  CHECK_THROWS_AS(hadamard_exact(M(1, "(sin v1)")), NotPolynomial);
  CHECK_THROWS_AS(hadamard_exact(M(1, "(recip v1)")), NotPolynomial);
}

TEST_CASE("exact residual is the zero term for random polynomials") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform_int(1, 3);
    HadamardDecomposition d = hadamard_exact(accept::random_poly_map(rng, n, 4, 4));
    CHECK(symbolic_residual(d).is_zero());
  }
}

TEST_CASE("quadrature cofactor of exp at the unit segment") {
  // integral over [0,1] of e^t, frozen from the closed form e - 1
  std::vector<double> g = hadamard_quadrature(M(1, "(exp v1)"), {1.0}, {0.0});
  CHECK(std::abs(g[0] - 1.718281828459045) <= 1e-9);
}

TEST_CASE("quadrature cofactor of the square at a point") {
  std::vector<double> g = hadamard_quadrature(M(1, "(* v1 v1)"), {3.0}, {1.0});
  CHECK(g[0] == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("quadrature agrees with exact cofactors on polynomials") {
  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform_int(1, 2);
    SmoothMap f = accept::random_poly_map(rng, n, 3, 3);
    HadamardDecomposition d = hadamard_exact(f);
    std::vector<double> x = accept::random_point(rng, n, 2.0);
    std::vector<double> y = accept::random_point(rng, n, 2.0);
    std::vector<double> quad = hadamard_quadrature(f, x, y);
    std::vector<double> exact = d.cofactors_at(x, y);
    for (int i = 0; i < n; ++i) CHECK(std::abs(quad[i] - exact[i]) <= 1e-9);
  }
}

TEST_CASE("verified residuals") {
  HadamardDecomposition exact = hadamard_exact(M(2, "(+ (* v1 v1 v2) v2)"));
  VerificationReport r1 = verify_decomposition(exact, 100, 2.0, 5);
  CHECK(r1.samples_used == 100);
  CHECK(r1.max_residual <= 1e-12);
  CHECK(exact.max_verified_residual == r1.max_residual);

  HadamardDecomposition zero = hadamard_exact(SmoothMap::constant(1, 0));
  VerificationReport rz = verify_decomposition(zero, 10, 2.0, 5);
  CHECK(rz.max_residual == 0.0);

  HadamardDecomposition quad = hadamard_quadrature_decomposition(M(1, "(sin v1)"));
  VerificationReport r2 = verify_decomposition(quad, 100, 2.0, 5);
  CHECK(r2.samples_used == 100);
  CHECK(r2.max_residual <= 1e-8);
}

TEST_CASE("a pole on the segment raises instead of mis-verifying") {
  CHECK_THROWS(hadamard_quadrature(M(1, "(recip v1)"), {1.0}, {-1.0}));
  // pole far outside the sampling box: behaves like any smooth map
  HadamardDecomposition d = hadamard_quadrature_decomposition(M(1, "(recip (+ v1 10))"));
  VerificationReport r = verify_decomposition(d, 20, 2.0, 5);
  CHECK(r.samples_used == 20);
  CHECK(r.max_residual <= 1e-8);
}
