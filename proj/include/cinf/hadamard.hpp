#pragma once

#include <cstdint>
#include <vector>

#include "cinf/term.hpp"

namespace cinf {

enum class HadamardMode { exact, quadrature };

// f(x) - f(y) = sum (x_i - y_i) g_i(x, y), with the segment-integral cofactor
// g_i(x, y) = integral over [0,1] of df/dv_i(y + t(x - y)) fixed as the
// canonical choice in both modes. Cofactors live in 2n slots: x_i = v_i,
// y_i = v_{n+i}.
struct HadamardDecomposition {
  SmoothMap f;
  HadamardMode mode;
  std::vector<SmoothMap> cofactors;  // exact mode, arity 2n
  std::vector<SmoothMap> partials;   // quadrature mode: df/dv_i, arity n
  double max_verified_residual = 0.0;

  std::vector<double> cofactors_at(const std::vector<double>& x,
                                   const std::vector<double>& y) const;
};

// Closed-form cofactors for polynomial f; throws NotPolynomial otherwise.
HadamardDecomposition hadamard_exact(const SmoothMap& f);

// Quadrature-backed decomposition for general smooth f.
HadamardDecomposition hadamard_quadrature_decomposition(const SmoothMap& f);

// One-shot numeric cofactors at a point pair; throws DomainError on a pole
// along the segment, QuadratureFailure past the subdivision budget.
std::vector<double> hadamard_quadrature(const SmoothMap& f, const std::vector<double>& x,
                                        const std::vector<double>& y);
std::vector<double> hadamard_quadrature(const SmoothMap& f, const RealPoint& x,
                                        const RealPoint& y);

struct VerificationReport {
  double max_residual = 0.0;
  int samples_used = 0;
  bool rejection_budget_exhausted = false;
};

// Samples pairs from [-box, box]^2n (rejecting pole-touching segments) and
// records the worst identity residual into d.max_verified_residual.
VerificationReport verify_decomposition(HadamardDecomposition& d, int samples, double box,
                                        std::uint64_t seed);

}  // namespace cinf
