#pragma once

#include <cstddef>
#include <functional>

#include "cinf/errors.hpp"

namespace cinf {

inline constexpr double kQuadratureAbsTol = 1e-10;
inline constexpr std::size_t kQuadratureMaxIntervals = std::size_t(1) << 15;

// Globally adaptive Gauss-Kronrod 7/15 on [a,b]. Splits the interval with the
// worst error estimate until the summed estimate drops below abs_tol; throws
// QuadratureFailure once the subdivision budget is spent. DomainError from the
// integrand propagates.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = kQuadratureAbsTol,
                          std::size_t max_intervals = kQuadratureMaxIntervals);

}  // namespace cinf
