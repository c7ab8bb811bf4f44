#include "cinf/hadamard.hpp"

#include <cmath>

#include "cinf/groebner.hpp"
#include "cinf/quadrature.hpp"
#include "cinf/random.hpp"

namespace cinf {

namespace {

MPoly mpoly_derivative(const MPoly& p, int var) {
  MPoly out = MPoly::zero(p.nvars);
  for (const auto& [e, c] : p.terms) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    d[var] -= 1;
    out.terms[std::move(d)] = c * e[var];
  }
  return out;
}

// integral over [0,1] of a polynomial in the variable `tvar`; the result
// drops that variable
MPoly integrate_unit_interval(const MPoly& p, int tvar) {
  MPoly out = MPoly::zero(p.nvars - 1);
  std::vector<int> e(p.nvars - 1);
  for (const auto& [ep, c] : p.terms) {
    int k = ep[tvar];
    std::size_t w = 0;
    for (int i = 0; i < p.nvars; ++i)
      if (i != tvar) e[w++] = ep[i];
    auto [it, fresh] = out.terms.emplace(e, c / (k + 1));
    if (!fresh) {
      it->second += c / (k + 1);
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

}  // namespace

HadamardDecomposition hadamard_exact(const SmoothMap& f) {
  auto fp = to_mpoly(f);
  if (!fp) throw NotPolynomial("exact decomposition needs a polynomial map");
  const int n = f.arity();
  // segment substitution v_j -> y_j + t (x_j - y_j) in variables
  // (x_1..x_n, y_1..y_n, t)
  const int wide = 2 * n + 1;
  std::vector<MPoly> segment;
  segment.reserve(n);
  for (int j = 0; j < n; ++j) {
    MPoly xj = MPoly::variable(wide, j);
    MPoly yj = MPoly::variable(wide, n + j);
    MPoly t = MPoly::variable(wide, 2 * n);
    segment.push_back(yj + t * (xj - yj));
  }
  HadamardDecomposition d{f, HadamardMode::exact, {}, {}, 0.0};
  for (int i = 0; i < n; ++i) {
    MPoly di = mpoly_derivative(*fp, i);
    MPoly along = compose_mpoly(di, segment);
    d.cofactors.push_back(from_mpoly(integrate_unit_interval(along, 2 * n)));
  }
  return d;
}

HadamardDecomposition hadamard_quadrature_decomposition(const SmoothMap& f) {
  HadamardDecomposition d{f, HadamardMode::quadrature, {}, {}, 0.0};
  for (int i = 1; i <= f.arity(); ++i) d.partials.push_back(differentiate(f, i));
  return d;
}

std::vector<double> HadamardDecomposition::cofactors_at(const std::vector<double>& x,
                                                        const std::vector<double>& y) const {
  const int n = f.arity();
  std::vector<double> out(n, 0.0);
  if (mode == HadamardMode::exact) {
    std::vector<double> xy(x.begin(), x.end());
    xy.insert(xy.end(), y.begin(), y.end());
    for (int i = 0; i < n; ++i) out[i] = evaluate(cofactors[i], xy);
    return out;
  }
  std::vector<double> point(n);
  for (int i = 0; i < n; ++i) {
    out[i] = integrate_adaptive(
        [&](double t) {
          for (int j = 0; j < n; ++j) point[j] = y[j] + t * (x[j] - y[j]);
          return evaluate(partials[i], point);
        },
        0.0, 1.0);
  }
  return out;
}

std::vector<double> hadamard_quadrature(const SmoothMap& f, const std::vector<double>& x,
                                        const std::vector<double>& y) {
  return hadamard_quadrature_decomposition(f).cofactors_at(x, y);
}

std::vector<double> hadamard_quadrature(const SmoothMap& f, const RealPoint& x,
                                        const RealPoint& y) {
  std::vector<double> xs(f.arity()), ys(f.arity());
  for (int i = 0; i < f.arity(); ++i) {
    xs[i] = x.at(slot_name(i + 1));
    ys[i] = y.at(slot_name(i + 1));
  }
  return hadamard_quadrature(f, xs, ys);
}

VerificationReport verify_decomposition(HadamardDecomposition& d, int samples, double box,
                                        std::uint64_t seed) {
  const int n = d.f.arity();
  Rng rng(seed);
  VerificationReport report;
  const int rejection_budget = 64 * samples + 64;
  int rejections = 0;
  while (report.samples_used < samples) {
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(-box, box);
    for (int i = 0; i < n; ++i) y[i] = rng.uniform(-box, box);
    try {
      std::vector<double> g = d.cofactors_at(x, y);
      double residual = evaluate(d.f, x) - evaluate(d.f, y);
      for (int i = 0; i < n; ++i) residual -= (x[i] - y[i]) * g[i];
      report.max_residual = std::max(report.max_residual, std::abs(residual));
      ++report.samples_used;
    } catch (const DomainError&) {
      if (++rejections > rejection_budget) {
        report.rejection_budget_exhausted = true;
        break;
      }
    } catch (const QuadratureFailure&) {
      if (++rejections > rejection_budget) {
        report.rejection_budget_exhausted = true;
        break;
      }
    }
  }
  d.max_verified_residual = report.max_residual;
  return report;
}

}  // namespace cinf
