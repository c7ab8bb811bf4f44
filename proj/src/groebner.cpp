#include "cinf/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace cinf {

bool DegRevLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

MPoly MPoly::zero(int nvars) {
  MPoly p;
  p.nvars = nvars;
  return p;
}

MPoly MPoly::constant(int nvars, Rational c) {
  MPoly p = zero(nvars);
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = std::move(c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  MPoly p = zero(nvars);
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  p.terms[std::move(e)] = 1;
  return p;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

const std::vector<int>& MPoly::leading_monomial() const { return terms.rbegin()->first; }
const Rational& MPoly::leading_coefficient() const { return terms.rbegin()->second; }

namespace {
void add_into(MPoly& a, const std::vector<int>& e, const Rational& c) {
  auto [it, fresh] = a.terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) a.terms.erase(it);
  }
}
}  // namespace

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, c] : b.terms) add_into(out, e, c);
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, c] : b.terms) add_into(out, e, -c);
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out = MPoly::zero(a.nvars);
  std::vector<int> e(a.nvars, 0);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      add_into(out, e, ca * cb);
    }
  return out;
}

MPoly operator*(const Rational& c, const MPoly& a) {
  MPoly out = MPoly::zero(a.nvars);
  if (c == 0) return out;
  for (const auto& [e, k] : a.terms) out.terms[e] = c * k;
  return out;
}

MPoly mono_mul(const MPoly& p, const std::vector<int>& mono, const Rational& c) {
  MPoly out = MPoly::zero(p.nvars);
  if (c == 0) return out;
  std::vector<int> e(p.nvars, 0);
  for (const auto& [ep, cp] : p.terms) {
    for (int i = 0; i < p.nvars; ++i) e[i] = ep[i] + mono[i];
    out.terms[e] = cp * c;
  }
  return out;
}

namespace {

std::optional<MPoly> term_to_mpoly(const Term& t, int nvars) {
  switch (t.kind()) {
    case TermKind::constant:
      return MPoly::constant(nvars, t.value());
    case TermKind::variable: {
      // slot names only; anything else is not in the ambient free ring
      const std::string& n = t.name();
      if (n.size() < 2 || n[0] != 'v') return std::nullopt;
      int idx = 0;
      for (std::size_t i = 1; i < n.size(); ++i) {
        if (n[i] < '0' || n[i] > '9') return std::nullopt;
        idx = idx * 10 + (n[i] - '0');
      }
      if (idx < 1 || idx > nvars) return std::nullopt;
      return MPoly::variable(nvars, idx - 1);
    }
    case TermKind::apply:
      switch (t.op()) {
        case Prim::add: {
          MPoly out = MPoly::zero(nvars);
          for (const auto& a : t.args()) {
            auto p = term_to_mpoly(a, nvars);
            if (!p) return std::nullopt;
            out = out + *p;
          }
          return out;
        }
        case Prim::mul: {
          MPoly out = MPoly::constant(nvars, 1);
          for (const auto& a : t.args()) {
            auto p = term_to_mpoly(a, nvars);
            if (!p) return std::nullopt;
            out = out * *p;
          }
          return out;
        }
        case Prim::neg: {
          auto p = term_to_mpoly(t.args()[0], nvars);
          if (!p) return std::nullopt;
          return Rational(-1) * *p;
        }
        default:
          return std::nullopt;
      }
    case TermKind::defined_apply:
      return std::nullopt;  // callers normalize first
  }
  return std::nullopt;
}

}  // namespace

std::optional<MPoly> to_mpoly(const SmoothMap& f) {
  if (!f.is_polynomial()) return std::nullopt;
  return term_to_mpoly(f.body(), f.arity());
}

SmoothMap from_mpoly(const MPoly& p) {
  std::vector<Term> monomials;
  for (const auto& [e, c] : p.terms) {
    std::vector<Term> factors{Term::constant(c)};
    for (int i = 0; i < p.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) factors.push_back(slot(i + 1));
    monomials.push_back(factors.size() == 1 ? factors.front()
                                            : Term::apply(Prim::mul, std::move(factors)));
  }
  if (monomials.empty()) return SmoothMap::constant(p.nvars, 0);
  Term body = monomials.size() == 1 ? monomials.front() : Term::apply(Prim::add, std::move(monomials));
  return SmoothMap(p.nvars, body);
}

MPoly compose_mpoly(const MPoly& f, const std::vector<MPoly>& args) {
  int target = args.empty() ? 0 : args.front().nvars;
  MPoly out = MPoly::zero(target);
  for (const auto& [e, c] : f.terms) {
    MPoly m = MPoly::constant(target, c);
    for (int i = 0; i < f.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) m = m * args[i];
    out = out + m;
  }
  return out;
}

namespace {
bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
}  // namespace

Reduction reduce(const MPoly& p, const std::vector<MPoly>& basis) {
  Reduction out;
  out.remainder = MPoly::zero(p.nvars);
  out.quotients.assign(basis.size(), MPoly::zero(p.nvars));
  MPoly work = p;
  while (!work.is_zero()) {
    const auto& lm = work.leading_monomial();
    const Rational& lc = work.leading_coefficient();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero() || !divides(basis[i].leading_monomial(), lm)) continue;
      std::vector<int> q(lm.size());
      for (std::size_t k = 0; k < lm.size(); ++k) q[k] = lm[k] - basis[i].leading_monomial()[k];
      Rational coef = lc / basis[i].leading_coefficient();
      add_into(out.quotients[i], q, coef);
      work = work - mono_mul(basis[i], q, coef);
      reduced = true;
      break;
    }
    if (!reduced) {
      add_into(out.remainder, lm, lc);
      MPoly lt = MPoly::zero(p.nvars);
      lt.terms[lm] = lc;
      work = work - lt;
    }
  }
  return out;
}

namespace {

// scale factor turning p into a primitive integer polynomial; controls the
// coefficient growth through the completion
Rational primitive_scale(const MPoly& p) {
  BigInt denom_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms) denom_lcm = lcm(denom_lcm, denominator(c));
  for (const auto& [e, c] : p.terms)
    num_gcd = gcd(num_gcd, BigInt(numerator(c) * (denom_lcm / denominator(c))));
  Rational scale(denom_lcm, num_gcd);
  if (p.leading_coefficient() < 0) scale = -scale;
  return scale;
}

}  // namespace

GroebnerResult buchberger(const std::vector<MPoly>& generators, int degree_cap, int basis_cap) {
  GroebnerResult gb;
  const int nvars = generators.empty() ? 0 : generators.front().nvars;
  const std::size_t ngens = generators.size();
  for (std::size_t j = 0; j < ngens; ++j) {
    if (generators[j].is_zero()) continue;
    Rational scale = primitive_scale(generators[j]);
    gb.basis.push_back(scale * generators[j]);
    std::vector<MPoly> rep(ngens, MPoly::zero(nvars));
    rep[j] = MPoly::constant(nvars, scale);
    gb.reps.push_back(std::move(rep));
  }

  struct Pair {
    int lcm_degree;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
      return std::tie(lcm_degree, i, j) < std::tie(o.lcm_degree, o.i, o.j);
    }
  };
  std::set<Pair> pairs;
  auto queue_pair = [&](std::size_t i, std::size_t j) {
    const auto& mi = gb.basis[i].leading_monomial();
    const auto& mj = gb.basis[j].leading_monomial();
    int lcm_deg = 0;
    for (std::size_t k = 0; k < mi.size(); ++k) lcm_deg += std::max(mi[k], mj[k]);
    pairs.insert(Pair{lcm_deg, i, j});
  };
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j) queue_pair(i, j);

  // work budget: runaway instances degrade to an incomplete basis, never hang
  long reductions_left = 4096;
  while (!pairs.empty()) {
    if (reductions_left-- <= 0) {
      gb.complete = false;
      break;
    }
    auto [lcm_deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const auto& mi = gb.basis[i].leading_monomial();
    const auto& mj = gb.basis[j].leading_monomial();
    std::vector<int> lcm(mi.size());
    bool coprime = true;
    for (std::size_t k = 0; k < mi.size(); ++k) {
      lcm[k] = std::max(mi[k], mj[k]);
      if (mi[k] > 0 && mj[k] > 0) coprime = false;
    }
    if (coprime) continue;  // product criterion
    if (lcm_deg > degree_cap) {
      gb.complete = false;
      continue;
    }
    std::vector<int> qi(mi.size()), qj(mi.size());
    for (std::size_t k = 0; k < mi.size(); ++k) {
      qi[k] = lcm[k] - mi[k];
      qj[k] = lcm[k] - mj[k];
    }
    MPoly s = mono_mul(gb.basis[i], qi, Rational(1) / gb.basis[i].leading_coefficient()) -
              mono_mul(gb.basis[j], qj, Rational(1) / gb.basis[j].leading_coefficient());
    Reduction red = reduce(s, gb.basis);
    if (red.remainder.is_zero()) continue;
    if (red.remainder.total_degree() > degree_cap ||
        gb.basis.size() >= static_cast<std::size_t>(basis_cap)) {
      gb.complete = false;
      continue;
    }
    // rep of the remainder in terms of the original generators
    std::vector<MPoly> rep(ngens, MPoly::zero(nvars));
    for (std::size_t g = 0; g < ngens; ++g) {
      rep[g] = mono_mul(gb.reps[i][g], qi, Rational(1) / gb.basis[i].leading_coefficient()) -
               mono_mul(gb.reps[j][g], qj, Rational(1) / gb.basis[j].leading_coefficient());
      for (std::size_t b = 0; b < gb.basis.size(); ++b)
        rep[g] = rep[g] - red.quotients[b] * gb.reps[b][g];
    }
    Rational scale = primitive_scale(red.remainder);
    MPoly primitive = scale * red.remainder;
    for (auto& r : rep) r = scale * r;
    gb.basis.push_back(std::move(primitive));
    gb.reps.push_back(std::move(rep));
    for (std::size_t k = 0; k + 1 < gb.basis.size(); ++k) queue_pair(k, gb.basis.size() - 1);
  }
  return gb;
}

std::optional<std::vector<MPoly>> member_cofactors(const MPoly& e, const GroebnerResult& gb) {
  Reduction red = reduce(e, gb.basis);
  if (!red.remainder.is_zero()) return std::nullopt;
  const std::size_t ngens = gb.reps.empty() ? 0 : gb.reps.front().size();
  std::vector<MPoly> cof(ngens, MPoly::zero(e.nvars));
  for (std::size_t b = 0; b < gb.basis.size(); ++b)
    for (std::size_t g = 0; g < ngens; ++g)
      cof[g] = cof[g] + red.quotients[b] * gb.reps[b][g];
  return cof;
}

}  // namespace cinf
