#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cinf::accept {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

namespace {

// scale to a primitive integer polynomial; keeps the completion's coefficient
// growth in check without changing the generated ideal
void make_primitive(OraclePoly& p) {
  if (p.is_zero()) return;
  BigInt denom_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : p.coeffs) denom_lcm = lcm(denom_lcm, denominator(c));
  for (const auto& [m, c] : p.coeffs) num_gcd = gcd(num_gcd, BigInt(numerator(c) * (denom_lcm / denominator(c))));
  Rational scale(denom_lcm, num_gcd);
  for (auto& [m, c] : p.coeffs) c *= scale;
}

void accumulate(OraclePoly& p, const std::vector<int>& mono, const Rational& c) {
  auto [it, fresh] = p.coeffs.emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.coeffs.erase(it);
  }
}

OraclePoly o_constant(int nvars, const Rational& c) {
  OraclePoly p;
  p.nvars = nvars;
  if (c != 0) p.coeffs[std::vector<int>(nvars, 0)] = c;
  return p;
}

OraclePoly o_add(const OraclePoly& a, const OraclePoly& b) {
  OraclePoly out = a;
  for (const auto& [m, c] : b.coeffs) accumulate(out, m, c);
  return out;
}

OraclePoly o_mul(const OraclePoly& a, const OraclePoly& b) {
  OraclePoly out;
  out.nvars = a.nvars;
  std::vector<int> m(a.nvars);
  for (const auto& [ma, ca] : a.coeffs)
    for (const auto& [mb, cb] : b.coeffs) {
      for (int i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
      accumulate(out, m, ca * cb);
    }
  return out;
}

OraclePoly o_scale(const OraclePoly& a, const Rational& c) {
  OraclePoly out;
  out.nvars = a.nvars;
  if (c == 0) return out;
  for (const auto& [m, k] : a.coeffs) out.coeffs[m] = k * c;
  return out;
}

}  // namespace

std::optional<OraclePoly> oracle_ingest(const Term& raw, int nvars) {
  switch (raw.kind()) {
    case TermKind::constant:
      return o_constant(nvars, raw.value());
    case TermKind::variable: {
      const std::string& name = raw.name();
      if (name.size() < 2 || name[0] != 'v') return std::nullopt;
      int index = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        index = index * 10 + (name[i] - '0');
      }
      if (index < 1 || index > nvars) return std::nullopt;
      OraclePoly p;
      p.nvars = nvars;
      std::vector<int> m(nvars, 0);
      m[index - 1] = 1;
      p.coeffs[std::move(m)] = 1;
      return p;
    }
    case TermKind::apply: {
      switch (raw.op()) {
        case Prim::add: {
          OraclePoly out = o_constant(nvars, 0);
          for (const auto& a : raw.args()) {
            auto p = oracle_ingest(a, nvars);
            if (!p) return std::nullopt;
            out = o_add(out, *p);
          }
          return out;
        }
        case Prim::mul: {
          OraclePoly out = o_constant(nvars, 1);
          for (const auto& a : raw.args()) {
            auto p = oracle_ingest(a, nvars);
            if (!p) return std::nullopt;
            out = o_mul(out, *p);
          }
          return out;
        }
        case Prim::neg: {
          auto p = oracle_ingest(raw.args()[0], nvars);
          if (!p) return std::nullopt;
          return o_scale(*p, -1);
        }
        default:
          return std::nullopt;
      }
    }
    case TermKind::defined_apply: {
      // expand the defined symbol through its body
      std::map<std::string, Term> binding;
      for (int i = 0; i < raw.map().arity(); ++i)
        binding[slot_name(i + 1)] = raw.args()[i];
      return oracle_ingest(substitute(raw.map().body(), binding), nvars);
    }
  }
  return std::nullopt;
}

namespace {

// leading = lexicographically largest monomial
const std::vector<int>& leading(const OraclePoly& p) { return p.coeffs.rbegin()->first; }
const Rational& leading_coeff(const OraclePoly& p) { return p.coeffs.rbegin()->second; }

bool mono_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

OraclePoly mono_times(const OraclePoly& p, const std::vector<int>& m, const Rational& c) {
  OraclePoly out;
  out.nvars = p.nvars;
  std::vector<int> e(p.nvars);
  for (const auto& [mp, cp] : p.coeffs) {
    for (int i = 0; i < p.nvars; ++i) e[i] = mp[i] + m[i];
    out.coeffs[e] = cp * c;
  }
  return out;
}

OraclePoly remainder(OraclePoly p, const std::vector<OraclePoly>& basis) {
  OraclePoly rest;
  rest.nvars = p.nvars;
  while (!p.is_zero()) {
    bool reduced = false;
    for (const auto& b : basis) {
      if (b.is_zero() || !mono_divides(leading(b), leading(p))) continue;
      std::vector<int> q(p.nvars);
      for (int i = 0; i < p.nvars; ++i) q[i] = leading(p)[i] - leading(b)[i];
      p = o_add(p, o_scale(mono_times(b, q, leading_coeff(p) / leading_coeff(b)), -1));
      reduced = true;
      break;
    }
    if (!reduced) {
      accumulate(rest, leading(p), leading_coeff(p));
      OraclePoly lt;
      lt.nvars = p.nvars;
      lt.coeffs[leading(p)] = leading_coeff(p);
      p = o_add(p, o_scale(lt, -1));
    }
  }
  return rest;
}

}  // namespace

bool oracle_member(const OraclePoly& e, const std::vector<OraclePoly>& gens) {
  std::vector<OraclePoly> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      basis.push_back(g);
      make_primitive(basis.back());
    }
  if (basis.empty()) return e.is_zero();

  // plain Buchberger completion, no criteria, no caps
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = basis.size();
    for (std::size_t i = 0; i < count && !grew; ++i)
      for (std::size_t j = i + 1; j < count && !grew; ++j) {
        std::vector<int> lcm(basis[i].nvars);
        for (int k = 0; k < basis[i].nvars; ++k)
          lcm[k] = std::max(leading(basis[i])[k], leading(basis[j])[k]);
        std::vector<int> qi(lcm.size()), qj(lcm.size());
        for (std::size_t k = 0; k < lcm.size(); ++k) {
          qi[k] = lcm[k] - leading(basis[i])[k];
          qj[k] = lcm[k] - leading(basis[j])[k];
        }
        OraclePoly s =
            o_add(mono_times(basis[i], qi, Rational(1) / leading_coeff(basis[i])),
                  o_scale(mono_times(basis[j], qj, Rational(1) / leading_coeff(basis[j])), -1));
        OraclePoly r = remainder(std::move(s), basis);
        if (!r.is_zero()) {
          make_primitive(r);
          basis.push_back(std::move(r));
          grew = true;
        }
      }
  }
  return remainder(e, basis).is_zero();
}

}  // namespace cinf::accept
