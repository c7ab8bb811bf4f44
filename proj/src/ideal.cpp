#include "cinf/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "cinf/groebner.hpp"
#include "cinf/hadamard.hpp"
#include "cinf/quadrature.hpp"
#include "cinf/random.hpp"

namespace cinf {

// ------------------------------------------------------------------- ideals

Ideal Ideal::make(int ambient_arity, std::vector<SmoothMap> gens) {
  Ideal out;
  out.ambient_arity = ambient_arity;
  for (auto& g : gens) {
    if (g.arity() > ambient_arity)
      throw ArityMismatch("generator arity " + std::to_string(g.arity()) +
                          " exceeds ambient arity " + std::to_string(ambient_arity));
    if (g.is_zero()) continue;
    out.generators.push_back(g.widen(ambient_arity));
  }
  std::sort(out.generators.begin(), out.generators.end(),
            [](const SmoothMap& a, const SmoothMap& b) { return compare(a, b) < 0; });
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end(),
                                   [](const SmoothMap& a, const SmoothMap& b) {
                                     return equal(a, b);
                                   }),
                       out.generators.end());
  return out;
}

bool Ideal::is_partial() const {
  for (const auto& g : generators)
    if (g.is_partial()) return true;
  return false;
}

bool equal(const Ideal& a, const Ideal& b) {
  if (a.ambient_arity != b.ambient_arity || a.generators.size() != b.generators.size())
    return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    if (!equal(a.generators[i], b.generators[i])) return false;
  return true;
}

Ideal ideal_join(const Ideal& a, const Ideal& b) {
  if (a.ambient_arity != b.ambient_arity)
    throw ArityMismatch("joining ideals over different ambient rings");
  std::vector<SmoothMap> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return Ideal::make(a.ambient_arity, std::move(gens));
}

// ----------------------------------------------------------------- cofactors

struct Cofactor::Node {
  enum class Kind { symbolic, segment, composed, sum, product } kind;
  int arity = 0;
  SmoothMap map;                   // symbolic body or segment integrand partial
  std::vector<SmoothMap> inner;    // composed
  std::vector<Cofactor> parts;     // composed (outer in parts[0]), sum, product
};

Cofactor::Cofactor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Cofactor Cofactor::symbolic(SmoothMap h) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::symbolic;
  n->arity = h.arity();
  n->map = std::move(h);
  return Cofactor(std::move(n));
}

Cofactor Cofactor::zero(int arity) { return symbolic(SmoothMap::constant(arity, 0)); }

Cofactor Cofactor::segment_integral(SmoothMap partial) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::segment;
  n->arity = 2 * partial.arity();
  n->map = std::move(partial);
  return Cofactor(std::move(n));
}

Cofactor Cofactor::composed(Cofactor outer, std::vector<SmoothMap> inner) {
  if (outer.arity() != static_cast<int>(inner.size()))
    throw ArityMismatch("cofactor composition arity mismatch");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::composed;
  n->arity = inner.empty() ? 0 : inner.front().arity();
  n->parts.push_back(std::move(outer));
  n->inner = std::move(inner);
  return Cofactor(std::move(n));
}

Cofactor Cofactor::sum(std::vector<Cofactor> parts, int arity) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::sum;
  n->arity = arity;
  n->parts = std::move(parts);
  return Cofactor(std::move(n));
}

Cofactor Cofactor::product(std::vector<Cofactor> parts, int arity) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::product;
  n->arity = arity;
  n->parts = std::move(parts);
  return Cofactor(std::move(n));
}

int Cofactor::arity() const { return node_->arity; }

bool Cofactor::quadrature_flagged() const {
  switch (node_->kind) {
    case Node::Kind::symbolic:
      return false;
    case Node::Kind::segment:
      return true;
    default:
      for (const auto& p : node_->parts)
        if (p.quadrature_flagged()) return true;
      return false;
  }
}

bool Cofactor::partial_flagged() const {
  switch (node_->kind) {
    case Node::Kind::symbolic:
    case Node::Kind::segment:
      return node_->map.is_partial();
    default: {
      for (const auto& p : node_->parts)
        if (p.partial_flagged()) return true;
      for (const auto& g : node_->inner)
        if (g.is_partial()) return true;
      return false;
    }
  }
}

std::optional<SmoothMap> Cofactor::as_term() const {
  switch (node_->kind) {
    case Node::Kind::symbolic:
      return node_->map;
    case Node::Kind::segment:
      return std::nullopt;
    case Node::Kind::composed: {
      auto outer = node_->parts.front().as_term();
      if (!outer) return std::nullopt;
      return compose(*outer, node_->inner);
    }
    case Node::Kind::sum: {
      SmoothMap acc = SmoothMap::constant(node_->arity, 0);
      for (const auto& p : node_->parts) {
        auto t = p.as_term();
        if (!t) return std::nullopt;
        acc = acc + t->widen(node_->arity);
      }
      return acc;
    }
    case Node::Kind::product: {
      SmoothMap acc = SmoothMap::constant(node_->arity, 1);
      for (const auto& p : node_->parts) {
        auto t = p.as_term();
        if (!t) return std::nullopt;
        acc = acc * t->widen(node_->arity);
      }
      return acc;
    }
  }
  return std::nullopt;
}

double Cofactor::eval(const std::vector<double>& point) const {
  switch (node_->kind) {
    case Node::Kind::symbolic:
      return evaluate(node_->map, point);
    case Node::Kind::segment: {
      const int k = node_->map.arity();
      std::vector<double> at(k);
      return integrate_adaptive(
          [&](double t) {
            for (int j = 0; j < k; ++j)
              at[j] = point[k + j] + t * (point[j] - point[k + j]);
            return evaluate(node_->map, at);
          },
          0.0, 1.0);
    }
    case Node::Kind::composed: {
      std::vector<double> inner_vals;
      inner_vals.reserve(node_->inner.size());
      for (const auto& g : node_->inner) inner_vals.push_back(evaluate(g, point));
      return node_->parts.front().eval(inner_vals);
    }
    case Node::Kind::sum: {
      double s = 0;
      for (const auto& p : node_->parts) s += p.eval(point);
      return s;
    }
    case Node::Kind::product: {
      double s = 1;
      for (const auto& p : node_->parts) s *= p.eval(point);
      return s;
    }
  }
  return 0;
}

// -------------------------------------------------------------- verification

bool verify_certificate(const SmoothMap& e, const Ideal& I,
                        const std::vector<Cofactor>& certificate, std::uint64_t seed,
                        int samples, std::string* diagnostics) {
  if (certificate.size() != I.generators.size()) {
    if (diagnostics) *diagnostics = "certificate length does not match generator count";
    return false;
  }
  const int n = I.ambient_arity;

  bool closed_form = true;
  std::vector<SmoothMap> closed;
  for (const auto& c : certificate) {
    auto t = c.as_term();
    if (!t) {
      closed_form = false;
      break;
    }
    closed.push_back(t->widen(n));
  }
  if (closed_form) {
    SmoothMap diff = e.widen(n);
    for (std::size_t i = 0; i < closed.size(); ++i)
      diff = diff - closed[i] * I.generators[i];
    if (diff.is_zero()) return true;
    bool all_poly = e.is_polynomial();
    for (const auto& g : I.generators) all_poly = all_poly && g.is_polynomial();
    for (const auto& h : closed) all_poly = all_poly && h.is_polynomial();
    if (all_poly) {
      if (diagnostics) *diagnostics = "symbolic residual nonzero: " + print_term(diff.body());
      return false;  // normalization is complete on the polynomial fragment
    }
  }

  Rng rng(seed);
  int used = 0, rejected = 0;
  const int budget = 64 * samples + 64;
  while (used < samples) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform(-2.0, 2.0);
    try {
      double residual = evaluate(e, v);
      for (std::size_t i = 0; i < certificate.size(); ++i)
        residual -= certificate[i].eval(v) * evaluate(I.generators[i], v);
      if (std::abs(residual) > kCertificateNumericTol) {
        if (diagnostics) {
          std::ostringstream os;
          os << "numeric residual " << std::abs(residual) << " above tolerance";
          *diagnostics = os.str();
        }
        return false;
      }
      ++used;
    } catch (const DomainError&) {
      if (++rejected > budget) {
        if (diagnostics) *diagnostics = "rejection budget exhausted";
        return false;
      }
    } catch (const QuadratureFailure&) {
      if (++rejected > budget) {
        if (diagnostics) *diagnostics = "rejection budget exhausted";
        return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------- numeric zero search

namespace {

// x = A^-1 b by Gaussian elimination with partial pivoting; false if singular
bool solve_linear(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
    if (std::abs(A[pivot][col]) < 1e-14) return false;
    std::swap(A[pivot], A[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      double m = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= m * A[col][c];
      b[r] -= m * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return true;
}

struct ZeroSystem {
  std::vector<SmoothMap> funcs;
  std::vector<std::vector<SmoothMap>> jacobian;  // funcs x slots
  int n = 0;

  explicit ZeroSystem(const std::vector<SmoothMap>& fs, int arity) : funcs(fs), n(arity) {
    for (const auto& f : funcs) {
      std::vector<SmoothMap> row;
      for (int j = 1; j <= n; ++j) row.push_back(differentiate(f.widen(n), j));
      jacobian.push_back(std::move(row));
    }
  }

  double sq_norm(const std::vector<double>& v) const {
    double s = 0;
    for (const auto& f : funcs) {
      double y = evaluate(f, v);
      s += y * y;
    }
    return s;
  }

  double max_abs(const std::vector<double>& v) const {
    double s = 0;
    for (const auto& f : funcs) s = std::max(s, std::abs(evaluate(f, v)));
    return s;
  }
};

// damped Gauss-Newton from one start; nullopt when it fails to converge
std::optional<std::vector<double>> newton_descend(const ZeroSystem& sys,
                                                  std::vector<double> v) {
  const int n = sys.n;
  const int m = static_cast<int>(sys.funcs.size());
  double lambda = 1e-3;
  for (int iter = 0; iter < 80; ++iter) {
    std::vector<double> g(m);
    double fv = 0;
    try {
      for (int j = 0; j < m; ++j) {
        g[j] = evaluate(sys.funcs[j], v);
        fv += g[j] * g[j];
      }
    } catch (const DomainError&) {
      return std::nullopt;
    }
    if (fv < 1e-24) return v;
    std::vector<std::vector<double>> J(m, std::vector<double>(n));
    try {
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k) J[j][k] = evaluate(sys.jacobian[j][k], v);
    } catch (const DomainError&) {
      return std::nullopt;
    }
    // (J^T J + lambda I) step = -J^T g
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n, 0.0);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c)
        for (int j = 0; j < m; ++j) A[r][c] += J[j][r] * J[j][c];
      A[r][r] += lambda;
      for (int j = 0; j < m; ++j) b[r] -= J[j][r] * g[j];
    }
    std::vector<double> step;
    if (!solve_linear(A, b, step)) return std::nullopt;
    std::vector<double> next(n);
    for (int k = 0; k < n; ++k) next[k] = v[k] + step[k];
    double fn;
    try {
      fn = sys.sq_norm(next);
    } catch (const DomainError&) {
      lambda *= 8;
      if (lambda > 1e10) return std::nullopt;
      continue;
    }
    if (fn < fv) {
      v = std::move(next);
      lambda = std::max(lambda * 0.35, 1e-12);
    } else {
      lambda *= 8;
      if (lambda > 1e10) return std::nullopt;
    }
  }
  try {
    if (sys.sq_norm(v) < 1e-24) return v;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

}  // namespace

// ----------------------------------------------------------- strategy chain

namespace {

std::string ideal_key(const Ideal& I) {
  std::string key = std::to_string(I.ambient_arity);
  for (const auto& g : I.generators) {
    key += '|';
    key += print_term(g.body());
  }
  return key;
}

struct CertificateCache {
  std::mutex mutex;
  std::map<std::string, ProvenIn> entries;

  std::optional<ProvenIn> find(const std::string& key) {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const ProvenIn& value) {
    std::lock_guard<std::mutex> lock(mutex);
    if (entries.size() > 4096) entries.clear();
    entries.emplace(key, value);
  }
};

CertificateCache& certificate_cache() {
  static CertificateCache cache;
  return cache;
}

ProvenIn make_proven(const SmoothMap& e, const Ideal& I, std::vector<Cofactor> certificate) {
  ProvenIn out;
  out.quadrature_flagged = false;
  out.partial_flagged = e.is_partial() || I.is_partial();
  for (const auto& c : certificate) {
    out.quadrature_flagged = out.quadrature_flagged || c.quadrature_flagged();
    out.partial_flagged = out.partial_flagged || c.partial_flagged();
  }
  out.certificate = std::move(certificate);
  return out;
}

// strategy (b): Groebner reduction over the polynomial generators; membership
// in the polynomial sub-ideal is membership in the full ideal
std::optional<ProvenIn> try_polynomial(const SmoothMap& e, const Ideal& I,
                                       const StrategyConfig& cfg) {
  if (!e.is_polynomial()) return std::nullopt;
  std::vector<std::size_t> poly_index;
  std::vector<MPoly> gens;
  for (std::size_t i = 0; i < I.generators.size(); ++i) {
    auto p = to_mpoly(I.generators[i]);
    if (!p) continue;
    poly_index.push_back(i);
    gens.push_back(std::move(*p));
  }
  if (gens.empty()) return std::nullopt;
  auto ep = to_mpoly(e.widen(I.ambient_arity));
  if (!ep) return std::nullopt;
  GroebnerResult gb = buchberger(gens, cfg.degree_cap, cfg.basis_cap);
  auto cof = member_cofactors(*ep, gb);
  if (!cof) return std::nullopt;
  std::vector<Cofactor> certificate(I.generators.size(), Cofactor::zero(I.ambient_arity));
  for (std::size_t k = 0; k < poly_index.size(); ++k)
    certificate[poly_index[k]] = Cofactor::symbolic(from_mpoly((*cof)[k]));
  if (!verify_certificate(e, I, certificate, cfg.seed, 4))
    throw Error("internal: polynomial certificate failed re-verification");
  return make_proven(e, I, std::move(certificate));
}

// strategy (c): generators that are coordinate slots S. The Hadamard split
// e = (e - e|S->0) + e|S->0 puts the first part in (S) with segment-integral
// cofactors; the tail either dies symbolically or is decided recursively.
std::optional<MembershipVerdict> try_coordinate_split(const SmoothMap& e, const Ideal& I,
                                                      const StrategyConfig& cfg) {
  const int n = I.ambient_arity;
  std::vector<int> slot_of_gen(I.generators.size(), 0);  // 1-based slot, 0 = not a slot
  std::vector<bool> scaled(n, false);
  bool any = false;
  for (std::size_t i = 0; i < I.generators.size(); ++i) {
    const Term& b = I.generators[i].body();
    if (b.kind() != TermKind::variable) continue;
    for (int j = 1; j <= n; ++j)
      if (b.name() == slot_name(j)) {
        slot_of_gen[i] = j;
        scaled[j - 1] = true;
        any = true;
      }
  }
  if (!any) return std::nullopt;

  std::map<std::string, Term> kill;
  for (int j = 1; j <= n; ++j)
    if (scaled[j - 1]) kill[slot_name(j)] = Term::constant(0);
  Term tail = normalize(substitute(e.widen(n).body(), kill));
  if (equal(tail, e.widen(n).body())) return std::nullopt;  // no S dependence

  // cofactor for slot j: integral over [0,1] of de/dv_j at the S-scaled point
  auto scaled_cofactor = [&](int j) -> Cofactor {
    SmoothMap partial = differentiate(e.widen(n), j);
    if (e.is_polynomial()) {
      // exact segment integral via the closed form, x = v, y = v with S -> 0
      auto p = to_mpoly(partial);
      const int wide = n + 1;  // slots plus t
      std::vector<MPoly> seg;
      for (int k = 0; k < n; ++k) {
        MPoly vk = MPoly::variable(wide, k);
        seg.push_back(scaled[k] ? MPoly::variable(wide, n) * vk : vk);
      }
      MPoly along = compose_mpoly(*p, seg);
      // integrate out t (the last variable)
      MPoly res = MPoly::zero(n);
      for (const auto& [ex, c] : along.terms) {
        std::vector<int> m(ex.begin(), ex.begin() + n);
        int tdeg = ex[n];
        auto [it, fresh] = res.terms.emplace(std::move(m), c / (tdeg + 1));
        if (!fresh) {
          it->second += c / (tdeg + 1);
          if (it->second == 0) res.terms.erase(it);
        }
      }
      return Cofactor::symbolic(from_mpoly(res));
    }
    std::vector<SmoothMap> inner;
    for (int k = 1; k <= n; ++k) inner.push_back(SmoothMap::projection(n, k));
    for (int k = 1; k <= n; ++k)
      inner.push_back(scaled[k - 1] ? SmoothMap::constant(n, 0)
                                    : SmoothMap::projection(n, k));
    return Cofactor::composed(Cofactor::segment_integral(partial), std::move(inner));
  };

  std::vector<Cofactor> certificate;
  certificate.reserve(I.generators.size());
  for (std::size_t i = 0; i < I.generators.size(); ++i)
    certificate.push_back(slot_of_gen[i] ? scaled_cofactor(slot_of_gen[i])
                                         : Cofactor::zero(n));
  if (tail.is_zero()) return MembershipVerdict{make_proven(e, I, std::move(certificate))};

  // decide the S-free tail; any verdict transfers because e - tail lies in (S)
  SmoothMap tail_map(n, tail);
  MembershipVerdict rest = ideal_membership(tail_map, I, cfg);
  if (is_proven(rest)) {
    const auto& proof = std::get<ProvenIn>(rest);
    for (std::size_t i = 0; i < certificate.size(); ++i)
      certificate[i] = Cofactor::sum({certificate[i], proof.certificate[i]}, n);
    return MembershipVerdict{make_proven(e, I, std::move(certificate))};
  }
  if (is_refuted(rest)) {
    // at a common zero the split part vanishes, so the witness still separates
    RefutedNumerically r = std::get<RefutedNumerically>(rest);
    try {
      double value = evaluate(e.widen(n), r.witness);
      if (std::abs(value) >= kRefutationElementFloor) {
        r.element_value = value;
        return MembershipVerdict{std::move(r)};
      }
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

// strategy (d): a generator bounded away from zero on the probe set makes the
// ideal the unit ideal; invert it with a recip term
std::optional<ProvenIn> try_unit_detection(const SmoothMap& e, const Ideal& I,
                                           const StrategyConfig& cfg) {
  const int n = I.ambient_arity;
  for (std::size_t gi = 0; gi < I.generators.size(); ++gi) {
    const SmoothMap& g = I.generators[gi];
    // probe lattice plus seeded fill
    std::vector<std::vector<double>> probes;
    if (n == 0) {
      probes.push_back({});
    } else if (n <= 4) {
      const double ticks[5] = {-4, -2, 0, 2, 4};
      std::vector<int> idx(n, 0);
      for (;;) {
        std::vector<double> p(n);
        for (int k = 0; k < n; ++k) p[k] = ticks[idx[k]];
        probes.push_back(std::move(p));
        int k = 0;
        while (k < n && ++idx[k] == 5) idx[k++] = 0;
        if (k == n) break;
      }
    }
    Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    while (probes.size() < 256 && n > 0) {
      std::vector<double> p(n);
      for (int k = 0; k < n; ++k) p[k] = rng.uniform(-cfg.refutation_box, cfg.refutation_box);
      probes.push_back(std::move(p));
    }
    double min_abs = std::numeric_limits<double>::infinity();
    int evaluated = 0;
    for (const auto& p : probes) {
      try {
        min_abs = std::min(min_abs, std::abs(evaluate(g, p)));
        ++evaluated;
      } catch (const DomainError&) {
      }
    }
    if (evaluated < static_cast<int>(probes.size() + 1) / 2 || min_abs < 1e-3) continue;
    // confirm: no zero reachable by the descent either
    bool zero_found = false;
    if (n > 0) {
      ZeroSystem sys({g}, n);
      Rng starts(cfg.seed ^ (0xa076'1d64'78bd'642full + gi));
      for (int s = 0; s < cfg.refutation_starts && !zero_found; ++s) {
        std::vector<double> v(n);
        for (int k = 0; k < n; ++k)
          v[k] = starts.uniform(-cfg.refutation_box, cfg.refutation_box);
        zero_found = newton_descend(sys, v).has_value();
      }
    }
    if (zero_found) continue;
    // e = (e * recip(g)) * g
    SmoothMap inverse(n, Term::apply(Prim::recip, {g.body()}));
    std::vector<Cofactor> certificate(I.generators.size(), Cofactor::zero(n));
    certificate[gi] = Cofactor::symbolic(e.widen(n) * inverse);
    return make_proven(e, I, std::move(certificate));
  }
  return std::nullopt;
}

// strategy (e): find a common zero of the generators that the element misses
std::optional<RefutedNumerically> try_refutation(const SmoothMap& e, const Ideal& I,
                                                 const StrategyConfig& cfg) {
  const int n = I.ambient_arity;
  Rng rng(cfg.seed ^ 0xd1b5'4a32'd192'ed03ull);
  auto attempt = [&](const std::vector<double>& z) -> std::optional<RefutedNumerically> {
    double worst = 0;
    try {
      for (const auto& g : I.generators) worst = std::max(worst, std::abs(evaluate(g, z)));
      if (worst > kGeneratorResidualTol) return std::nullopt;
      double ev = evaluate(e, z);
      if (std::abs(ev) < kRefutationElementFloor) return std::nullopt;
      RefutedNumerically out;
      out.witness = RealPoint::slots(z);
      out.generator_residual = worst;
      out.element_value = ev;
      return out;
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };

  if (I.generators.empty() || n == 0) {
    // zero ideal or empty point: sampling alone decides
    for (int s = 0; s < cfg.refutation_starts; ++s) {
      std::vector<double> z(n);
      for (int k = 0; k < n; ++k) z[k] = rng.uniform(-cfg.refutation_box, cfg.refutation_box);
      if (auto r = attempt(z)) return r;
    }
    return std::nullopt;
  }

  ZeroSystem sys(I.generators, n);
  for (int s = 0; s < cfg.refutation_starts; ++s) {
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = rng.uniform(-cfg.refutation_box, cfg.refutation_box);
    auto z = newton_descend(sys, v);
    if (!z) continue;
    if (auto r = attempt(*z)) return r;
  }
  return std::nullopt;
}

}  // namespace

MembershipVerdict ideal_membership(const SmoothMap& e, const Ideal& I,
                                   const StrategyConfig& cfg) {
  if (e.arity() > I.ambient_arity)
    throw ArityMismatch("element arity exceeds the ambient ring");
  const int n = I.ambient_arity;
  const SmoothMap elem = e.widen(n);
  std::vector<std::string> tried;

  // caching is only sound per strategy configuration
  std::string cache_key = ideal_key(I) + "#" + print_term(elem.body()) + "#";
  cache_key += char('0' + cfg.syntactic);
  cache_key += char('0' + cfg.polynomial_reduction);
  cache_key += char('0' + cfg.coordinate_split);
  cache_key += char('0' + cfg.unit_detection);
  cache_key += char('0' + cfg.numeric_refutation);
  cache_key += ":" + std::to_string(cfg.degree_cap) + ":" + std::to_string(cfg.basis_cap) +
               ":" + std::to_string(cfg.seed);

  if (cfg.syntactic) {
    tried.push_back("syntactic");
    if (elem.is_zero())
      return make_proven(elem, I,
                         std::vector<Cofactor>(I.generators.size(), Cofactor::zero(n)));
    for (std::size_t i = 0; i < I.generators.size(); ++i) {
      if (!equal(elem, I.generators[i])) continue;
      std::vector<Cofactor> certificate(I.generators.size(), Cofactor::zero(n));
      certificate[i] = Cofactor::symbolic(SmoothMap::constant(n, 1));
      return make_proven(elem, I, std::move(certificate));
    }
    if (cfg.use_cache) {
      if (auto hit = certificate_cache().find(cache_key)) return *hit;
    }
  }

  if (cfg.polynomial_reduction) {
    tried.push_back("polynomial");
    if (auto proven = try_polynomial(elem, I, cfg)) {
      if (cfg.use_cache) certificate_cache().store(cache_key, *proven);
      return *proven;
    }
  }

  if (cfg.coordinate_split) {
    tried.push_back("coordinate-split");
    if (auto verdict = try_coordinate_split(elem, I, cfg)) {
      if (cfg.use_cache && is_proven(*verdict))
        certificate_cache().store(cache_key, std::get<ProvenIn>(*verdict));
      return *verdict;
    }
  }

  if (cfg.unit_detection) {
    tried.push_back("unit-detection");
    if (auto proven = try_unit_detection(elem, I, cfg)) {
      if (cfg.use_cache) certificate_cache().store(cache_key, *proven);
      return *proven;
    }
  }

  if (cfg.numeric_refutation) {
    tried.push_back("numeric-refutation");
    if (auto refuted = try_refutation(elem, I, cfg)) return *refuted;
  }

  return Unknown{std::move(tried)};
}

// -------------------------------------------------------------- congruences

Congruence ideal_to_congruence(Ideal I) { return Congruence{std::move(I)}; }

Ideal congruence_to_ideal(const Congruence& R) { return R.underlying; }

Congruence congruence_from_pairs(int ambient_arity,
                                 const std::vector<std::pair<SmoothMap, SmoothMap>>& pairs) {
  std::vector<SmoothMap> gens;
  gens.reserve(pairs.size());
  for (const auto& [a, b] : pairs) gens.push_back(a - b);
  return Congruence{Ideal::make(ambient_arity, std::move(gens))};
}

MembershipVerdict congruence_contains(const Congruence& R, const SmoothMap& a,
                                      const SmoothMap& b, const StrategyConfig& cfg) {
  return ideal_membership(a - b, R.underlying, cfg);
}

ProvenIn compatibility_certificate(const SmoothMap& f,
                                   const std::vector<std::pair<SmoothMap, SmoothMap>>& pairs,
                                   const std::vector<std::vector<Cofactor>>& difference_certs,
                                   const Ideal& I) {
  const int k = f.arity();
  if (static_cast<int>(pairs.size()) != k || difference_certs.size() != pairs.size())
    throw ArityMismatch("one pair and one difference certificate per argument slot");
  const int n = I.ambient_arity;

  // Hadamard cofactors of f, composed with (a_1..a_k, b_1..b_k)
  std::vector<SmoothMap> inner;
  inner.reserve(2 * k);
  for (const auto& [a, b] : pairs) inner.push_back(a.widen(n));
  for (const auto& [a, b] : pairs) inner.push_back(b.widen(n));

  std::vector<Cofactor> hadamard_at;  // G_i(a, b), arity n
  if (f.is_polynomial()) {
    HadamardDecomposition d = hadamard_exact(f);
    for (const auto& g : d.cofactors)
      hadamard_at.push_back(Cofactor::composed(Cofactor::symbolic(g), inner));
  } else {
    for (int i = 1; i <= k; ++i)
      hadamard_at.push_back(
          Cofactor::composed(Cofactor::segment_integral(differentiate(f, i)), inner));
  }

  // f(a) - f(b) = sum_i (a_i - b_i) G_i(a,b) and a_i - b_i = sum_j h_ij g_j
  std::vector<Cofactor> certificate;
  certificate.reserve(I.generators.size());
  for (std::size_t j = 0; j < I.generators.size(); ++j) {
    std::vector<Cofactor> parts;
    for (int i = 0; i < k; ++i)
      parts.push_back(Cofactor::product({hadamard_at[i], difference_certs[i][j]}, n));
    certificate.push_back(Cofactor::sum(std::move(parts), n));
  }

  std::vector<SmoothMap> lhs_args, rhs_args;
  for (const auto& [a, b] : pairs) lhs_args.push_back(a.widen(n));
  for (const auto& [a, b] : pairs) rhs_args.push_back(b.widen(n));
  SmoothMap image = compose(f, lhs_args) - compose(f, rhs_args);
  return make_proven(image, I, std::move(certificate));
}

// ------------------------------------------------------------ product ideals

std::pair<Ideal, Ideal> ideal_product_split(const ProductIdeal& K) {
  std::vector<SmoothMap> first, second;
  first.reserve(K.pairs.size());
  second.reserve(K.pairs.size());
  for (const auto& [a, b] : K.pairs) {
    first.push_back(a);
    second.push_back(b);
  }
  return {Ideal::make(K.arity_first, std::move(first)),
          Ideal::make(K.arity_second, std::move(second))};
}

ProductIdeal pair_to_product(const Ideal& a, const Ideal& b) {
  ProductIdeal out;
  out.arity_first = a.ambient_arity;
  out.arity_second = b.ambient_arity;
  for (const auto& g : a.generators)
    out.pairs.emplace_back(g, SmoothMap::constant(b.ambient_arity, 0));
  for (const auto& g : b.generators)
    out.pairs.emplace_back(SmoothMap::constant(a.ambient_arity, 0), g);
  return out;
}

}  // namespace cinf
