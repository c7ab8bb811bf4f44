#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cinf/term.hpp"

namespace cinf {

// Finitely generated ideal of the free ring C^inf(R^n). Generators are kept
// normalized, sorted and deduplicated; the zero map is never stored.
struct Ideal {
  int ambient_arity = 0;
  std::vector<SmoothMap> generators;

  static Ideal make(int ambient_arity, std::vector<SmoothMap> gens);
  bool is_zero() const { return generators.empty(); }
  bool is_partial() const;
};

bool equal(const Ideal& a, const Ideal& b);
Ideal ideal_join(const Ideal& a, const Ideal& b);

// A cofactor in a membership certificate: a smooth map given either in closed
// form or as a segment-integral evaluator (the Hadamard cofactor shape), and
// closed under composition, sums and products so certificates can be
// assembled the way the congruence-compatibility proof does.
class Cofactor {
 public:
  static Cofactor symbolic(SmoothMap h);
  static Cofactor zero(int arity);
  // (x, y) -> integral over [0,1] of partial(y + t (x - y)); arity 2k
  static Cofactor segment_integral(SmoothMap partial);
  static Cofactor composed(Cofactor outer, std::vector<SmoothMap> inner);
  static Cofactor sum(std::vector<Cofactor> parts, int arity);
  static Cofactor product(std::vector<Cofactor> parts, int arity);

  int arity() const;
  bool quadrature_flagged() const;  // any segment-integral node
  bool partial_flagged() const;     // any partial primitive in symbolic parts
  // closed form when no segment-integral node is involved
  std::optional<SmoothMap> as_term() const;
  double eval(const std::vector<double>& point) const;

 private:
  struct Node;
  explicit Cofactor(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct ProvenIn {
  std::vector<Cofactor> certificate;  // element = sum certificate[i] * generator[i]
  bool quadrature_flagged = false;
  bool partial_flagged = false;
};

struct RefutedNumerically {
  RealPoint witness;
  double generator_residual = 0.0;  // max |g_j| at the witness, <= 1e-9
  double element_value = 0.0;       // |e| at the witness, >= 1e-3
};

struct Unknown {
  std::vector<std::string> strategies_tried;
};

using MembershipVerdict = std::variant<ProvenIn, RefutedNumerically, Unknown>;

inline bool is_proven(const MembershipVerdict& v) { return std::holds_alternative<ProvenIn>(v); }
inline bool is_refuted(const MembershipVerdict& v) {
  return std::holds_alternative<RefutedNumerically>(v);
}
inline bool is_unknown(const MembershipVerdict& v) { return std::holds_alternative<Unknown>(v); }

struct StrategyConfig {
  bool syntactic = true;
  bool polynomial_reduction = true;
  bool coordinate_split = true;
  bool unit_detection = true;
  bool numeric_refutation = true;

  int degree_cap = 12;
  int basis_cap = 256;
  int refutation_starts = 32;
  double refutation_box = 4.0;
  int verify_samples = 100;
  bool use_cache = true;
  std::uint64_t seed = 0;
};

inline constexpr double kGeneratorResidualTol = 1e-9;
inline constexpr double kRefutationElementFloor = 1e-3;
inline constexpr double kCertificateNumericTol = 1e-9;

// Verdict-based membership of e in I, trying in order: syntactic hits,
// polynomial reduction, coordinate-split with Hadamard cofactors, unit
// detection and numeric refutation. Unknown is the catch-all, never an error.
MembershipVerdict ideal_membership(const SmoothMap& e, const Ideal& I,
                                   const StrategyConfig& cfg = {});

// Re-checks a certificate: symbolically when everything is polynomial and
// closed-form, numerically (tolerance 1e-9 on cfg.verify_samples points)
// otherwise.
bool verify_certificate(const SmoothMap& e, const Ideal& I,
                        const std::vector<Cofactor>& certificate, std::uint64_t seed,
                        int samples = 100, std::string* diagnostics = nullptr);

// ---- congruences: always represented through the ideal dictionary ----

struct Congruence {
  Ideal underlying;
};

Congruence ideal_to_congruence(Ideal I);
Ideal congruence_to_ideal(const Congruence& R);
Congruence congruence_from_pairs(int ambient_arity,
                                 const std::vector<std::pair<SmoothMap, SmoothMap>>& pairs);
MembershipVerdict congruence_contains(const Congruence& R, const SmoothMap& a,
                                      const SmoothMap& b, const StrategyConfig& cfg = {});

// Certificate for f(a_1..a_k) - f(b_1..b_k) given certificates for the
// differences a_i - b_i, assembled from the Hadamard cofactors of f exactly
// as in the proof that ideals induce congruences.
ProvenIn compatibility_certificate(const SmoothMap& f,
                                   const std::vector<std::pair<SmoothMap, SmoothMap>>& pairs,
                                   const std::vector<std::vector<Cofactor>>& difference_certs,
                                   const Ideal& I);

// ---- ideals of a binary product, presented by element pairs ----

struct ProductIdeal {
  int arity_first = 0, arity_second = 0;
  std::vector<std::pair<SmoothMap, SmoothMap>> pairs;
};

std::pair<Ideal, Ideal> ideal_product_split(const ProductIdeal& K);
ProductIdeal pair_to_product(const Ideal& a, const Ideal& b);

}  // namespace cinf
