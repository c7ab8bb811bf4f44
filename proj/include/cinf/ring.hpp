#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cinf/ideal.hpp"

namespace cinf {

// C^inf(R^E)/I for a finite generator list E and finitely generated I; the
// free ring is the case I = (0).
struct FinitelyPresentedRing {
  std::vector<std::string> generator_names;
  Ideal relations;

  int arity() const { return static_cast<int>(generator_names.size()); }
  bool is_free() const { return relations.is_zero(); }
};

using RingPtr = std::shared_ptr<const FinitelyPresentedRing>;

RingPtr make_ring(std::vector<std::string> generator_names, Ideal relations);
RingPtr free_ring(const std::vector<std::string>& generator_names);
bool same_presentation(const RingPtr& a, const RingPtr& b);
std::string print_ring(const FinitelyPresentedRing& ring, const std::string& name);

// An element is a representative modulo the relations ideal; equality of
// elements is verdict-valued through that ideal.
struct RingElement {
  RingPtr ring;
  SmoothMap rep;
};

RingElement element(RingPtr ring, const SmoothMap& rep);
RingElement element_from_named(RingPtr ring, const Term& named_term);
RingElement ring_generator(RingPtr ring, int index);
RingElement ring_constant(RingPtr ring, Rational c);

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);
RingElement operator-(const RingElement& a, const RingElement& b);

MembershipVerdict elements_equal(const RingElement& a, const RingElement& b,
                                 const StrategyConfig& cfg = {});

enum class HomStatus { verified, refuted, unverified };

struct Homomorphism {
  RingPtr source, target;
  std::vector<RingElement> images;  // one per source generator
  HomStatus status = HomStatus::unverified;
  int refuted_relation = -1;           // when status == refuted
  std::vector<int> unknown_relations;  // when status == unverified
};

// Builds the hom and checks every source relation's image against the target
// relations (Verified / RefutedAt / Unverified).
Homomorphism make_hom(RingPtr source, RingPtr target, std::vector<RingElement> images,
                      const StrategyConfig& cfg = {});
HomStatus hom_check(Homomorphism& h, const StrategyConfig& cfg = {});

// Homs out of a free ring are determined by generator images and verified for
// free.
Homomorphism universal_extend(const RingPtr& free_source, const RingPtr& target,
                              const std::map<std::string, RingElement>& alpha,
                              const StrategyConfig& cfg = {});

Homomorphism identity_hom(RingPtr ring);
Homomorphism hom_compose(const Homomorphism& outer, const Homomorphism& inner,
                         const StrategyConfig& cfg = {});
RingElement hom_apply(const Homomorphism& h, const RingElement& a);
bool homs_equal_on_generators(const Homomorphism& a, const Homomorphism& b);

struct QuotientResult {
  RingPtr ring;
  Homomorphism projection;
};
QuotientResult quotient(const RingPtr& ring, const Ideal& ideal,
                        const StrategyConfig& cfg = {});

MembershipVerdict kernel_contains(const Homomorphism& h, const RingElement& a,
                                  const StrategyConfig& cfg = {});

struct FactorResult {
  RingPtr quotient_ring;
  Homomorphism projection;  // q : source ->> source/R
  Homomorphism factored;    // the unique hom with factored . q = phi
};

// Fundamental factorization: R must be contained in ker(phi), checked on the
// generators of R's ideal; throws PreconditionUnverified otherwise.
FactorResult ftt_factor(const Homomorphism& phi, const Congruence& R,
                        const StrategyConfig& cfg = {});

// Target presentation reached by a Verified hom whose surjectivity the caller
// witnesses: one source preimage per target generator.
RingPtr image_presentation(const Homomorphism& h, const std::vector<RingElement>& witnesses,
                           const StrategyConfig& cfg = {});

// Canonical inclusion obtained by adjoining fresh generator names.
std::pair<RingPtr, Homomorphism> free_extension(const RingPtr& ring,
                                                const std::vector<std::string>& extra_names,
                                                const StrategyConfig& cfg = {});

// Syntactic membership in the subring generated by a subset of the
// generators; sound, incomplete.
bool generated_subring_contains(const RingElement& a, const std::set<std::string>& subset);

}  // namespace cinf
