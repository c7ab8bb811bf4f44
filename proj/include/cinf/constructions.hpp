#pragma once

#include <functional>
#include <map>
#include <utility>

#include "cinf/ring.hpp"

namespace cinf {

// ---- products are models: tuples with componentwise structure ----

struct ProductElement {
  std::vector<RingElement> components;
};

ProductElement product_apply(const SmoothMap& f, const std::vector<ProductElement>& args);

// ---- the coproduct (tensor product of presentations) ----

struct CoproductResult {
  RingPtr ring;
  Homomorphism into_first;
  Homomorphism into_second;
};

// Generators are the first presentation's followed by the second's (renamed on
// collision with a deterministic numeric suffix); relations are the two
// relation ideals pushed through their generator blocks.
CoproductResult coproduct(const RingPtr& a, const RingPtr& b, const StrategyConfig& cfg = {});

// The unique hom out of the coproduct restricting to ha and hb.
Homomorphism coproduct_mediator(const CoproductResult& cp, const Homomorphism& ha,
                                const Homomorphism& hb, const StrategyConfig& cfg = {});

struct AdjunctionResult {
  CoproductResult coprod;                // A tensor free(new_names)
  std::vector<RingElement> adjoined;     // the adjoined variable elements
};

AdjunctionResult polynomial_adjunction(const RingPtr& a,
                                       const std::vector<std::string>& new_names,
                                       const StrategyConfig& cfg = {});

// ---- directed diagrams and their colimits ----

class DirectedDiagram {
 public:
  // leq must be a decidable partial order on 0..objects-1 and upper_bound an
  // upper-bound chooser (may return -1 to signal failure). Connecting homs are
  // required for every comparable pair a < b; identities are implicit.
  // Functoriality is checked on construction, generator-wise.
  DirectedDiagram(std::vector<RingPtr> objects, std::function<bool(int, int)> leq,
                  std::function<int(int, int)> upper_bound,
                  std::map<std::pair<int, int>, Homomorphism> connecting);

  // chain 0 -> 1 -> ... -> k from consecutive steps
  static DirectedDiagram chain(std::vector<RingPtr> objects, std::vector<Homomorphism> steps);

  int size() const { return static_cast<int>(objects_.size()); }
  const RingPtr& object(int i) const { return objects_.at(i); }
  bool leq(int a, int b) const { return leq_(a, b); }
  int upper(int a, int b) const;  // throws NoUpperBound on chooser failure
  bool is_chain() const;          // indices totally ordered in ascending order

  RingElement push(const RingElement& e, int from, int to) const;
  const Homomorphism& connecting(int from, int to) const;

 private:
  std::vector<RingPtr> objects_;
  std::function<bool(int, int)> leq_;
  std::function<int(int, int)> upper_;
  std::map<std::pair<int, int>, Homomorphism> connecting_;
  std::map<int, Homomorphism> identities_;
};

// class (a, alpha): an element seen at some stage
struct ColimitElement {
  int stage = 0;
  RingElement element;
};

// equality via a common later stage
MembershipVerdict colimit_equal(const DirectedDiagram& d, const ColimitElement& u,
                                const ColimitElement& w, const StrategyConfig& cfg = {});

// push all arguments to a shared stage and apply there; the result does not
// depend on the chosen stage
ColimitElement colimit_apply(const DirectedDiagram& d, const SmoothMap& f,
                             const std::vector<ColimitElement>& args,
                             const StrategyConfig& cfg = {});

class ColimitMediator {
 public:
  ColimitMediator(const DirectedDiagram& d, std::vector<Homomorphism> cocone);
  RingElement apply(const ColimitElement& u) const;
  const RingPtr& target() const;

 private:
  std::vector<Homomorphism> cocone_;
};

// checks the cocone commutes with the connecting homs (generator-wise) and
// returns the evaluator of the induced hom out of the colimit
ColimitMediator colimit_mediator(const DirectedDiagram& d, std::vector<Homomorphism> cocone);

// ---- finite projective limits as compatibility predicates ----

struct FiniteDiagram {
  struct Arrow {
    int src = 0, dst = 0;
    Homomorphism hom;
  };
  std::vector<RingPtr> objects;
  std::vector<Arrow> arrows;
};

struct LimitMembership {
  MembershipVerdict verdict;
  int offending_arrow = -1;  // set when the verdict is a refutation
};

// candidate belongs to lim D iff D(h)(a_src) = a_dst for every arrow
LimitMembership finite_limit_membership(const FiniteDiagram& d,
                                        const std::vector<RingElement>& candidate,
                                        const StrategyConfig& cfg = {});

// ---- ideals along a finite chain ----

struct StageIdeal {
  // pulled-back generators, complete only when the connecting homs are
  // generator inclusions; the membership test is authoritative either way
  std::vector<SmoothMap> generators;
  std::function<MembershipVerdict(const SmoothMap&)> contains;
};

struct ColimitIdealFamily {
  std::vector<StageIdeal> stages;
};

ColimitIdealFamily colimit_ideal_restrict(const DirectedDiagram& chain, const Ideal& top,
                                          const StrategyConfig& cfg = {});
Ideal colimit_ideal_assemble(const DirectedDiagram& chain, const ColimitIdealFamily& family,
                             const StrategyConfig& cfg = {});

}  // namespace cinf
