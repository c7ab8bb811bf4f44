#include "cinf/ring.hpp"

#include <algorithm>

namespace cinf {

RingPtr make_ring(std::vector<std::string> generator_names, Ideal relations) {
  std::set<std::string> seen;
  for (const auto& n : generator_names)
    if (!seen.insert(n).second) throw DuplicateName("duplicate generator name " + n);
  if (relations.ambient_arity != static_cast<int>(generator_names.size()))
    throw ArityMismatch("relations ambient arity does not match the generator count");
  auto ring = std::make_shared<FinitelyPresentedRing>();
  ring->generator_names = std::move(generator_names);
  ring->relations = std::move(relations);
  return ring;
}

RingPtr free_ring(const std::vector<std::string>& generator_names) {
  return make_ring(generator_names, Ideal::make(static_cast<int>(generator_names.size()), {}));
}

bool same_presentation(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->generator_names == b->generator_names && equal(a->relations, b->relations);
}

std::string print_ring(const FinitelyPresentedRing& ring, const std::string& name) {
  std::string out = "(ring " + name + " (gens";
  for (const auto& g : ring.generator_names) out += " " + g;
  out += ") (rels";
  for (const auto& r : ring.relations.generators)
    out += " " + print_term(named_term_from_map(r, ring.generator_names));
  out += "))";
  return out;
}

RingElement element(RingPtr ring, const SmoothMap& rep) {
  const int arity = ring->arity();
  if (rep.arity() > arity)
    throw ArityMismatch("representative arity exceeds the ring's generator count");
  return RingElement{std::move(ring), rep.widen(arity)};
}

RingElement element_from_named(RingPtr ring, const Term& named_term) {
  SmoothMap rep = map_from_named_term(named_term, ring->generator_names);
  return RingElement{std::move(ring), std::move(rep)};
}

RingElement ring_generator(RingPtr ring, int index) {
  const int arity = ring->arity();
  if (index < 0 || index >= arity) throw ArityMismatch("generator index out of range");
  return element(std::move(ring), SmoothMap::projection(arity, index + 1));
}

RingElement ring_constant(RingPtr ring, Rational c) {
  const int arity = ring->arity();
  return element(std::move(ring), SmoothMap::constant(arity, std::move(c)));
}

namespace {
void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!same_presentation(a.ring, b.ring))
    throw RingMismatch("elements live in different presentations");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement{a.ring, a.rep + b.rep};
}
RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement{a.ring, a.rep * b.rep};
}
RingElement operator-(const RingElement& a) { return RingElement{a.ring, -a.rep}; }
RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement{a.ring, a.rep - b.rep};
}

MembershipVerdict elements_equal(const RingElement& a, const RingElement& b,
                                 const StrategyConfig& cfg) {
  require_same_ring(a, b);
  return ideal_membership(a.rep - b.rep, a.ring->relations, cfg);
}

Homomorphism make_hom(RingPtr source, RingPtr target, std::vector<RingElement> images,
                      const StrategyConfig& cfg) {
  if (static_cast<int>(images.size()) != source->arity())
    throw MissingImage("expected one image per source generator");
  for (const auto& img : images)
    if (!same_presentation(img.ring, target))
      throw TargetMismatch("image element lives outside the target ring");
  Homomorphism h;
  h.source = std::move(source);
  h.target = std::move(target);
  h.images = std::move(images);
  hom_check(h, cfg);
  return h;
}

HomStatus hom_check(Homomorphism& h, const StrategyConfig& cfg) {
  std::vector<SmoothMap> image_reps;
  image_reps.reserve(h.images.size());
  for (const auto& img : h.images) image_reps.push_back(img.rep);
  h.refuted_relation = -1;
  h.unknown_relations.clear();
  for (std::size_t i = 0; i < h.source->relations.generators.size(); ++i) {
    SmoothMap pushed =
        compose(h.source->relations.generators[i], image_reps).widen(h.target->arity());
    MembershipVerdict verdict = ideal_membership(pushed, h.target->relations, cfg);
    if (is_refuted(verdict)) {
      h.refuted_relation = static_cast<int>(i);
      h.status = HomStatus::refuted;
      return h.status;
    }
    if (is_unknown(verdict)) h.unknown_relations.push_back(static_cast<int>(i));
  }
  h.status = h.unknown_relations.empty() ? HomStatus::verified : HomStatus::unverified;
  return h.status;
}

Homomorphism universal_extend(const RingPtr& free_source, const RingPtr& target,
                              const std::map<std::string, RingElement>& alpha,
                              const StrategyConfig& cfg) {
  if (!free_source->is_free())
    throw PreconditionUnverified("universal extension needs a free source ring");
  std::vector<RingElement> images;
  images.reserve(free_source->arity());
  for (const auto& name : free_source->generator_names) {
    auto it = alpha.find(name);
    if (it == alpha.end()) throw MissingImage("no image assigned to generator " + name);
    images.push_back(it->second);
  }
  return make_hom(free_source, target, std::move(images), cfg);
}

Homomorphism identity_hom(RingPtr ring) {
  std::vector<RingElement> images;
  for (int i = 0; i < ring->arity(); ++i) images.push_back(ring_generator(ring, i));
  return make_hom(ring, ring, std::move(images));
}

RingElement hom_apply(const Homomorphism& h, const RingElement& a) {
  if (!same_presentation(a.ring, h.source))
    throw RingMismatch("element does not live in the hom's source");
  std::vector<SmoothMap> image_reps;
  image_reps.reserve(h.images.size());
  for (const auto& img : h.images) image_reps.push_back(img.rep);
  return element(h.target, compose(a.rep, image_reps).widen(h.target->arity()));
}

Homomorphism hom_compose(const Homomorphism& outer, const Homomorphism& inner,
                         const StrategyConfig& cfg) {
  if (!same_presentation(inner.target, outer.source))
    throw TargetMismatch("inner hom's target is not the outer hom's source");
  std::vector<RingElement> images;
  images.reserve(inner.images.size());
  for (const auto& img : inner.images) images.push_back(hom_apply(outer, img));
  return make_hom(inner.source, outer.target, std::move(images), cfg);
}

bool homs_equal_on_generators(const Homomorphism& a, const Homomorphism& b) {
  if (!same_presentation(a.source, b.source) || !same_presentation(a.target, b.target))
    return false;
  for (std::size_t i = 0; i < a.images.size(); ++i)
    if (!equal(a.images[i].rep, b.images[i].rep)) return false;
  return true;
}

QuotientResult quotient(const RingPtr& ring, const Ideal& ideal, const StrategyConfig& cfg) {
  if (ideal.ambient_arity != ring->arity())
    throw ArityMismatch("quotient ideal lives over a different generator count");
  RingPtr quotient_ring =
      make_ring(ring->generator_names, ideal_join(ring->relations, ideal));
  std::vector<RingElement> images;
  for (int i = 0; i < ring->arity(); ++i) images.push_back(ring_generator(quotient_ring, i));
  Homomorphism q = make_hom(ring, quotient_ring, std::move(images), cfg);
  return QuotientResult{quotient_ring, std::move(q)};
}

MembershipVerdict kernel_contains(const Homomorphism& h, const RingElement& a,
                                  const StrategyConfig& cfg) {
  RingElement image = hom_apply(h, a);
  return elements_equal(image, ring_constant(h.target, 0), cfg);
}

FactorResult ftt_factor(const Homomorphism& phi, const Congruence& R,
                        const StrategyConfig& cfg) {
  if (R.underlying.ambient_arity != phi.source->arity())
    throw ArityMismatch("congruence lives over a different generator count");
  if (phi.status != HomStatus::verified)
    throw PreconditionUnverified("phi is not a verified homomorphism");
  std::vector<SmoothMap> image_reps;
  for (const auto& img : phi.images) image_reps.push_back(img.rep);
  for (std::size_t i = 0; i < R.underlying.generators.size(); ++i) {
    SmoothMap pushed =
        compose(R.underlying.generators[i], image_reps).widen(phi.target->arity());
    MembershipVerdict verdict = ideal_membership(pushed, phi.target->relations, cfg);
    if (!is_proven(verdict))
      throw PreconditionUnverified("congruence generator " + std::to_string(i) +
                                   " is not provably in ker(phi)");
  }
  QuotientResult q = quotient(phi.source, R.underlying, cfg);
  Homomorphism factored = make_hom(q.ring, phi.target, phi.images, cfg);
  // factored . q = phi on generators, by construction; keep the assertion
  Homomorphism composite = hom_compose(factored, q.projection, cfg);
  if (!homs_equal_on_generators(composite, phi))
    throw Error("internal: factorization does not commute on generators");
  return FactorResult{q.ring, std::move(q.projection), std::move(factored)};
}

RingPtr image_presentation(const Homomorphism& h, const std::vector<RingElement>& witnesses,
                           const StrategyConfig& cfg) {
  if (h.status != HomStatus::verified)
    throw PreconditionUnverified("image presentation needs a verified hom");
  if (static_cast<int>(witnesses.size()) != h.target->arity())
    throw WitnessMissing("expected one witness per target generator");
  for (int i = 0; i < h.target->arity(); ++i) {
    if (!same_presentation(witnesses[i].ring, h.source))
      throw WitnessMissing("witness " + std::to_string(i) + " lives outside the source");
    MembershipVerdict verdict =
        elements_equal(hom_apply(h, witnesses[i]), ring_generator(h.target, i), cfg);
    if (!is_proven(verdict))
      throw WitnessMissing("witness " + std::to_string(i) +
                           " does not provably map onto generator " +
                           h.target->generator_names[i]);
  }
  return h.target;
}

std::pair<RingPtr, Homomorphism> free_extension(const RingPtr& ring,
                                                const std::vector<std::string>& extra_names,
                                                const StrategyConfig& cfg) {
  std::vector<std::string> names = ring->generator_names;
  names.insert(names.end(), extra_names.begin(), extra_names.end());
  const int wide = static_cast<int>(names.size());
  std::vector<SmoothMap> rels;
  for (const auto& r : ring->relations.generators) rels.push_back(r.widen(wide));
  RingPtr extended = make_ring(std::move(names), Ideal::make(wide, std::move(rels)));
  std::vector<RingElement> images;
  for (int i = 0; i < ring->arity(); ++i) images.push_back(ring_generator(extended, i));
  Homomorphism inclusion = make_hom(ring, extended, std::move(images), cfg);
  return {extended, std::move(inclusion)};
}

bool generated_subring_contains(const RingElement& a, const std::set<std::string>& subset) {
  std::set<std::string> allowed;
  for (std::size_t i = 0; i < a.ring->generator_names.size(); ++i)
    if (subset.count(a.ring->generator_names[i]))
      allowed.insert(slot_name(static_cast<int>(i) + 1));
  for (const auto& v : variables(a.rep.body()))
    if (!allowed.count(v)) return false;
  return true;
}

}  // namespace cinf
