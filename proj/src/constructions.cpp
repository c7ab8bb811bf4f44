#include "cinf/constructions.hpp"

#include <algorithm>

namespace cinf {

// ------------------------------------------------------------------ products

ProductElement product_apply(const SmoothMap& f, const std::vector<ProductElement>& args) {
  if (static_cast<int>(args.size()) != f.arity())
    throw ShapeMismatch("expected " + std::to_string(f.arity()) + " product arguments");
  if (args.empty()) throw ShapeMismatch("empty product application needs a factor shape");
  const std::size_t factors = args.front().components.size();
  for (const auto& a : args)
    if (a.components.size() != factors)
      throw ShapeMismatch("product arguments have different factor counts");
  ProductElement out;
  out.components.reserve(factors);
  for (std::size_t k = 0; k < factors; ++k) {
    const RingPtr& ring = args.front().components[k].ring;
    std::vector<SmoothMap> reps;
    reps.reserve(args.size());
    for (const auto& a : args) {
      if (!same_presentation(a.components[k].ring, ring))
        throw ShapeMismatch("factor " + std::to_string(k) + " mixes different rings");
      reps.push_back(a.components[k].rep);
    }
    out.components.push_back(element(ring, compose(f, reps).widen(ring->arity())));
  }
  return out;
}

// ----------------------------------------------------------------- coproduct

namespace {

std::vector<std::string> disjoint_names(const std::vector<std::string>& first,
                                        const std::vector<std::string>& second) {
  std::vector<std::string> names = first;
  std::set<std::string> taken(first.begin(), first.end());
  for (const auto& base : second) {
    std::string name = base;
    int suffix = 2;
    while (taken.count(name)) name = base + "_" + std::to_string(suffix++);
    taken.insert(name);
    names.push_back(name);
  }
  return names;
}

SmoothMap shift_slots(const SmoothMap& f, int offset, int wide) {
  std::map<std::string, Term> shift;
  for (int j = 1; j <= f.arity(); ++j) shift[slot_name(j)] = slot(offset + j);
  return SmoothMap(wide, substitute(f.body(), shift));
}

}  // namespace

CoproductResult coproduct(const RingPtr& a, const RingPtr& b, const StrategyConfig& cfg) {
  const int m = a->arity(), n = b->arity();
  std::vector<std::string> names = disjoint_names(a->generator_names, b->generator_names);
  std::vector<SmoothMap> rels;
  for (const auto& r : a->relations.generators) rels.push_back(r.widen(m + n));
  for (const auto& r : b->relations.generators) rels.push_back(shift_slots(r, m, m + n));
  RingPtr ring = make_ring(std::move(names), Ideal::make(m + n, std::move(rels)));

  std::vector<RingElement> first_images, second_images;
  for (int i = 0; i < m; ++i) first_images.push_back(ring_generator(ring, i));
  for (int j = 0; j < n; ++j) second_images.push_back(ring_generator(ring, m + j));
  CoproductResult out;
  out.ring = ring;
  out.into_first = make_hom(a, ring, std::move(first_images), cfg);
  out.into_second = make_hom(b, ring, std::move(second_images), cfg);
  return out;
}

Homomorphism coproduct_mediator(const CoproductResult& cp, const Homomorphism& ha,
                                const Homomorphism& hb, const StrategyConfig& cfg) {
  if (!same_presentation(ha.target, hb.target))
    throw TargetMismatch("mediator legs have different targets");
  if (!same_presentation(ha.source, cp.into_first.source) ||
      !same_presentation(hb.source, cp.into_second.source))
    throw TargetMismatch("mediator legs do not match the coproduct factors");
  std::vector<RingElement> images = ha.images;
  images.insert(images.end(), hb.images.begin(), hb.images.end());
  return make_hom(cp.ring, ha.target, std::move(images), cfg);
}

AdjunctionResult polynomial_adjunction(const RingPtr& a,
                                       const std::vector<std::string>& new_names,
                                       const StrategyConfig& cfg) {
  AdjunctionResult out;
  out.coprod = coproduct(a, free_ring(new_names), cfg);
  out.adjoined = out.coprod.into_second.images;
  return out;
}

// ---------------------------------------------------------- directed diagrams

DirectedDiagram::DirectedDiagram(std::vector<RingPtr> objects,
                                 std::function<bool(int, int)> leq,
                                 std::function<int(int, int)> upper_bound,
                                 std::map<std::pair<int, int>, Homomorphism> connecting_homs)
    : objects_(std::move(objects)),
      leq_(std::move(leq)),
      upper_(std::move(upper_bound)),
      connecting_(std::move(connecting_homs)) {
  const int k = size();
  for (int i = 0; i < k; ++i) identities_.emplace(i, identity_hom(objects_[i]));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !leq_(i, j)) continue;
      auto it = connecting_.find({i, j});
      if (it == connecting_.end())
        throw ShapeMismatch("missing connecting hom " + std::to_string(i) + " -> " +
                            std::to_string(j));
      const Homomorphism& h = it->second;
      if (!same_presentation(h.source, objects_[i]) || !same_presentation(h.target, objects_[j]))
        throw ShapeMismatch("connecting hom endpoints disagree with the objects");
      if (h.status != HomStatus::verified)
        throw ShapeMismatch("connecting hom " + std::to_string(i) + " -> " + std::to_string(j) +
                            " is not verified");
    }
  // functoriality on generators
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        if (i == j || j == l || i == l) continue;
        if (!leq_(i, j) || !leq_(j, l) || !leq_(i, l)) continue;
        Homomorphism through = hom_compose(connecting(j, l), connecting(i, j));
        if (!homs_equal_on_generators(through, connecting(i, l)))
          throw ShapeMismatch("connecting homs are not functorial through stage " +
                              std::to_string(j));
      }
}

DirectedDiagram DirectedDiagram::chain(std::vector<RingPtr> objects,
                                       std::vector<Homomorphism> steps) {
  if (steps.size() + 1 != objects.size())
    throw ShapeMismatch("a chain on k+1 objects needs k steps");
  std::map<std::pair<int, int>, Homomorphism> connecting;
  const int k = static_cast<int>(objects.size());
  for (int i = 0; i + 1 < k; ++i) {
    Homomorphism acc = steps[i];
    connecting.emplace(std::make_pair(i, i + 1), acc);
    for (int j = i + 2; j < k; ++j) {
      acc = hom_compose(steps[j - 1], acc);
      connecting.emplace(std::make_pair(i, j), acc);
    }
  }
  return DirectedDiagram(
      std::move(objects), [](int a, int b) { return a <= b; },
      [](int a, int b) { return std::max(a, b); }, std::move(connecting));
}

int DirectedDiagram::upper(int a, int b) const {
  int u = upper_(a, b);
  if (u < 0 || u >= size() || !leq_(a, u) || !leq_(b, u))
    throw NoUpperBound("chooser produced no upper bound of " + std::to_string(a) + " and " +
                       std::to_string(b));
  return u;
}

bool DirectedDiagram::is_chain() const {
  for (int i = 0; i + 1 < size(); ++i)
    if (!leq_(i, i + 1)) return false;
  return true;
}

const Homomorphism& DirectedDiagram::connecting(int from, int to) const {
  if (from == to) return identities_.at(from);
  auto it = connecting_.find({from, to});
  if (it == connecting_.end())
    throw ShapeMismatch("no connecting hom " + std::to_string(from) + " -> " +
                        std::to_string(to));
  return it->second;
}

RingElement DirectedDiagram::push(const RingElement& e, int from, int to) const {
  if (from == to) return e;
  return hom_apply(connecting(from, to), e);
}

MembershipVerdict colimit_equal(const DirectedDiagram& d, const ColimitElement& u,
                                const ColimitElement& w, const StrategyConfig& cfg) {
  int stage = d.upper(u.stage, w.stage);
  return elements_equal(d.push(u.element, u.stage, stage), d.push(w.element, w.stage, stage),
                        cfg);
}

ColimitElement colimit_apply(const DirectedDiagram& d, const SmoothMap& f,
                             const std::vector<ColimitElement>& args,
                             const StrategyConfig&) {
  if (static_cast<int>(args.size()) != f.arity())
    throw ArityMismatch("colimit application arity mismatch");
  if (args.empty()) throw ShapeMismatch("nullary colimit application has no stage");
  int stage = args.front().stage;
  for (const auto& a : args) stage = d.upper(stage, a.stage);
  std::vector<SmoothMap> reps;
  reps.reserve(args.size());
  for (const auto& a : args) reps.push_back(d.push(a.element, a.stage, stage).rep);
  const RingPtr& ring = d.object(stage);
  return ColimitElement{stage, element(ring, compose(f, reps).widen(ring->arity()))};
}

ColimitMediator::ColimitMediator(const DirectedDiagram& d, std::vector<Homomorphism> cocone)
    : cocone_(std::move(cocone)) {
  if (static_cast<int>(cocone_.size()) != d.size())
    throw ShapeMismatch("one cocone leg per diagram object");
  for (int i = 0; i < d.size(); ++i) {
    if (!same_presentation(cocone_[i].source, d.object(i)))
      throw CoconeIncoherent("cocone leg " + std::to_string(i) + " has the wrong source");
    if (!same_presentation(cocone_[i].target, cocone_[0].target))
      throw CoconeIncoherent("cocone legs disagree on the target");
  }
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) {
      if (i == j || !d.leq(i, j)) continue;
      Homomorphism through = hom_compose(cocone_[j], d.connecting(i, j));
      if (!homs_equal_on_generators(through, cocone_[i]))
        throw CoconeIncoherent("cocone does not commute over " + std::to_string(i) + " <= " +
                               std::to_string(j));
    }
}

RingElement ColimitMediator::apply(const ColimitElement& u) const {
  return hom_apply(cocone_.at(u.stage), u.element);
}

const RingPtr& ColimitMediator::target() const { return cocone_.front().target; }

ColimitMediator colimit_mediator(const DirectedDiagram& d, std::vector<Homomorphism> cocone) {
  return ColimitMediator(d, std::move(cocone));
}

// ------------------------------------------------------------- finite limits

LimitMembership finite_limit_membership(const FiniteDiagram& d,
                                        const std::vector<RingElement>& candidate,
                                        const StrategyConfig& cfg) {
  if (candidate.size() != d.objects.size())
    throw ShapeMismatch("candidate tuple does not match the object count");
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    if (!same_presentation(candidate[i].ring, d.objects[i]))
      throw ShapeMismatch("candidate component " + std::to_string(i) +
                          " lives in the wrong ring");
  LimitMembership out{ProvenIn{}, -1};
  bool any_unknown = false;
  std::vector<std::string> tried;
  for (std::size_t k = 0; k < d.arrows.size(); ++k) {
    const auto& arrow = d.arrows[k];
    MembershipVerdict v =
        elements_equal(hom_apply(arrow.hom, candidate[arrow.src]), candidate[arrow.dst], cfg);
    if (is_refuted(v)) {
      out.verdict = std::move(v);
      out.offending_arrow = static_cast<int>(k);
      return out;
    }
    if (is_unknown(v)) {
      any_unknown = true;
      tried = std::get<Unknown>(v).strategies_tried;
    }
  }
  if (any_unknown) out.verdict = Unknown{std::move(tried)};
  return out;
}

// --------------------------------------------------- ideals along the chain

namespace {

// slot image of a generator-inclusion hom, or empty when some image is not a
// bare generator
std::vector<int> inclusion_slots(const Homomorphism& h) {
  std::vector<int> out;
  for (const auto& img : h.images) {
    const Term& b = img.rep.body();
    if (b.kind() != TermKind::variable) return {};
    int idx = -1;
    for (int j = 1; j <= img.rep.arity(); ++j)
      if (b.name() == slot_name(j)) {
        idx = j;
        break;
      }
    if (idx < 0) return {};
    out.push_back(idx);
  }
  std::set<int> dedup(out.begin(), out.end());
  if (dedup.size() != out.size()) return {};
  return out;
}

}  // namespace

ColimitIdealFamily colimit_ideal_restrict(const DirectedDiagram& chain, const Ideal& top,
                                          const StrategyConfig& cfg) {
  if (!chain.is_chain()) throw NotAChain("ideal restriction needs a finite chain");
  const int last = chain.size() - 1;
  if (top.ambient_arity != chain.object(last)->arity())
    throw ArityMismatch("ideal does not live over the top of the chain");

  ColimitIdealFamily family;
  for (int i = 0; i <= last; ++i) {
    StageIdeal stage;
    const RingPtr stage_ring = chain.object(i);
    if (i == last) {
      stage.contains = [top, cfg](const SmoothMap& e) { return ideal_membership(e, top, cfg); };
    } else {
      const Homomorphism to_top = chain.connecting(i, last);
      stage.contains = [to_top, top, cfg, stage_ring](const SmoothMap& e) {
        RingElement pushed = hom_apply(to_top, element(stage_ring, e));
        return ideal_membership(pushed.rep, top, cfg);
      };
    }
    if (i == last) {
      stage.generators = top.generators;
    } else {
      std::vector<int> slots = inclusion_slots(chain.connecting(i, last));
      if (!slots.empty()) {
        std::set<std::string> image_names;
        std::map<std::string, Term> back;
        for (std::size_t k = 0; k < slots.size(); ++k) {
          image_names.insert(slot_name(slots[k]));
          back[slot_name(slots[k])] = slot(static_cast<int>(k) + 1);
        }
        for (const auto& g : top.generators) {
          bool inside = true;
          for (const auto& v : variables(g.body()))
            if (!image_names.count(v)) {
              inside = false;
              break;
            }
          if (inside)
            stage.generators.push_back(
                SmoothMap(stage_ring->arity(), substitute(g.body(), back)));
        }
      }
    }
    family.stages.push_back(std::move(stage));
  }
  return family;
}

Ideal colimit_ideal_assemble(const DirectedDiagram& chain, const ColimitIdealFamily& family,
                             const StrategyConfig&) {
  if (!chain.is_chain()) throw NotAChain("ideal assembly needs a finite chain");
  if (static_cast<int>(family.stages.size()) != chain.size())
    throw ShapeMismatch("one stage ideal per chain object");
  const int last = chain.size() - 1;
  std::vector<SmoothMap> gens;
  for (int i = 0; i <= last; ++i) {
    const RingPtr stage_ring = chain.object(i);
    for (const auto& g : family.stages[i].generators)
      gens.push_back(chain.push(element(stage_ring, g), i, last).rep);
  }
  return Ideal::make(chain.object(last)->arity(), std::move(gens));
}

}  // namespace cinf
