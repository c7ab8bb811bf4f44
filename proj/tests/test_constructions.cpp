#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cinf/constructions.hpp"

#include "../src/accept/generators.hpp"

using namespace cinf;

namespace {
SmoothMap M(int arity, const std::string& text) { return SmoothMap(arity, parse_term(text)); }
}  // namespace

TEST_CASE("componentwise product structure") {
  RingPtr r = free_ring({"x"});
  ProductElement a{{element(r, M(1, "v1")), element(r, M(1, "(* v1 v1)"))}};
  ProductElement b{{ring_constant(r, 2), ring_constant(r, 3)}};

  ProductElement sum = product_apply(M(2, "(+ v1 v2)"), {a, b});
  CHECK(equal(sum.components[0].rep, M(1, "(+ 2 v1)")));
  CHECK(equal(sum.components[1].rep, M(1, "(+ 3 (* v1 v1))")));

  ProductElement first = product_apply(SmoothMap::projection(2, 1), {a, b});
  CHECK(equal(first.components[0].rep, a.components[0].rep));
  CHECK(equal(first.components[1].rep, a.components[1].rep));

  ProductElement constant = product_apply(SmoothMap::constant(1, 7), {a});
  CHECK(equal(constant.components[0].rep, SmoothMap::constant(1, 7)));
  CHECK(equal(constant.components[1].rep, SmoothMap::constant(1, 7)));

  CHECK_THROWS_AS(product_apply(M(2, "(+ v1 v2)"), {a}), ShapeMismatch);
}

TEST_CASE("coproducts of free rings concatenate generators") {
  CoproductResult cp = coproduct(free_ring({"x", "y"}), free_ring({"u"}));
  CHECK(cp.ring->generator_names == std::vector<std::string>{"x", "y", "u"});
  CHECK(cp.ring->relations.is_zero());
  CHECK(cp.into_first.status == HomStatus::verified);
  CHECK(cp.into_second.status == HomStatus::verified);
}

TEST_CASE("coproducts of quotients join the pushed relation ideals") {
  RingPtr a = make_ring({"x"}, Ideal::make(1, {M(1, "v1")}));
  RingPtr b = make_ring({"y"}, Ideal::make(1, {M(1, "v1")}));
  CoproductResult cp = coproduct(a, b);
  CHECK(cp.ring->generator_names == std::vector<std::string>{"x", "y"});
  REQUIRE(cp.ring->relations.generators.size() == 2);
  CHECK(equal(cp.ring->relations.generators[0], M(2, "v1")));
  CHECK(equal(cp.ring->relations.generators[1], M(2, "v2")));
}

TEST_CASE("name collisions get a deterministic suffix") {
  CoproductResult cp = coproduct(free_ring({"x"}), free_ring({"x"}));
  CHECK(cp.ring->generator_names == std::vector<std::string>{"x", "x_2"});
}

TEST_CASE("the empty free ring is a unit for the coproduct") {
  RingPtr a = make_ring({"x", "y"}, Ideal::make(2, {M(2, "(* v1 v2)")}));
  CHECK(same_presentation(coproduct(a, free_ring({})).ring, a));
}

TEST_CASE("mediators restrict to the given legs") {
  RingPtr a = free_ring({"x"});
  CoproductResult fold = coproduct(a, a);
  Homomorphism id = identity_hom(a);
  Homomorphism codiagonal = coproduct_mediator(fold, id, id);
  CHECK(codiagonal.status == HomStatus::verified);
  CHECK(homs_equal_on_generators(hom_compose(codiagonal, fold.into_first), id));
  CHECK(homs_equal_on_generators(hom_compose(codiagonal, fold.into_second), id));

  // uniqueness: any hom satisfying both equations matches on generators
  Homomorphism same = make_hom(fold.ring, a, codiagonal.images);
  CHECK(homs_equal_on_generators(same, codiagonal));

  RingPtr other = free_ring({"z"});
  Homomorphism wrong_target = make_hom(a, other, {ring_generator(other, 0)});
  CHECK_THROWS_AS(coproduct_mediator(fold, id, wrong_target), TargetMismatch);
}

TEST_CASE("free-case mediator is substitution of both image lists") {
  Rng rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    RingPtr a = free_ring({"a1", "a2"}), b = free_ring({"b1"});
    RingPtr c = free_ring({"c1", "c2"});
    Homomorphism ha = make_hom(
        a, c, {element(c, accept::random_poly_map(rng, 2, 2, 2)),
               element(c, accept::random_poly_map(rng, 2, 2, 2))});
    Homomorphism hb = make_hom(b, c, {element(c, accept::random_poly_map(rng, 2, 2, 2))});
    CoproductResult cp = coproduct(a, b);
    Homomorphism mediator = coproduct_mediator(cp, ha, hb);
    CHECK(homs_equal_on_generators(hom_compose(mediator, cp.into_first), ha));
    CHECK(homs_equal_on_generators(hom_compose(mediator, cp.into_second), hb));
  }
}

TEST_CASE("coproduct is associative and commutative up to reindexing") {
  RingPtr a = make_ring({"x"}, Ideal::make(1, {M(1, "(* v1 v1)")}));
  RingPtr b = make_ring({"y"}, Ideal::make(1, {M(1, "(* v1 v1 v1)")}));
  RingPtr c = free_ring({"z"});
  RingPtr left = coproduct(coproduct(a, b).ring, c).ring;
  RingPtr right = coproduct(a, coproduct(b, c).ring).ring;
  CHECK(left->arity() == right->arity());
  CHECK(equal(left->relations, right->relations));
  CHECK(left->generator_names == right->generator_names);

  RingPtr ab = coproduct(a, b).ring;
  RingPtr ba = coproduct(b, a).ring;
  CHECK(ab->arity() == ba->arity());
  // same relation multiset after swapping the two blocks
  std::vector<SmoothMap> swapped;
  for (const auto& r : ba->relations.generators) {
    std::map<std::string, Term> swap{{slot_name(1), slot(2)}, {slot_name(2), slot(1)}};
    swapped.push_back(SmoothMap(2, substitute(r.body(), swap)));
  }
  CHECK(equal(Ideal::make(2, swapped), ab->relations));
}

TEST_CASE("polynomial adjunction") {
  AdjunctionResult line = polynomial_adjunction(free_ring({}), {"t"});
  CHECK(line.coprod.ring->arity() == 1);
  CHECK(line.coprod.ring->relations.is_zero());
  REQUIRE(line.adjoined.size() == 1);
  CHECK(equal(line.adjoined[0].rep, M(1, "v1")));

  RingPtr a = make_ring({"x"}, Ideal::make(1, {M(1, "(* v1 v1)")}));
  AdjunctionResult at = polynomial_adjunction(a, {"t"});
  CHECK(at.coprod.ring->generator_names == std::vector<std::string>{"x", "t"});
  REQUIRE(at.coprod.ring->relations.generators.size() == 1);
  CHECK(equal(at.coprod.ring->relations.generators[0], M(2, "(* v1 v1)")));
  CHECK(equal(at.adjoined[0].rep, M(2, "v2")));

  AdjunctionResult none = polynomial_adjunction(a, {});
  CHECK(same_presentation(none.coprod.ring, a));
  CHECK(none.adjoined.empty());
}

namespace {
DirectedDiagram inclusion_chain3() {
  RingPtr r1 = free_ring({"x1"});
  auto [r2, i12] = free_extension(r1, {"x2"});
  auto [r3, i23] = free_extension(r2, {"x3"});
  return DirectedDiagram::chain({r1, r2, r3}, {i12, i23});
}
}  // namespace

TEST_CASE("colimit equality along an inclusion chain") {
  DirectedDiagram d = inclusion_chain3();
  RingElement x1_at_0 = ring_generator(d.object(0), 0);
  RingElement x1_at_1 = ring_generator(d.object(1), 0);
  CHECK(is_proven(colimit_equal(d, ColimitElement{0, x1_at_0}, ColimitElement{1, x1_at_1})));
  RingElement x2_at_1 = ring_generator(d.object(1), 1);
  CHECK(is_refuted(colimit_equal(d, ColimitElement{0, x1_at_0}, ColimitElement{1, x2_at_1})));
}

TEST_CASE("single-object diagrams reduce to element equality") {
  RingPtr a = make_ring({"x"}, Ideal::make(1, {M(1, "v1")}));
  DirectedDiagram d = DirectedDiagram::chain({a}, {});
  ColimitElement u{0, element(a, M(1, "(* v1 v1)"))};
  ColimitElement w{0, ring_constant(a, 0)};
  CHECK(is_proven(colimit_equal(d, u, w)) ==
        is_proven(elements_equal(u.element, w.element)));
}

TEST_CASE("colimit application is stage independent") {
  Rng rng(73);
  DirectedDiagram d = inclusion_chain3();
  for (int trial = 0; trial < 50; ++trial) {
    int k = rng.uniform_int(1, 2);
    SmoothMap f = accept::random_poly_map(rng, k, 2, 2);
    std::vector<ColimitElement> args;
    for (int i = 0; i < k; ++i) {
      int stage = rng.uniform_int(0, 2);
      args.push_back(ColimitElement{
          stage,
          element(d.object(stage), accept::random_poly_map(rng, d.object(stage)->arity(), 2, 2))});
    }
    ColimitElement applied = colimit_apply(d, f, args);
    RingElement lifted = d.push(applied.element, applied.stage, 2);
    std::vector<SmoothMap> reps;
    for (const auto& a : args) reps.push_back(d.push(a.element, a.stage, 2).rep);
    CHECK(equal(lifted.rep, compose(f, reps).widen(d.object(2)->arity())));
  }
}

TEST_CASE("the mediator factors every cocone leg") {
  DirectedDiagram d = inclusion_chain3();
  std::vector<Homomorphism> cocone{d.connecting(0, 2), d.connecting(1, 2),
                                   identity_hom(d.object(2))};
  ColimitMediator mediator = colimit_mediator(d, cocone);
  for (int stage = 0; stage < d.size(); ++stage)
    for (int g = 0; g < d.object(stage)->arity(); ++g) {
      RingElement gen = ring_generator(d.object(stage), g);
      CHECK(equal(mediator.apply(ColimitElement{stage, gen}).rep,
                  hom_apply(cocone[stage], gen).rep));
    }

  // incoherent cocone: swap two images at stage 1
  RingPtr top = d.object(2);
  std::vector<Homomorphism> broken = cocone;
  broken[1] = make_hom(d.object(1), top,
                       {ring_generator(top, 1), ring_generator(top, 0)});
  CHECK_THROWS_AS(colimit_mediator(d, broken), CoconeIncoherent);
}

TEST_CASE("diagram validation") {
  RingPtr a = free_ring({"x"});
  auto [b, inc] = free_extension(a, {"y"});
  CHECK_THROWS_AS(DirectedDiagram::chain({a, b}, {}), ShapeMismatch);

  // chooser that fails produces NoUpperBound
  DirectedDiagram bad({a, b}, [](int i, int j) { return i == j || (i == 0 && j == 1); },
                      [](int, int) { return -1; },
                      {{{0, 1}, inc}});
  CHECK_THROWS_AS(bad.upper(0, 1), NoUpperBound);
}

TEST_CASE("finite limits: discrete diagrams accept everything") {
  RingPtr a = free_ring({"x"}), b = free_ring({"y"});
  FiniteDiagram d;
  d.objects = {a, b};
  LimitMembership r = finite_limit_membership(
      d, {element(a, M(1, "(* v1 v1)")), ring_constant(b, 4)});
  CHECK(is_proven(r.verdict));
}

TEST_CASE("finite limits: equalizer of a parallel pair") {
  RingPtr a = free_ring({"x"});
  QuotientResult q = quotient(a, Ideal::make(1, {M(1, "v1")}));
  Homomorphism f = make_hom(a, q.ring, {ring_generator(q.ring, 0)});
  Homomorphism g = make_hom(a, q.ring, {ring_constant(q.ring, 0)});
  FiniteDiagram d;
  d.objects = {a, q.ring};
  d.arrows.push_back({0, 1, f});
  d.arrows.push_back({0, 1, g});

  // candidate (x, 0): f(x) = x = 0 mod (x) and g(x) = 0
  LimitMembership ok = finite_limit_membership(
      d, {ring_generator(a, 0), ring_constant(q.ring, 0)});
  CHECK(is_proven(ok.verdict));

  // candidate (1, 0) violates the first arrow
  LimitMembership bad = finite_limit_membership(
      d, {ring_constant(a, 1), ring_constant(q.ring, 0)});
  CHECK(is_refuted(bad.verdict));
  CHECK(bad.offending_arrow == 0);

  CHECK_THROWS_AS(finite_limit_membership(d, {ring_generator(a, 0)}), ShapeMismatch);
}

TEST_CASE("ideal restriction and assembly along a chain") {
  DirectedDiagram d = inclusion_chain3();
  const int top_arity = d.object(2)->arity();

  Ideal j = Ideal::make(top_arity, {M(top_arity, "v1")});
  ColimitIdealFamily family = colimit_ideal_restrict(d, j);
  REQUIRE(family.stages.size() == 3);
  // x1 lives already at stage 0
  REQUIRE(family.stages[0].generators.size() == 1);
  CHECK(equal(family.stages[0].generators[0], M(1, "v1")));
  CHECK(is_proven(family.stages[0].contains(M(1, "(* v1 v1)"))));
  CHECK(is_refuted(family.stages[0].contains(SmoothMap::constant(1, 1))));

  Ideal zero = Ideal::make(top_arity, {});
  for (const auto& stage : colimit_ideal_restrict(d, zero).stages)
    CHECK(stage.generators.empty());

  Ideal assembled = colimit_ideal_assemble(d, family);
  for (const auto& g : j.generators) CHECK(is_proven(ideal_membership(g, assembled)));
  for (const auto& g : assembled.generators) CHECK(is_proven(ideal_membership(g, j)));

  // a generator mentioning the top variable only restricts to the top stage
  Ideal high = Ideal::make(top_arity, {M(top_arity, "v3")});
  ColimitIdealFamily high_family = colimit_ideal_restrict(d, high);
  CHECK(high_family.stages[0].generators.empty());
  CHECK(high_family.stages[1].generators.empty());
  CHECK(is_proven(high_family.stages[2].contains(M(top_arity, "(* v3 v3)"))));
}
