#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cinf/ring.hpp"

#include "../src/accept/generators.hpp"

using namespace cinf;

namespace {
SmoothMap M(int arity, const std::string& text) { return SmoothMap(arity, parse_term(text)); }

RingPtr line() { return free_ring({"x"}); }

RingPtr line_mod(const std::string& rel) {
  return make_ring({"x"}, Ideal::make(1, {M(1, rel)}));
}
}  // namespace

TEST_CASE("free rings") {
  RingPtr initial = free_ring({});
  CHECK(initial->arity() == 0);
  CHECK(initial->is_free());

  RingPtr a = line();
  CHECK(a->arity() == 1);
  CHECK(equal(ring_generator(a, 0).rep, M(1, "v1")));

  CHECK_THROWS_AS(free_ring({"x", "x"}), DuplicateName);
}

TEST_CASE("universal extension out of a free ring") {
  RingPtr a = line();
  RingPtr target = free_ring({});
  Homomorphism h = universal_extend(a, target, {{"x", ring_constant(target, 2)}});
  CHECK(h.status == HomStatus::verified);
  RingElement image = hom_apply(h, element(a, M(1, "(* v1 v1)")));
  CHECK(equal(image.rep, SmoothMap::constant(0, 4)));
  // generators map to their assigned images
  CHECK(equal(hom_apply(h, ring_generator(a, 0)).rep, SmoothMap::constant(0, 2)));

  Homomorphism id = universal_extend(a, a, {{"x", ring_generator(a, 0)}});
  CHECK(homs_equal_on_generators(id, identity_hom(a)));

  CHECK_THROWS_AS(universal_extend(a, target, {}), MissingImage);
  CHECK_THROWS_AS(universal_extend(line_mod("(* v1 v1)"), a,
                                   {{"x", ring_generator(a, 0)}}),
                  PreconditionUnverified);
}

TEST_CASE("quotients") {
  QuotientResult killed = quotient(line(), Ideal::make(1, {M(1, "v1")}));
  CHECK(is_proven(elements_equal(ring_generator(killed.ring, 0),
                                 ring_constant(killed.ring, 0))));
  CHECK(killed.projection.status == HomStatus::verified);

  QuotientResult same = quotient(line(), Ideal::make(1, {}));
  CHECK(same_presentation(same.ring, line()));

  // sin(y) + x = x modulo (y), through the segment cofactor
  RingPtr plane = free_ring({"x", "y"});
  QuotientResult mod_y = quotient(plane, Ideal::make(2, {M(2, "v2")}));
  RingElement lhs = element(mod_y.ring, M(2, "(+ v1 (sin v2))"));
  RingElement rhs = ring_generator(mod_y.ring, 0);
  auto verdict = elements_equal(lhs, rhs);
  REQUIRE(is_proven(verdict));
  CHECK(std::get<ProvenIn>(verdict).quadrature_flagged);

  CHECK_THROWS_AS(quotient(line(), Ideal::make(2, {M(2, "v2")})), ArityMismatch);
}

TEST_CASE("the quotient map commutes with every operation") {
  Rng rng(83);
  RingPtr a = free_ring({"x", "y"});
  QuotientResult q = quotient(a, Ideal::make(2, {M(2, "(+ (* v1 v1) v2)")}));
  for (int trial = 0; trial < 30; ++trial) {
    int k = rng.uniform_int(1, 3);
    SmoothMap f = accept::random_poly_map(rng, k, 2, 2);
    std::vector<SmoothMap> reps;
    std::vector<RingElement> args, pushed;
    for (int i = 0; i < k; ++i) {
      args.push_back(element(a, accept::random_poly_map(rng, 2, 2, 2)));
      reps.push_back(args.back().rep);
      pushed.push_back(hom_apply(q.projection, args.back()));
    }
    RingElement left = hom_apply(q.projection, element(a, compose(f, reps)));
    std::vector<SmoothMap> pushed_reps;
    for (const auto& p : pushed) pushed_reps.push_back(p.rep);
    RingElement right = element(q.ring, compose(f, pushed_reps));
    CHECK(equal(left.rep, right.rep));
  }
}

TEST_CASE("element equality verdicts") {
  RingPtr a = line_mod("v1");
  RingElement x = ring_generator(a, 0);
  CHECK(is_proven(elements_equal(x, x)));

  RingElement combo = element(a, M(1, "(+ (* v1 v1) v1)"));
  auto v = elements_equal(combo, ring_constant(a, 0));
  REQUIRE(is_proven(v));
  REQUIRE(std::get<ProvenIn>(v).certificate[0].as_term().has_value());
  CHECK(equal(*std::get<ProvenIn>(v).certificate[0].as_term(), M(1, "(+ 1 v1)")));

  RingPtr b = line_mod("(+ v1 -1)");
  auto refuted = elements_equal(ring_generator(b, 0), ring_constant(b, 0));
  REQUIRE(is_refuted(refuted));
  CHECK(std::get<RefutedNumerically>(refuted).witness.at("v1") == doctest::Approx(1.0));

  CHECK_THROWS_AS(elements_equal(ring_generator(a, 0), ring_generator(b, 0)), RingMismatch);
}

TEST_CASE("hom status checking") {
  RingPtr square = line_mod("(* v1 v1)");
  RingPtr mod_x = line_mod("v1");
  Homomorphism ok = make_hom(square, mod_x, {ring_generator(mod_x, 0)});
  CHECK(ok.status == HomStatus::verified);

  CHECK(identity_hom(square).status == HomStatus::verified);

  RingPtr shifted = line_mod("(+ v1 -1)");
  Homomorphism bad = make_hom(shifted, mod_x, {ring_generator(mod_x, 0)});
  CHECK(bad.status == HomStatus::refuted);
  CHECK(bad.refuted_relation == 0);

  // sin(2x) is a smooth multiple of sin(x), but no strategy certifies it,
  // and every common zero of sin(x) also kills sin(2x), so no refutation
  RingPtr wave = make_ring({"x"}, Ideal::make(1, {M(1, "(sin v1)")}));
  RingPtr wave2 = make_ring({"x"}, Ideal::make(1, {M(1, "(sin (* 2 v1))")}));
  Homomorphism undecided = make_hom(wave2, wave, {ring_generator(wave, 0)});
  CHECK(undecided.status == HomStatus::unverified);
  CHECK(undecided.unknown_relations == std::vector<int>{0});
  // the opposite direction is refutable: sin(x) is 1 at a zero of sin(2x)
  Homomorphism refutable = make_hom(wave, wave2, {ring_generator(wave2, 0)});
  CHECK(refutable.status == HomStatus::refuted);
}

TEST_CASE("kernel membership") {
  QuotientResult q = quotient(line(), Ideal::make(1, {M(1, "v1")}));
  CHECK(is_proven(kernel_contains(q.projection, element(line(), M(1, "(* v1 v1)")))));
  CHECK(is_refuted(kernel_contains(q.projection, ring_constant(line(), 1))));
}

TEST_CASE("fundamental factorization") {
  RingPtr a = line();
  QuotientResult q = quotient(a, Ideal::make(1, {M(1, "v1")}));
  const Homomorphism& phi = q.projection;

  Congruence r = congruence_from_pairs(1, {{M(1, "(* v1 v1)"), SmoothMap::constant(1, 0)}});
  FactorResult f = ftt_factor(phi, r);
  CHECK(f.factored.status == HomStatus::verified);
  CHECK(homs_equal_on_generators(hom_compose(f.factored, f.projection), phi));

  // diagonal congruence: the factorization is phi itself up to presentation
  FactorResult trivial = ftt_factor(phi, ideal_to_congruence(Ideal::make(1, {})));
  CHECK(same_presentation(trivial.quotient_ring, a));
  CHECK(homs_equal_on_generators(trivial.factored, phi));

  // R not inside ker(phi): x - 1 does not map into (x)
  Congruence outside = congruence_from_pairs(1, {{M(1, "v1"), SmoothMap::constant(1, 1)}});
  CHECK_THROWS_AS(ftt_factor(phi, outside), PreconditionUnverified);
}

TEST_CASE("first-isomorphism behaviour on sampled classes") {
  // factor through R = ker-matching pairs; classes map injectively
  RingPtr a = line();
  QuotientResult q = quotient(a, Ideal::make(1, {M(1, "(* v1 v1)")}));
  Congruence r = congruence_from_pairs(1, {{M(1, "(* v1 v1)"), SmoothMap::constant(1, 0)}});
  FactorResult f = ftt_factor(q.projection, r);
  Rng rng(53);
  for (int s = 0; s < 25; ++s) {
    RingElement u = element(f.quotient_ring, accept::random_poly_map(rng, 1, 3, 3));
    RingElement w = element(f.quotient_ring, accept::random_poly_map(rng, 1, 3, 3));
    bool quotient_equal = is_proven(elements_equal(u, w));
    bool image_equal =
        is_proven(elements_equal(hom_apply(f.factored, u), hom_apply(f.factored, w)));
    CHECK(quotient_equal == image_equal);  // R is exactly the kernel here
  }
}

TEST_CASE("image presentations need witnesses") {
  RingPtr a = line();
  QuotientResult q = quotient(a, Ideal::make(1, {M(1, "(* v1 v1)")}));
  RingPtr image = image_presentation(q.projection, {ring_generator(a, 0)});
  CHECK(same_presentation(image, q.ring));

  CHECK_THROWS_AS(image_presentation(q.projection, {}), WitnessMissing);
  CHECK_THROWS_AS(image_presentation(q.projection, {ring_constant(a, 0)}), WitnessMissing);
}

TEST_CASE("hom laws") {
  Rng rng(59);
  RingPtr a = free_ring({"x", "y"});
  Homomorphism id = identity_hom(a);
  for (int s = 0; s < 20; ++s) {
    RingElement e = element(a, accept::random_poly_map(rng, 2, 3, 3));
    CHECK(equal(hom_apply(id, e).rep, e.rep));
  }
  RingPtr b = line();
  Homomorphism f = make_hom(a, b, {ring_generator(b, 0), element(b, M(1, "(* v1 v1)"))});
  Homomorphism g = make_hom(b, a, {element(a, M(2, "(+ v1 v2)"))});
  Homomorphism gf = hom_compose(g, f);
  for (int s = 0; s < 20; ++s) {
    RingElement e = element(a, accept::random_poly_map(rng, 2, 2, 3));
    CHECK(equal(hom_apply(gf, e).rep, hom_apply(g, hom_apply(f, e)).rep));
  }
}

TEST_CASE("two homs out of a free ring agreeing on generators agree everywhere") {
  Rng rng(61);
  RingPtr a = free_ring({"x", "y"});
  RingPtr c = line_mod("(* v1 v1 v1)");
  std::vector<RingElement> images{element(c, M(1, "(+ v1 2)")), element(c, M(1, "(* 3 v1)"))};
  Homomorphism h1 = make_hom(a, c, images);
  Homomorphism h2 = universal_extend(a, c, {{"x", images[0]}, {"y", images[1]}});
  CHECK(homs_equal_on_generators(h1, h2));
  for (int s = 0; s < 50; ++s) {
    RingElement e = element(a, accept::random_poly_map(rng, 2, 3, 3));
    CHECK(equal(hom_apply(h1, e).rep, hom_apply(h2, e).rep));
  }
}

TEST_CASE("counit: evaluation from the free ring is verified and onto generators") {
  RingPtr a = make_ring({"x", "y"}, Ideal::make(2, {M(2, "(* v1 v2)")}));
  RingPtr free_cover = free_ring(a->generator_names);
  std::map<std::string, RingElement> alpha;
  for (int i = 0; i < a->arity(); ++i)
    alpha.emplace(a->generator_names[i], ring_generator(a, i));
  Homomorphism counit = universal_extend(free_cover, a, alpha);
  CHECK(counit.status == HomStatus::verified);
  std::vector<RingElement> witnesses;
  for (int i = 0; i < a->arity(); ++i) witnesses.push_back(ring_generator(free_cover, i));
  CHECK(same_presentation(image_presentation(counit, witnesses), a));
}

TEST_CASE("free extensions include the smaller ring") {
  RingPtr a = line_mod("(* v1 v1)");
  auto [wide, inclusion] = free_extension(a, {"t"});
  CHECK(wide->arity() == 2);
  CHECK(inclusion.status == HomStatus::verified);
  CHECK(equal(hom_apply(inclusion, ring_generator(a, 0)).rep, M(2, "v1")));
  CHECK_THROWS_AS(free_extension(a, {"x"}), DuplicateName);
}

TEST_CASE("syntactic generated-subring membership") {
  RingPtr a = free_ring({"x", "y", "z"});
  RingElement e = element(a, M(3, "(+ v1 (sin v2))"));
  CHECK(generated_subring_contains(e, {"x", "y"}));
  CHECK(!generated_subring_contains(e, {"x"}));
  CHECK(generated_subring_contains(ring_constant(a, 5), {}));
}

TEST_CASE("derived ring laws hold in presented rings") {
  Rng rng(67);
  RingPtr a = make_ring({"x", "y"}, Ideal::make(2, {M(2, "(+ (* v1 v1) (* v2 v2) -1)")}));
  RingElement u = element(a, M(2, "(+ v1 (sin v2))"));
  RingElement v = element(a, M(2, "(* v1 v2)"));
  RingElement w = ring_constant(a, 3);
  CHECK(equal((u + v).rep, (v + u).rep));
  CHECK(equal(((u + v) + w).rep, (u + (v + w)).rep));
  CHECK(equal((u * v).rep, (v * u).rep));
  CHECK(equal((u * (v + w)).rep, (u * v + u * w).rep));
  CHECK((u - u).rep.is_zero());
  for (int s = 0; s < 30; ++s) {
    std::vector<double> p = accept::random_point(rng, 2, 2.0);
    CHECK(evaluate((u * (v + w)).rep, p) ==
          doctest::Approx(evaluate(u.rep, p) * (evaluate(v.rep, p) + evaluate(w.rep, p)))
              .epsilon(1e-9));
  }
}
