#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cinf/term.hpp"

#include "../src/accept/generators.hpp"

using namespace cinf;

namespace {

Term T(const std::string& text) { return parse_term(text); }
SmoothMap M(int arity, const std::string& text) { return SmoothMap(arity, parse_term(text)); }

}  // namespace

TEST_CASE("projections are resolved to their argument") {
  // p_2 applied to (x, y*z) collapses to y*z
  Term t = Term::defined_apply(SmoothMap::projection(2, 2), {T("x"), T("(* y z)")});
  CHECK(equal(normalize(t), normalize(T("(* y z)"))));
}

TEST_CASE("constant folding") {
  CHECK(equal(normalize(T("(+ 2 3)")), T("5")));
  CHECK(equal(normalize(T("(* 2 3 x)")), normalize(T("(* 6 x)"))));
  CHECK(equal(normalize(T("(neg 4)")), T("-4")));
  CHECK(equal(normalize(T("(recip 2)")), T("1/2")));
  CHECK(equal(normalize(T("(recip 0)")), T("(recip 0)")));  // partial, stays symbolic
  CHECK(equal(normalize(T("(sin 0)")), T("0")));
  CHECK(equal(normalize(T("(cos 0)")), T("1")));
  CHECK(equal(normalize(T("(log 1)")), T("0")));
}

TEST_CASE("normalization fixed points") {
  Term s = T("(sin x)");
  CHECK(equal(normalize(s), s));
  CHECK(print_term(normalize(T("(+ x (* y z))"))) == "(+ x (* y z))");
}

TEST_CASE("polynomial identities close to the zero term") {
  // x^2 - y^2 - (x - y)(x + y)
  Term t = T("(+ (* x x) (neg (* y y)) (neg (* (+ x (neg y)) (+ x y))))");
  CHECK(normalize(t).is_zero());
}

TEST_CASE("normalize is idempotent on random terms") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Term t = trial % 2 ? accept::random_poly_term(rng, 3, 4, 4)
                       : accept::random_total_term(rng, 3, 3);
    Term once = normalize(t);
    CHECK(equal(once, normalize(once)));
  }
}

TEST_CASE("E1 soundness on random instances") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform_int(1, 4), k = rng.uniform_int(1, n);
    std::vector<Term> args;
    for (int i = 0; i < n; ++i) args.push_back(accept::random_total_term(rng, 2, 2));
    Term t = Term::defined_apply(SmoothMap::projection(n, k), args);
    CHECK(equal(normalize(t), normalize(args[k - 1])));
  }
}

TEST_CASE("evaluation") {
  SmoothMap f(3, T("(+ v1 (* v2 v3))"));
  CHECK(evaluate(f, {1.0, 2.0, 3.0}) == doctest::Approx(7.0));
  CHECK(evaluate(M(1, "(sin v1)"), {0.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(evaluate(M(1, "(recip v1)"), {0.0}), DomainError);
  CHECK_THROWS_AS(evaluate(M(1, "(log v1)"), {-1.0}), DomainError);
  CHECK_THROWS_AS(evaluate(T("x"), RealPoint{}), UnboundVariable);
}

TEST_CASE("composition") {
  SmoothMap g1 = M(2, "(+ v1 v2)"), g2 = M(2, "(* v1 v2)");
  CHECK(equal(compose(SmoothMap::projection(2, 1), {g1, g2}), g1));

  SmoothMap f = M(2, "(+ (* v1 v1) v2)");
  std::vector<SmoothMap> identity{SmoothMap::projection(2, 1), SmoothMap::projection(2, 2)};
  CHECK(equal(compose(f, identity), f));

  SmoothMap sq = M(1, "(* v1 v1)"), shift = M(1, "(+ v1 1)");
  CHECK(evaluate(compose(sq, {shift}), {2.0}) == doctest::Approx(9.0));

  CHECK_THROWS_AS(compose(f, {g1}), ArityMismatch);
}

TEST_CASE("composition agrees with pointwise composition numerically") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    bool poly = trial % 2 == 0;
    int n = rng.uniform_int(1, 3), m = rng.uniform_int(1, 3);
    SmoothMap f = poly ? accept::random_poly_map(rng, n, 3, 3)
                       : accept::random_total_map(rng, n, 2);
    std::vector<SmoothMap> gs;
    for (int i = 0; i < n; ++i)
      gs.push_back(poly ? accept::random_poly_map(rng, m, 2, 2)
                        : accept::random_total_map(rng, m, 2));
    SmoothMap h = compose(f, gs);
    for (int s = 0; s < 5; ++s) {
      std::vector<double> p = accept::random_point(rng, m, 2.0);
      std::vector<double> mid(n);
      for (int i = 0; i < n; ++i) mid[i] = evaluate(gs[i], p);
      double lhs = evaluate(h, p), rhs = evaluate(f, mid);
      if (!std::isfinite(lhs) || !std::isfinite(rhs)) continue;
      double tol = poly ? 1e-12 + 1e-12 * std::abs(rhs) : 1e-9 + 1e-9 * std::abs(rhs);
      CHECK(std::abs(lhs - rhs) <= tol);
    }
  }
}

TEST_CASE("composition is associative with slot tuples as identities") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform_int(1, 2), m = rng.uniform_int(1, 2), k = rng.uniform_int(1, 2);
    SmoothMap f = accept::random_poly_map(rng, n, 2, 2);
    std::vector<SmoothMap> gs, hs;
    for (int i = 0; i < n; ++i) gs.push_back(accept::random_poly_map(rng, m, 2, 2));
    for (int i = 0; i < m; ++i) hs.push_back(accept::random_poly_map(rng, k, 2, 2));
    // (f . gs) . hs = f . (gs . hs)
    std::vector<SmoothMap> gs_hs;
    for (const auto& g : gs) gs_hs.push_back(compose(g, hs));
    CHECK(equal(compose(compose(f, gs), hs), compose(f, gs_hs)));
    std::vector<SmoothMap> slots_n;
    for (int i = 1; i <= n; ++i) slots_n.push_back(SmoothMap::projection(n, i));
    CHECK(equal(compose(f, slots_n), f));
  }
}

TEST_CASE("differentiation table and chain rule") {
  CHECK(equal(differentiate(M(1, "(* v1 v1)"), 1), M(1, "(* 2 v1)")));
  CHECK(equal(differentiate(M(1, "(sin v1)"), 1), M(1, "(cos v1)")));
  CHECK(equal(differentiate(M(1, "(sin (* v1 v1))"), 1),
              M(1, "(* 2 v1 (cos (* v1 v1)))")));
  CHECK(equal(differentiate(M(1, "(exp v1)"), 1), M(1, "(exp v1)")));
  CHECK(equal(differentiate(M(1, "(log v1)"), 1), M(1, "(recip v1)")));
  CHECK(equal(differentiate(M(2, "(* v1 v2)"), 2), M(2, "v1")));
  CHECK_THROWS_AS(differentiate(M(1, "v1"), 2), ArityMismatch);
}

TEST_CASE("derivatives agree with central differences") {
  Rng rng(19);
  const double h = 1e-5;
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform_int(1, 3);
    SmoothMap f = trial % 2 ? accept::random_poly_map(rng, n, 3, 3)
                            : accept::random_total_map(rng, n, 2);
    int i = rng.uniform_int(1, n);
    SmoothMap df = differentiate(f, i);
    for (int s = 0; s < 5; ++s) {
      std::vector<double> p = accept::random_point(rng, n, 2.0);
      std::vector<double> hi = p, lo = p;
      hi[i - 1] += h;
      lo[i - 1] -= h;
      double numeric = (evaluate(f, hi) - evaluate(f, lo)) / (2 * h);
      double symbolic = evaluate(df, p);
      if (!std::isfinite(numeric) || !std::isfinite(symbolic)) continue;
      if (std::abs(numeric) > 1e4) continue;  // finite differences lose accuracy
      CHECK(std::abs(symbolic - numeric) <= 1e-6 * (1.0 + std::abs(symbolic)));
    }
  }
}

TEST_CASE("normalization preserves semantics") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    bool poly = trial % 2 == 0;
    int n = rng.uniform_int(1, 3);
    Term raw = poly ? accept::random_poly_term(rng, n, 3, 4)
                    : accept::random_total_term(rng, n, 3);
    Term canonical = normalize(raw);
    for (int s = 0; s < 5; ++s) {
      RealPoint p = RealPoint::slots(accept::random_point(rng, n, 2.0));
      double a = evaluate(raw, p), b = evaluate(canonical, p);
      if (!std::isfinite(a) || !std::isfinite(b)) continue;
      CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("normalization is exact under rational evaluation of polynomials") {
  // binding the slots to rational constants folds both forms to the same
  // exact constant
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform_int(1, 3);
    Term raw = accept::random_poly_term(rng, n, 4, 4);
    std::map<std::string, Term> binding;
    for (int i = 1; i <= n; ++i) binding[slot_name(i)] = Term::constant(rng.small_rational(5, 4));
    Term at_raw = normalize(substitute(raw, binding));
    Term at_canonical = normalize(substitute(normalize(raw), binding));
    REQUIRE(at_raw.kind() == TermKind::constant);
    CHECK(equal(at_raw, at_canonical));
  }
}

TEST_CASE("free support") {
  CHECK(free_support(T("(+ x (sin y))")) == std::set<std::string>{"x", "y"});
  CHECK(free_support(T("5")).empty());
  Term projected = Term::defined_apply(SmoothMap::projection(2, 1), {T("x"), T("y")});
  CHECK(free_support(projected) == std::set<std::string>{"x"});
  // a variable cancelled by normalization is not in the support
  CHECK(free_support(T("(+ (* x y) (neg (* x y)) z)")) == std::set<std::string>{"z"});
}

TEST_CASE("smooth map invariants") {
  CHECK_THROWS_AS(M(1, "(+ v1 v2)"), UnboundVariable);
  CHECK(M(2, "(recip (+ 1 (* v1 v1)))").is_partial());
  CHECK(M(2, "(+ v1 v2)").is_polynomial());
  CHECK(!M(1, "(sin v1)").is_polynomial());
  CHECK(SmoothMap::constant(0, 3).arity() == 0);
  CHECK(evaluate(SmoothMap::constant(0, 3), std::vector<double>{}) == doctest::Approx(3.0));
}

TEST_CASE("term order is a strict total order on samples") {
  Rng rng(29);
  std::vector<Term> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(normalize(accept::random_poly_term(rng, 2, 3, 3)));
  for (const auto& a : sample)
    for (const auto& b : sample) {
      int ab = compare(a, b), ba = compare(b, a);
      CHECK(ab == -ba);
      if (ab == 0) CHECK(equal(a, b));
    }
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"x", "-3/4", "(+ x y)", "(* -1 x)", "(sin (+ x 1))",
                           "(recip (+ 1 (* x x)))", "(atan x)"}) {
    Term t = normalize(T(text));
    CHECK(equal(parse_term(print_term(t)), t));
  }
  CHECK_THROWS_AS(T("(frob x)"), UnknownSymbol);
  CHECK_THROWS_AS(T("(sin x y)"), ArityError);
  CHECK_THROWS_AS(T("(+ x"), SyntaxError);
  CHECK_THROWS_AS(T("3/0"), SyntaxError);
}

TEST_CASE("primitive table matches the fixed signature") {
  CHECK(primitive(Prim::add).arity == 2);
  CHECK(primitive(Prim::recip).partial);
  CHECK(primitive(Prim::log).partial);
  CHECK(!primitive(Prim::sin).partial);
  CHECK(find_primitive("+") != nullptr);
  CHECK(find_primitive("pow") == nullptr);
  // each derivative template mentions only the argument slots
  for (Prim op : {Prim::add, Prim::mul, Prim::neg, Prim::recip, Prim::sin, Prim::cos,
                  Prim::exp, Prim::log, Prim::atan}) {
    const auto& rules = derivative_rule(op);
    CHECK(static_cast<int>(rules.size()) == primitive(op).arity);
    for (const auto& rule : rules)
      for (const auto& v : variables(rule)) {
        bool is_slot = false;
        for (int i = 1; i <= primitive(op).arity; ++i)
          if (v == slot_name(i)) is_slot = true;
        CHECK(is_slot);
      }
  }
}
