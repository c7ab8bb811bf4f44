#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "cinf/cli.hpp"
#include "cinf/session.hpp"

#include "../src/accept/generators.hpp"

using namespace cinf;

namespace {

const char* kDocument = R"((ring A (gens x) (rels (* x x)))
(ring A0 (gens x) (rels))
(ring B (gens x y) (rels))
(elem u B (+ y (* x x) (* x x)))
(hom h A A (images x))
(ring C (gens x y z) (rels))
(hom i B C (images x y))
(hom j A0 B (images x))
(chain K A0 j B i)
)";

std::string write_temp(const std::string& text) {
  std::string path = "cinf_test_session.cinf";
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("session parsing builds the declared objects") {
  Session s = parse_session(kDocument);
  REQUIRE(s.rings.count("A"));
  REQUIRE(s.rings.count("B"));
  CHECK(s.rings.at("A")->relations.generators.size() == 1);
  CHECK(s.rings.at("B")->is_free());
  REQUIRE(s.elements.count("u"));
  CHECK(equal(s.elements.at("u").rep, SmoothMap(2, parse_term("(+ v2 (* 2 v1 v1))"))));
  REQUIRE(s.homs.count("h"));
  CHECK(s.homs.at("h").hom.status == HomStatus::verified);
  REQUIRE(s.chains.count("K"));
  DirectedDiagram d = chain_diagram(s, "K");
  CHECK(d.size() == 3);
  CHECK(d.object(2)->arity() == 3);
}

TEST_CASE("canonical printing round trips") {
  Session s = parse_session(kDocument);
  std::string printed = print_session(s);
  Session reparsed = parse_session(printed);
  CHECK(print_session(reparsed) == printed);
}

TEST_CASE("random sessions round trip through print") {
  Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform_int(1, 3);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i + 1));
    std::vector<SmoothMap> rels;
    for (int g = 0, count = rng.uniform_int(0, 2); g < count; ++g)
      rels.push_back(accept::random_poly_map(rng, n, 2, 2));
    Session s;
    s.rings.emplace("R", make_ring(names, Ideal::make(n, rels)));
    s.elements.emplace("e", element(s.rings.at("R"), accept::random_poly_map(rng, n, 3, 3)));
    std::string printed = print_session(s);
    CHECK(print_session(parse_session(printed)) == printed);
  }
}

TEST_CASE("parse errors carry locations") {
  CHECK_THROWS_AS(parse_session("(ring A (gens x x) (rels))"), SyntaxError);
  try {
    parse_session("(ring A (gens x x) (rels))");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_session("(widget W)"), UnknownSymbol);
  CHECK_THROWS_AS(parse_session("(ring A (gens x) (rels (+ x y)))"), UnknownSymbol);
  CHECK_THROWS_AS(parse_session("(hom h A B (images x))"), UnknownSymbol);
  CHECK_THROWS_AS(parse_session("(ring A (gens x) (rels)) (ring A (gens y) (rels))"),
                  SyntaxError);
  // arity error on images
  CHECK_THROWS_AS(
      parse_session("(ring A (gens x y) (rels)) (hom h A A (images x))"), ArityError);
  // chain must connect
  CHECK_THROWS_AS(parse_session("(ring A (gens x) (rels))\n"
                                "(ring B (gens y) (rels))\n"
                                "(hom f B A (images 0))\n"
                                "(chain K A f)"),
                  SyntaxError);
}

TEST_CASE("mutated documents fail with located errors, never crashes") {
  Rng rng(97);
  const std::string base = kDocument;
  const char alphabet[] = "()abcxyz019 */+;\n\"";
  for (int trial = 0; trial < 400; ++trial) {
    std::string mutated = base;
    int edits = rng.uniform_int(1, 4);
    for (int e = 0; e < edits; ++e) {
      std::size_t pos = rng.next() % mutated.size();
      char c = alphabet[rng.next() % (sizeof alphabet - 1)];
      if (rng.uniform_int(0, 2) == 0)
        mutated.erase(pos, 1);
      else
        mutated[pos] = c;
    }
    try {
      Session s = parse_session(mutated);
      (void)print_session(s);
    } catch (const ParseError& e) {
      CHECK(e.line >= 1);
      CHECK(e.column >= 1);
    } catch (const Error&) {
      // structural errors without a source position are fine too
    }
  }
  CHECK_THROWS_AS(parse_session(std::string(2000, '(')), SyntaxError);
}

TEST_CASE("normalize subcommand") {
  CommandResult r = run_command({"normalize", "(+ x (sin y))"});
  CHECK(r.exit_code == 0);
  CHECK(r.report == "(+ x (sin y))\nsupport: x y\n");

  CommandResult folded = run_command({"normalize", "(+ 2 3)"});
  CHECK(folded.report == "5\nsupport:\n");
}

TEST_CASE("eval subcommand") {
  CommandResult r = run_command({"eval", "(+ x (* y y))", "--at", "x=1,y=2"});
  CHECK(r.exit_code == 0);
  CHECK(r.report == "value = 5\n");

  CommandResult pole = run_command({"eval", "(recip x)", "--at", "x=0"});
  CHECK(pole.exit_code == 1);
  CHECK(pole.report.rfind("error:", 0) == 0);
}

TEST_CASE("diff subcommand") {
  CommandResult by_var = run_command({"diff", "(sin (* x x))", "--var", "x"});
  CHECK(by_var.exit_code == 0);
  CHECK(by_var.report == "(* 2 x (cos (* x x)))\n");

  CommandResult by_slot = run_command({"diff", "(* v1 v1)", "--slot", "1"});
  CHECK(by_slot.report == "(* 2 v1)\n");
}

TEST_CASE("hadamard subcommand") {
  CommandResult exact = run_command({"hadamard", "(* v1 v1)", "--exact"});
  CHECK(exact.exit_code == 0);
  CHECK(exact.report == "g1 = (+ x1 y1)\n");

  CommandResult quad =
      run_command({"hadamard", "(exp v1)", "--quad", "--x", "1", "--y", "0"});
  CHECK(quad.exit_code == 0);
  CHECK(quad.report == "g1 = 1.71828182846\n");

  CommandResult not_poly = run_command({"hadamard", "(sin v1)", "--exact"});
  CHECK(not_poly.exit_code == 1);
}

TEST_CASE("member subcommand matches the documented examples") {
  CommandResult proven = run_command({"member", "--ideal", "(x)", "--elem", "(* x x)"});
  CHECK(proven.exit_code == 0);
  CHECK(proven.report == "ProvenIn cofactors: (x)\n");

  CommandResult refuted = run_command({"member", "--ideal", "(x)", "--elem", "1"});
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.report.rfind("RefutedNumerically at x=", 0) == 0);

  CommandResult unknown =
      run_command({"member", "--ideal", "((sin x))", "--elem", "(sin (* 2 x))"});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.report.rfind("Unknown strategies:", 0) == 0);
}

TEST_CASE("session-backed subcommands") {
  std::string path = write_temp(kDocument);

  CommandResult member = run_command(
      {"member", "--session", path, "--ring", "A", "--ideal", "(x)", "--elem", "(* x x x)"});
  CHECK(member.exit_code == 0);

  CommandResult quot = run_command(
      {"quotient", "--session", path, "--ring", "B", "--ideal", "(y)", "--name", "Q"});
  CHECK(quot.exit_code == 0);
  CHECK(quot.report == "(ring Q (gens x y) (rels y))\nprojection: Verified\n");

  CommandResult cop = run_command(
      {"coprod", "--session", path, "--left", "A", "--right", "B", "--name", "T"});
  CHECK(cop.exit_code == 0);
  CHECK(cop.report.find("(ring T (gens x x_2 y)") != std::string::npos);

  CommandResult adj =
      run_command({"adjoin", "--session", path, "--ring", "A", "--names", "t"});
  CHECK(adj.exit_code == 0);
  CHECK(adj.report.find("adjoined: t") != std::string::npos);

  CommandResult hc = run_command({"hom-check", "--session", path, "--hom", "h"});
  CHECK(hc.exit_code == 0);
  CHECK(hc.report == "Verified\n");

  CommandResult ftt = run_command(
      {"ftt", "--session", path, "--hom", "h", "--pairs", "(((* x x) 0))"});
  CHECK(ftt.exit_code == 0);

  CommandResult ceq = run_command({"colimit-eq", "--session", path, "--chain", "K",
                                   "--left-stage", "0", "--left", "x", "--right-stage", "2",
                                   "--right", "x"});
  CHECK(ceq.exit_code == 0);

  CommandResult limit = run_command(
      {"limit-check", "--session", path, "--homs", "j", "--elems", "x;x"});
  CHECK(limit.exit_code == 0);
  CHECK(limit.report == "Compatible\n");

  std::remove(path.c_str());
}

TEST_CASE("reports are byte stable for a fixed seed") {
  for (auto args : {std::vector<std::string>{"member", "--seed", "9", "--ideal", "(x)",
                                             "--elem", "1"},
                    std::vector<std::string>{"hadamard", "(sin v1)", "--quad", "--check",
                                             "20", "--seed", "9"}}) {
    CommandResult a = run_command(args);
    CommandResult b = run_command(args);
    CHECK(a.report == b.report);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("exit code contract") {
  CHECK(run_command({"normalize", "(+ 1 2)"}).exit_code == 0);               // decisive
  CHECK(run_command({"member", "--ideal", "(x)", "--elem", "1"}).exit_code == 1);  // refuted
  CHECK(run_command({"member", "--ideal", "((sin x))", "--elem", "(sin (* 2 x))"}).exit_code ==
        2);                                                                  // unknown
  CHECK(run_command({"normalize", "(frob x)"}).exit_code == 1);              // error
  CHECK(run_command({"nonsense"}).exit_code == 1);
}
