#include "cinf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cinf/constructions.hpp"
#include "cinf/hadamard.hpp"
#include "cinf/session.hpp"
#include "cinf/sexpr.hpp"

#include "accept/acceptance.hpp"

namespace cinf {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open session file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_session(buffer.str());
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<Term> parse_term_list(const std::string& text) {
  Sexpr node = parse_sexpr(text);
  if (node.is_atom) return {term_from_sexpr(node)};
  // a parenthesized list of terms, unless the head is itself a primitive
  if (!node.items.empty() && node.items.front().is_atom &&
      find_primitive(node.items.front().atom))
    return {term_from_sexpr(node)};
  std::vector<Term> out;
  for (const auto& item : node.items) out.push_back(term_from_sexpr(item));
  return out;
}

std::vector<std::string> support_names(const std::vector<Term>& terms) {
  std::set<std::string> support;
  for (const auto& t : terms)
    for (const auto& v : free_support(t)) support.insert(v);
  return {support.begin(), support.end()};
}

RealPoint parse_point(const std::string& text) {
  RealPoint p;
  for (const auto& item : split_list(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("expected name=value in --at, got " + item);
    p.coords[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return p;
}

std::string print_cofactor(const Cofactor& c, const std::vector<std::string>& names) {
  if (auto t = c.as_term()) return print_term(named_term_from_map(*t, names));
  return "[segment-integral]";
}

void report_verdict(std::ostream& out, const MembershipVerdict& v,
                    const std::vector<std::string>& names, int& exit_code) {
  if (is_proven(v)) {
    const auto& p = std::get<ProvenIn>(v);
    out << "ProvenIn cofactors: (";
    for (std::size_t i = 0; i < p.certificate.size(); ++i)
      out << (i ? " " : "") << print_cofactor(p.certificate[i], names);
    out << ")\n";
    if (p.quadrature_flagged || p.partial_flagged) {
      out << "flags:";
      if (p.quadrature_flagged) out << " quadrature";
      if (p.partial_flagged) out << " partial";
      out << "\n";
    }
    exit_code = 0;
  } else if (is_refuted(v)) {
    const auto& r = std::get<RefutedNumerically>(v);
    out << "RefutedNumerically at";
    bool first = true;
    for (const auto& [slot, value] : r.witness.coords) {
      int index = std::atoi(slot.c_str() + 1);
      const std::string& name =
          index >= 1 && index <= static_cast<int>(names.size()) ? names[index - 1] : slot;
      out << (first ? " " : ",") << name << "=" << fmt(value);
      first = false;
    }
    out << "\n";
    out << "generator_residual = " << fmt(r.generator_residual)
        << " element_value = " << fmt(r.element_value) << "\n";
    exit_code = 1;
  } else {
    const auto& u = std::get<Unknown>(v);
    out << "Unknown strategies:";
    for (const auto& s : u.strategies_tried) out << " " << s;
    out << "\n";
    exit_code = 2;
  }
}

std::string hom_status_line(const Homomorphism& h) {
  switch (h.status) {
    case HomStatus::verified:
      return "Verified";
    case HomStatus::refuted:
      return "RefutedAt " + std::to_string(h.refuted_relation);
    case HomStatus::unverified: {
      std::string out = "Unverified unknown-relations:";
      for (int i : h.unknown_relations) out += " " + std::to_string(i);
      return out;
    }
  }
  return "Unverified";
}

int hom_status_code(const Homomorphism& h) {
  switch (h.status) {
    case HomStatus::verified:
      return 0;
    case HomStatus::refuted:
      return 1;
    default:
      return 2;
  }
}

// max slot index mentioned by a term over canonical slots
int inferred_arity(const Term& t) {
  int arity = 0;
  for (const auto& v : free_support(t)) {
    if (v.empty() || v[0] != 'v') throw Error("expected slot variables v1..vn, found " + v);
    arity = std::max(arity, std::atoi(v.c_str() + 1));
  }
  return arity;
}

struct Cli {
  std::uint64_t seed = 0;
  std::ostringstream out;
  int exit_code = 0;

  StrategyConfig config() const {
    StrategyConfig cfg;
    cfg.seed = seed;
    return cfg;
  }

  void run_normalize(const std::string& term_text) {
    Term t = normalize(parse_term(term_text));
    out << print_term(t) << "\n";
    out << "support:";
    for (const auto& v : free_support(t)) out << " " << v;
    out << "\n";
  }

  void run_eval(const std::string& term_text, const std::string& at_text) {
    Term t = parse_term(term_text);
    out << "value = " << fmt(evaluate(t, parse_point(at_text))) << "\n";
  }

  void run_diff(const std::string& term_text, const std::string& var, int slot_index,
                int arity) {
    Term t = parse_term(term_text);
    if (!var.empty()) {
      std::vector<std::string> names = support_names({t});
      if (std::find(names.begin(), names.end(), var) == names.end())
        throw Error("variable " + var + " does not occur in the term");
      SmoothMap f = map_from_named_term(t, names);
      int index = 1 + static_cast<int>(std::find(names.begin(), names.end(), var) -
                                       names.begin());
      out << print_term(named_term_from_map(differentiate(f, index), names)) << "\n";
      return;
    }
    int n = arity > 0 ? arity : inferred_arity(t);
    SmoothMap f(n, t);
    out << print_term(differentiate(f, slot_index).body()) << "\n";
  }

  static std::vector<std::string> xy_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return names;
  }

  void run_hadamard(bool exact, const std::string& term_text, int arity,
                    const std::string& x_text, const std::string& y_text, int check_samples,
                    double box) {
    Term t = parse_term(term_text);
    int n = arity > 0 ? arity : inferred_arity(t);
    SmoothMap f(n, t);
    if (exact) {
      HadamardDecomposition d = hadamard_exact(f);
      std::vector<std::string> names = xy_names(n);
      for (int i = 0; i < n; ++i)
        out << "g" << (i + 1) << " = " << print_term(named_term_from_map(d.cofactors[i], names))
            << "\n";
      if (check_samples > 0) {
        VerificationReport r = verify_decomposition(d, check_samples, box, seed);
        out << "max residual = " << fmt(r.max_residual) << " over " << r.samples_used
            << " samples\n";
        if (r.rejection_budget_exhausted) out << "rejection budget exhausted\n";
      }
      return;
    }
    if (x_text.empty() || y_text.empty()) {
      HadamardDecomposition d = hadamard_quadrature_decomposition(f);
      VerificationReport r = verify_decomposition(d, check_samples > 0 ? check_samples : 100,
                                                  box, seed);
      out << "max residual = " << fmt(r.max_residual) << " over " << r.samples_used
          << " samples\n";
      if (r.rejection_budget_exhausted) out << "rejection budget exhausted\n";
      return;
    }
    std::vector<double> x = parse_doubles(x_text), y = parse_doubles(y_text);
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
      throw ArityMismatch("points must have " + std::to_string(n) + " coordinates");
    std::vector<double> g = hadamard_quadrature(f, x, y);
    for (int i = 0; i < n; ++i) out << "g" << (i + 1) << " = " << fmt(g[i]) << "\n";
  }

  void run_member(const std::string& session_path, const std::string& ring_name,
                  const std::string& ideal_text, const std::string& elem_text) {
    std::vector<Term> gen_terms = parse_term_list(ideal_text);
    Term elem_term = parse_term(elem_text);
    std::vector<std::string> names;
    std::vector<SmoothMap> gens;
    if (!session_path.empty() && !ring_name.empty()) {
      Session s = load_session(session_path);
      auto it = s.rings.find(ring_name);
      if (it == s.rings.end()) throw Error("ring " + ring_name + " is not defined");
      names = it->second->generator_names;
      gens = it->second->relations.generators;  // membership modulo the presentation
    } else {
      std::vector<Term> all = gen_terms;
      all.push_back(elem_term);
      names = support_names(all);
    }
    for (const auto& t : gen_terms) gens.push_back(map_from_named_term(t, names));
    Ideal ideal = Ideal::make(static_cast<int>(names.size()), std::move(gens));
    MembershipVerdict v =
        ideal_membership(map_from_named_term(elem_term, names), ideal, config());
    report_verdict(out, v, names, exit_code);
  }

  void run_quotient(const std::string& session_path, const std::string& ring_name,
                    const std::string& gens_text, const std::string& ideal_text,
                    const std::string& result_name) {
    RingPtr ring;
    if (!session_path.empty() && !ring_name.empty()) {
      Session s = load_session(session_path);
      auto it = s.rings.find(ring_name);
      if (it == s.rings.end()) throw Error("ring " + ring_name + " is not defined");
      ring = it->second;
    } else if (!gens_text.empty()) {
      ring = free_ring(split_list(gens_text, ','));
    } else {
      throw Error("quotient needs --session/--ring or --gens");
    }
    std::vector<SmoothMap> gens;
    for (const auto& t : parse_term_list(ideal_text))
      gens.push_back(map_from_named_term(t, ring->generator_names));
    QuotientResult q =
        quotient(ring, Ideal::make(ring->arity(), std::move(gens)), config());
    out << print_ring(*q.ring, result_name) << "\n";
    out << "projection: " << hom_status_line(q.projection) << "\n";
    exit_code = hom_status_code(q.projection);
  }

  RingPtr ring_argument(const std::string& session_path, const std::string& ring_name,
                        const std::string& gens_text) {
    if (!ring_name.empty()) {
      Session s = load_session(session_path);
      auto it = s.rings.find(ring_name);
      if (it == s.rings.end()) throw Error("ring " + ring_name + " is not defined");
      return it->second;
    }
    return free_ring(split_list(gens_text, ','));
  }

  void run_coprod(const std::string& session_path, const std::string& left,
                  const std::string& right, const std::string& free_left,
                  const std::string& free_right, const std::string& result_name) {
    RingPtr a = ring_argument(session_path, left, free_left);
    RingPtr b = ring_argument(session_path, right, free_right);
    CoproductResult cp = coproduct(a, b, config());
    out << print_ring(*cp.ring, result_name) << "\n";
    auto leg = [&](const char* label, const Homomorphism& h) {
      out << label << ":";
      for (std::size_t i = 0; i < h.images.size(); ++i)
        out << " " << h.source->generator_names[i] << "->"
            << print_term(named_term_from_map(h.images[i].rep, cp.ring->generator_names));
      out << " [" << hom_status_line(h) << "]\n";
    };
    leg("iota_left", cp.into_first);
    leg("iota_right", cp.into_second);
  }

  void run_adjoin(const std::string& session_path, const std::string& ring_name,
                  const std::string& gens_text, const std::string& names_text,
                  const std::string& result_name) {
    RingPtr a = ring_argument(session_path, ring_name, gens_text);
    AdjunctionResult adj = polynomial_adjunction(a, split_list(names_text, ','), config());
    out << print_ring(*adj.coprod.ring, result_name) << "\n";
    out << "adjoined:";
    for (const auto& x : adj.adjoined)
      out << " "
          << print_term(named_term_from_map(x.rep, adj.coprod.ring->generator_names));
    out << "\n";
  }

  void run_hom_check(const std::string& session_path, const std::string& hom_name) {
    Session s = load_session(session_path);
    auto it = s.homs.find(hom_name);
    if (it == s.homs.end()) throw Error("hom " + hom_name + " is not defined");
    Homomorphism h = it->second.hom;
    hom_check(h, config());
    out << hom_status_line(h) << "\n";
    exit_code = hom_status_code(h);
  }

  void run_ftt(const std::string& session_path, const std::string& hom_name,
               const std::string& pairs_text) {
    Session s = load_session(session_path);
    auto it = s.homs.find(hom_name);
    if (it == s.homs.end()) throw Error("hom " + hom_name + " is not defined");
    const Homomorphism& phi = it->second.hom;
    Sexpr pairs_node = parse_sexpr(pairs_text);
    if (pairs_node.is_atom) throw Error("--pairs expects ((a b) ...)");
    std::vector<std::pair<SmoothMap, SmoothMap>> pairs;
    for (const auto& item : pairs_node.items) {
      if (item.is_atom || item.items.size() != 2)
        throw SyntaxError(item.line, item.column, "each pair needs exactly two terms");
      pairs.emplace_back(
          map_from_named_term(term_from_sexpr(item.items[0]), phi.source->generator_names),
          map_from_named_term(term_from_sexpr(item.items[1]), phi.source->generator_names));
    }
    Congruence R = congruence_from_pairs(phi.source->arity(), pairs);
    FactorResult f = ftt_factor(phi, R, config());
    out << print_ring(*f.quotient_ring, "quotient") << "\n";
    out << "factored: " << hom_status_line(f.factored) << "\n";
    out << "factored.q = phi on generators: ok\n";
    exit_code = hom_status_code(f.factored);
  }

  void run_colimit_eq(const std::string& session_path, const std::string& chain_name,
                      int left_stage, const std::string& left_text, int right_stage,
                      const std::string& right_text) {
    Session s = load_session(session_path);
    DirectedDiagram d = chain_diagram(s, chain_name);
    auto stage_element = [&](int stage, const std::string& text) {
      if (stage < 0 || stage >= d.size()) throw Error("stage index out of range");
      const RingPtr& ring = d.object(stage);
      return ColimitElement{
          stage, element(ring, map_from_named_term(parse_term(text), ring->generator_names))};
    };
    ColimitElement u = stage_element(left_stage, left_text);
    ColimitElement w = stage_element(right_stage, right_text);
    MembershipVerdict v = colimit_equal(d, u, w, config());
    int top = d.upper(left_stage, right_stage);
    report_verdict(out, v, d.object(top)->generator_names, exit_code);
  }

  void run_limit_check(const std::string& session_path, const std::string& homs_text,
                       const std::string& elems_text) {
    Session s = load_session(session_path);
    FiniteDiagram diagram;
    std::map<std::string, int> object_index;
    auto intern = [&](const std::string& ring_name) {
      auto found = object_index.find(ring_name);
      if (found != object_index.end()) return found->second;
      int index = static_cast<int>(diagram.objects.size());
      diagram.objects.push_back(s.rings.at(ring_name));
      object_index.emplace(ring_name, index);
      return index;
    };
    for (const auto& hom_name : split_list(homs_text, ',')) {
      auto it = s.homs.find(hom_name);
      if (it == s.homs.end()) throw Error("hom " + hom_name + " is not defined");
      FiniteDiagram::Arrow arrow;
      arrow.src = intern(it->second.source_name);
      arrow.dst = intern(it->second.target_name);
      arrow.hom = it->second.hom;
      diagram.arrows.push_back(std::move(arrow));
    }
    std::vector<std::string> elem_texts = split_list(elems_text, ';');
    if (elem_texts.size() != diagram.objects.size())
      throw Error("expected " + std::to_string(diagram.objects.size()) +
                  " candidate components separated by ';'");
    std::vector<RingElement> candidate;
    for (std::size_t i = 0; i < elem_texts.size(); ++i)
      candidate.push_back(element(
          diagram.objects[i],
          map_from_named_term(parse_term(elem_texts[i]),
                              diagram.objects[i]->generator_names)));
    LimitMembership r = finite_limit_membership(diagram, candidate, config());
    if (is_proven(r.verdict)) {
      out << "Compatible\n";
      exit_code = 0;
    } else if (is_refuted(r.verdict)) {
      out << "Refuted at arrow " << r.offending_arrow << "\n";
      exit_code = 1;
    } else {
      out << "Unknown\n";
      exit_code = 2;
    }
  }

  void run_verify(const std::string& corpus_dir) {
    accept::Options opts;
    opts.seed = seed;
    opts.corpus_dir = corpus_dir;
    opts.cli = [](const std::vector<std::string>& args) {
      CommandResult r = run_command(args);
      return accept::CliResult{r.exit_code, r.report};
    };
    exit_code = accept::run_all(opts, out) ? 0 : 1;
  }
};

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Cli cli;
  if (const char* env_seed = std::getenv("CINF_SEED")) cli.seed = std::strtoull(env_seed, nullptr, 10);

  CLI::App app{"computer algebra for smooth-function rings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cli.seed, "seed for all stochastic strategies");

  std::string term_text, at_text, var_name, session_path, ring_name, ideal_text, elem_text;
  std::string gens_text, result_name = "result", x_text, y_text, left, right, free_left,
              free_right, names_text, hom_name, pairs_text, chain_name, homs_text, elems_text;
  std::string corpus_dir = CINF_CORPUS_DIR;
  if (const char* env_corpus = std::getenv("CINF_CORPUS")) corpus_dir = env_corpus;
  int slot_index = 1, arity = 0, check_samples = 0, left_stage = 0, right_stage = 0;
  double box = 2.0;
  bool exact = false, quad = false;

  auto* c_normalize = app.add_subcommand("normalize", "canonical form of a term");
  c_normalize->add_option("term", term_text)->required();

  auto* c_eval = app.add_subcommand("eval", "evaluate a term at a point");
  c_eval->add_option("term", term_text)->required();
  c_eval->add_option("--at", at_text, "comma separated name=value bindings")->required();

  auto* c_diff = app.add_subcommand("diff", "symbolic partial derivative");
  c_diff->add_option("term", term_text)->required();
  c_diff->add_option("--var", var_name, "differentiate by variable name");
  c_diff->add_option("--slot", slot_index, "differentiate by slot index (terms over v1..vn)");
  c_diff->add_option("--arity", arity);

  auto* c_hadamard = app.add_subcommand("hadamard", "Hadamard cofactors of a map over v-slots");
  c_hadamard->add_option("term", term_text)->required();
  c_hadamard->add_flag("--exact", exact, "closed-form cofactors (polynomial maps)");
  c_hadamard->add_flag("--quad", quad, "quadrature cofactors");
  c_hadamard->add_option("--arity", arity);
  c_hadamard->add_option("--x", x_text, "comma separated coordinates");
  c_hadamard->add_option("--y", y_text, "comma separated coordinates");
  c_hadamard->add_option("--check", check_samples, "verify the identity on sampled pairs");
  c_hadamard->add_option("--box", box);

  auto* c_member = app.add_subcommand("member", "ideal membership verdict");
  c_member->add_option("--ideal", ideal_text, "generator list, e.g. \"((* x x) y)\"")->required();
  c_member->add_option("--elem", elem_text)->required();
  c_member->add_option("--session", session_path);
  c_member->add_option("--ring", ring_name, "ambient ring from the session");

  auto* c_quotient = app.add_subcommand("quotient", "quotient presentation");
  c_quotient->add_option("--session", session_path);
  c_quotient->add_option("--ring", ring_name);
  c_quotient->add_option("--gens", gens_text, "free ambient ring, comma separated names");
  c_quotient->add_option("--ideal", ideal_text)->required();
  c_quotient->add_option("--name", result_name);

  auto* c_coprod = app.add_subcommand("coprod", "coproduct of two presentations");
  c_coprod->add_option("--session", session_path);
  c_coprod->add_option("--left", left);
  c_coprod->add_option("--right", right);
  c_coprod->add_option("--free-left", free_left);
  c_coprod->add_option("--free-right", free_right);
  c_coprod->add_option("--name", result_name);

  auto* c_adjoin = app.add_subcommand("adjoin", "adjoin polynomial variables");
  c_adjoin->add_option("--session", session_path);
  c_adjoin->add_option("--ring", ring_name);
  c_adjoin->add_option("--gens", gens_text);
  c_adjoin->add_option("--names", names_text)->required();
  c_adjoin->add_option("--name", result_name);

  auto* c_hom_check = app.add_subcommand("hom-check", "relation preservation status");
  c_hom_check->add_option("--session", session_path)->required();
  c_hom_check->add_option("--hom", hom_name)->required();

  auto* c_ftt = app.add_subcommand("ftt", "factor a hom through a congruence quotient");
  c_ftt->add_option("--session", session_path)->required();
  c_ftt->add_option("--hom", hom_name)->required();
  c_ftt->add_option("--pairs", pairs_text, "congruence generators ((a b) ...)")->required();

  auto* c_colimit = app.add_subcommand("colimit-eq", "equality in a chain colimit");
  c_colimit->add_option("--session", session_path)->required();
  c_colimit->add_option("--chain", chain_name)->required();
  c_colimit->add_option("--left-stage", left_stage)->required();
  c_colimit->add_option("--left", term_text)->required();
  c_colimit->add_option("--right-stage", right_stage)->required();
  c_colimit->add_option("--right", elem_text)->required();

  auto* c_limit = app.add_subcommand("limit-check", "compatibility with a finite diagram");
  c_limit->add_option("--session", session_path)->required();
  c_limit->add_option("--homs", homs_text, "comma separated hom names")->required();
  c_limit->add_option("--elems", elems_text, "';' separated terms, one per object")->required();

  auto* c_verify = app.add_subcommand("verify", "run the property suites");
  c_verify->add_option("--corpus", corpus_dir);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (c_normalize->parsed()) cli.run_normalize(term_text);
    if (c_eval->parsed()) cli.run_eval(term_text, at_text);
    if (c_diff->parsed()) cli.run_diff(term_text, var_name, slot_index, arity);
    if (c_hadamard->parsed()) {
      if (exact == quad) throw Error("choose exactly one of --exact and --quad");
      cli.run_hadamard(exact, term_text, arity, x_text, y_text, check_samples, box);
    }
    if (c_member->parsed()) cli.run_member(session_path, ring_name, ideal_text, elem_text);
    if (c_quotient->parsed())
      cli.run_quotient(session_path, ring_name, gens_text, ideal_text, result_name);
    if (c_coprod->parsed())
      cli.run_coprod(session_path, left, right, free_left, free_right, result_name);
    if (c_adjoin->parsed())
      cli.run_adjoin(session_path, ring_name, gens_text, names_text, result_name);
    if (c_hom_check->parsed()) cli.run_hom_check(session_path, hom_name);
    if (c_ftt->parsed()) cli.run_ftt(session_path, hom_name, pairs_text);
    if (c_colimit->parsed())
      cli.run_colimit_eq(session_path, chain_name, left_stage, term_text, right_stage,
                         elem_text);
    if (c_limit->parsed()) cli.run_limit_check(session_path, homs_text, elems_text);
    if (c_verify->parsed()) cli.run_verify(corpus_dir);
  } catch (const CLI::CallForHelp&) {
    return CommandResult{0, app.help()};
  } catch (const CLI::ParseError& e) {
    return CommandResult{1, std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return CommandResult{1, std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return CommandResult{1, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return CommandResult{1, std::string("error: ") + e.what() + "\n"};
  }
  return CommandResult{cli.exit_code, cli.out.str()};
}

}  // namespace cinf
