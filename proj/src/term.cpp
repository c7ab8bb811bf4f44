#include "cinf/term.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cinf/sexpr.hpp"

namespace cinf {

// ---------------------------------------------------------------- primitives

namespace {

const PrimitiveSymbol kPrimitives[] = {
    {Prim::add, "+", 2, false, ""},
    {Prim::mul, "*", 2, false, ""},
    {Prim::neg, "neg", 1, false, ""},
    {Prim::recip, "recip", 1, true, "argument nonzero"},
    {Prim::sin, "sin", 1, false, ""},
    {Prim::cos, "cos", 1, false, ""},
    {Prim::exp, "exp", 1, false, ""},
    {Prim::log, "log", 1, true, "argument positive"},
    {Prim::atan, "atan", 1, false, ""},
};

}  // namespace

const PrimitiveSymbol& primitive(Prim op) { return kPrimitives[static_cast<int>(op)]; }

const PrimitiveSymbol* find_primitive(const std::string& name) {
  for (const auto& p : kPrimitives)
    if (name == p.name) return &p;
  return nullptr;
}

const std::vector<Term>& derivative_rule(Prim op) {
  // templates over the argument slots of the symbol
  static const auto* rules = [] {
    auto v1 = Term::variable(slot_name(1));
    auto v2 = Term::variable(slot_name(2));
    auto one = Term::constant(1);
    auto rec = [&](Term t) { return Term::apply(Prim::recip, {std::move(t)}); };
    auto* m = new std::map<Prim, std::vector<Term>>{
        {Prim::add, {one, one}},
        {Prim::mul, {v2, v1}},
        {Prim::neg, {Term::constant(-1)}},
        {Prim::recip, {-(rec(v1) * rec(v1))}},
        {Prim::sin, {Term::apply(Prim::cos, {v1})}},
        {Prim::cos, {-Term::apply(Prim::sin, {v1})}},
        {Prim::exp, {Term::apply(Prim::exp, {v1})}},
        {Prim::log, {rec(v1)}},
        {Prim::atan, {rec(one + v1 * v1)}},
    };
    return m;
  }();
  return rules->at(op);
}

// ----------------------------------------------------------------- term node

struct Term::Node {
  TermKind kind;
  std::string name;                     // variable
  Rational value;                       // constant
  Prim op = Prim::add;                  // apply
  std::shared_ptr<const SmoothMap> map; // defined_apply
  std::vector<Term> args;
};

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term::Term() {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::constant;
  n->value = 0;
  node_ = std::move(n);
}

Term Term::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::variable;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::constant;
  n->value = std::move(value);
  return Term(std::move(n));
}

Term Term::constant(long long value) { return constant(Rational(value)); }

Term Term::apply(Prim op, std::vector<Term> args) {
  const auto& sym = primitive(op);
  if (op != Prim::add && op != Prim::mul && static_cast<int>(args.size()) != sym.arity)
    throw ArityMismatch(std::string(sym.name) + " expects " + std::to_string(sym.arity) +
                        " arguments, got " + std::to_string(args.size()));
  auto n = std::make_shared<Node>();
  n->kind = TermKind::apply;
  n->op = op;
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::defined_apply(const SmoothMap& map, std::vector<Term> args) {
  if (static_cast<int>(args.size()) != map.arity())
    throw ArityMismatch("map of arity " + std::to_string(map.arity()) + " applied to " +
                        std::to_string(args.size()) + " arguments");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::defined_apply;
  n->map = std::make_shared<SmoothMap>(map);
  n->args = std::move(args);
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Rational& Term::value() const { return node_->value; }
Prim Term::op() const { return node_->op; }
const SmoothMap& Term::map() const { return *node_->map; }
const std::vector<Term>& Term::args() const { return node_->args; }

bool Term::is_constant(const Rational& v) const {
  return node_->kind == TermKind::constant && node_->value == v;
}
bool Term::is_zero() const { return is_constant(0); }
bool Term::is_one() const { return is_constant(1); }

Term operator+(const Term& a, const Term& b) { return Term::apply(Prim::add, {a, b}); }
Term operator*(const Term& a, const Term& b) { return Term::apply(Prim::mul, {a, b}); }
Term operator-(const Term& a) { return Term::apply(Prim::neg, {a}); }
Term operator-(const Term& a, const Term& b) { return a + (-b); }

// ---------------------------------------------------------------- comparison

int compare(const Term& a, const Term& b) {
  auto rank = [](TermKind k) {
    switch (k) {
      case TermKind::constant: return 0;
      case TermKind::variable: return 1;
      case TermKind::apply: return 2;
      case TermKind::defined_apply: return 3;
    }
    return 4;
  };
  if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case TermKind::constant: {
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    }
    case TermKind::variable: {
      int c = a.name().compare(b.name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case TermKind::apply: {
      int c = std::string(primitive(a.op()).name).compare(primitive(b.op()).name);
      if (c != 0) return c < 0 ? -1 : 1;
      break;
    }
    case TermKind::defined_apply: {
      if (a.map().arity() != b.map().arity()) return a.map().arity() < b.map().arity() ? -1 : 1;
      int c = compare(a.map().body(), b.map().body());
      if (c != 0) return c;
      break;
    }
  }
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    int c = compare(a.args()[i], b.args()[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool equal(const Term& a, const Term& b) { return compare(a, b) == 0; }

// -------------------------------------------------------------- normalization
//
// Normal form: a sum of monomials over "atoms". An atom is a variable or an
// application of a non-arithmetic primitive to normalized arguments. Sums and
// products are expanded and like monomials collected, so every polynomial
// identity closes to the literal zero term.

namespace {

// sorted (atom, exponent) pairs
using PowerProduct = std::vector<std::pair<Term, int>>;

struct PowerProductLess {
  bool operator()(const PowerProduct& a, const PowerProduct& b) const {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare(a[i].first, b[i].first);
      if (c != 0) return c < 0;
      if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
  }
};

struct Poly {
  std::map<PowerProduct, Rational, PowerProductLess> terms;

  static Poly constant(Rational c) {
    Poly p;
    if (c != 0) p.terms[{}] = std::move(c);
    return p;
  }

  static Poly atom(Term t) {
    Poly p;
    p.terms[{{std::move(t), 1}}] = 1;
    return p;
  }

  void add_term(const PowerProduct& pp, const Rational& c) {
    auto [it, fresh] = terms.emplace(pp, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  const Rational* as_constant() const {
    if (terms.empty()) {
      static const Rational zero(0);
      return &zero;
    }
    if (terms.size() == 1 && terms.begin()->first.empty()) return &terms.begin()->second;
    return nullptr;
  }
};

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [pp, c] : b.terms) out.add_term(pp, c);
  return out;
}

PowerProduct merge_pp(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back(b[j++]);
    } else {
      int c = compare(a[i].first, b[j].first);
      if (c < 0)
        out.push_back(a[i++]);
      else if (c > 0)
        out.push_back(b[j++]);
      else {
        out.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i, ++j;
      }
    }
  }
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms) out.add_term(merge_pp(pa, pb), ca * cb);
  return out;
}

Poly negate(const Poly& a) {
  Poly out;
  for (const auto& [pp, c] : a.terms) out.terms[pp] = -c;
  return out;
}

Term from_poly(const Poly& p);
Poly to_poly(const Term& t);

Term monomial_term(const PowerProduct& pp, const Rational& c) {
  std::vector<Term> factors;
  if (c != 1 || pp.empty()) factors.push_back(Term::constant(c));
  for (const auto& [atom, exp] : pp)
    for (int k = 0; k < exp; ++k) factors.push_back(atom);
  if (factors.size() == 1) return factors.front();
  return Term::apply(Prim::mul, std::move(factors));
}

Term from_poly(const Poly& p) {
  if (p.terms.empty()) return Term::constant(0);
  std::vector<Term> monomials;
  monomials.reserve(p.terms.size());
  for (const auto& [pp, c] : p.terms) monomials.push_back(monomial_term(pp, c));
  if (monomials.size() == 1) return monomials.front();
  std::sort(monomials.begin(), monomials.end(), TermLess{});
  return Term::apply(Prim::add, std::move(monomials));
}

// exact rational closed forms of unary primitives at distinguished points
const Rational* fold_unary(Prim op, const Term& arg) {
  static const Rational zero(0), one(1);
  if (arg.kind() != TermKind::constant) return nullptr;
  const Rational& v = arg.value();
  switch (op) {
    case Prim::sin:
    case Prim::atan:
      if (v == 0) return &zero;
      return nullptr;
    case Prim::cos:
    case Prim::exp:
      if (v == 0) return &one;
      return nullptr;
    case Prim::log:
      if (v == 1) return &zero;
      return nullptr;
    default:
      return nullptr;
  }
}

Poly to_poly(const Term& t) {
  switch (t.kind()) {
    case TermKind::constant:
      return Poly::constant(t.value());
    case TermKind::variable:
      return Poly::atom(t);
    case TermKind::apply: {
      switch (t.op()) {
        case Prim::add: {
          Poly out;
          for (const auto& a : t.args()) out = out + to_poly(a);
          return out;
        }
        case Prim::mul: {
          Poly out = Poly::constant(1);
          for (const auto& a : t.args()) out = out * to_poly(a);
          return out;
        }
        case Prim::neg:
          return negate(to_poly(t.args()[0]));
        case Prim::recip: {
          Term arg = from_poly(to_poly(t.args()[0]));
          if (arg.kind() == TermKind::constant && arg.value() != 0)
            return Poly::constant(Rational(1) / arg.value());
          return Poly::atom(Term::apply(Prim::recip, {std::move(arg)}));
        }
        default: {
          Term arg = from_poly(to_poly(t.args()[0]));
          if (const Rational* folded = fold_unary(t.op(), arg)) return Poly::constant(*folded);
          return Poly::atom(Term::apply(t.op(), {std::move(arg)}));
        }
      }
    }
    case TermKind::defined_apply: {
      // axiom E2: flatten the composite through the defined symbol's body
      std::map<std::string, Term> binding;
      for (int i = 0; i < t.map().arity(); ++i) binding[slot_name(i + 1)] = t.args()[i];
      return to_poly(substitute(t.map().body(), binding));
    }
  }
  return Poly();
}

}  // namespace

Term normalize(const Term& t) { return from_poly(to_poly(t)); }

Term substitute(const Term& t, const std::map<std::string, Term>& binding) {
  switch (t.kind()) {
    case TermKind::constant:
      return t;
    case TermKind::variable: {
      auto it = binding.find(t.name());
      return it == binding.end() ? t : it->second;
    }
    case TermKind::apply: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, binding));
      return Term::apply(t.op(), std::move(args));
    }
    case TermKind::defined_apply: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, binding));
      return Term::defined_apply(t.map(), std::move(args));
    }
  }
  return t;
}

std::set<std::string> variables(const Term& t) {
  // free occurrences: a defined symbol's body slots are bound by its arguments
  std::set<std::string> out;
  struct Walk {
    std::set<std::string>& out;
    void operator()(const Term& u) {
      if (u.kind() == TermKind::variable) {
        out.insert(u.name());
        return;
      }
      for (const auto& a : u.args()) (*this)(a);
    }
  };
  Walk{out}(t);
  return out;
}

std::set<std::string> free_support(const Term& t) { return variables(normalize(t)); }

bool is_polynomial(const Term& t) {
  switch (t.kind()) {
    case TermKind::constant:
    case TermKind::variable:
      return true;
    case TermKind::apply:
      if (t.op() != Prim::add && t.op() != Prim::mul && t.op() != Prim::neg) return false;
      break;
    case TermKind::defined_apply:
      if (!is_polynomial(t.map().body())) return false;
      break;
  }
  for (const auto& a : t.args())
    if (!is_polynomial(a)) return false;
  return true;
}

bool has_partial_primitive(const Term& t) {
  if (t.kind() == TermKind::apply && primitive(t.op()).partial) return true;
  if (t.kind() == TermKind::defined_apply && has_partial_primitive(t.map().body())) return true;
  for (const auto& a : t.args())
    if (has_partial_primitive(a)) return true;
  return false;
}

// ---------------------------------------------------------------- evaluation

RealPoint RealPoint::slots(const std::vector<double>& xs) {
  RealPoint p;
  for (std::size_t i = 0; i < xs.size(); ++i) p.coords[slot_name(static_cast<int>(i) + 1)] = xs[i];
  return p;
}

double RealPoint::at(const std::string& name) const {
  auto it = coords.find(name);
  if (it == coords.end()) throw UnboundVariable("no value assigned to variable " + name);
  return it->second;
}

double evaluate(const Term& t, const RealPoint& p) {
  switch (t.kind()) {
    case TermKind::constant:
      return to_double(t.value());
    case TermKind::variable:
      return p.at(t.name());
    case TermKind::apply: {
      switch (t.op()) {
        case Prim::add: {
          double s = 0;
          for (const auto& a : t.args()) s += evaluate(a, p);
          return s;
        }
        case Prim::mul: {
          double s = 1;
          for (const auto& a : t.args()) s *= evaluate(a, p);
          return s;
        }
        case Prim::neg:
          return -evaluate(t.args()[0], p);
        case Prim::recip: {
          double x = evaluate(t.args()[0], p);
          if (x == 0.0) throw DomainError("recip of zero");
          return 1.0 / x;
        }
        case Prim::sin:
          return std::sin(evaluate(t.args()[0], p));
        case Prim::cos:
          return std::cos(evaluate(t.args()[0], p));
        case Prim::exp:
          return std::exp(evaluate(t.args()[0], p));
        case Prim::log: {
          double x = evaluate(t.args()[0], p);
          if (x <= 0.0) throw DomainError("log of nonpositive value");
          return std::log(x);
        }
        case Prim::atan:
          return std::atan(evaluate(t.args()[0], p));
      }
      break;
    }
    case TermKind::defined_apply: {
      std::vector<double> xs;
      xs.reserve(t.args().size());
      for (const auto& a : t.args()) xs.push_back(evaluate(a, p));
      return evaluate(t.map(), xs);
    }
  }
  throw Error("unreachable term kind");
}

// ---------------------------------------------------------------- smooth map

std::string slot_name(int i) { return "v" + std::to_string(i); }
Term slot(int i) { return Term::variable(slot_name(i)); }

SmoothMap::SmoothMap() : arity_(0), body_(Term::constant(0)) {}

SmoothMap::SmoothMap(int arity, const Term& body) : arity_(arity), body_(normalize(body)) {
  if (arity < 0) throw ArityMismatch("negative arity");
  std::set<std::string> allowed;
  for (int i = 1; i <= arity; ++i) allowed.insert(slot_name(i));
  for (const auto& v : variables(body_))
    if (!allowed.count(v))
      throw UnboundVariable("variable " + v + " outside slots v1..v" + std::to_string(arity));
}

bool SmoothMap::is_polynomial() const { return cinf::is_polynomial(body_); }
bool SmoothMap::is_partial() const { return has_partial_primitive(body_); }

SmoothMap SmoothMap::projection(int arity, int k) {
  if (k < 1 || k > arity) throw ArityMismatch("projection index out of range");
  return SmoothMap(arity, slot(k));
}

SmoothMap SmoothMap::constant(int arity, Rational c) {
  return SmoothMap(arity, Term::constant(std::move(c)));
}

SmoothMap SmoothMap::widen(int arity) const {
  if (arity < arity_) {
    // allowed when the extra slots are absent from the body
    return SmoothMap(arity, body_);
  }
  SmoothMap out;
  out.arity_ = arity;
  out.body_ = body_;
  return out;
}

int compare(const SmoothMap& a, const SmoothMap& b) {
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  return compare(a.body(), b.body());
}

bool equal(const SmoothMap& a, const SmoothMap& b) { return compare(a, b) == 0; }

namespace {
int common_arity(const SmoothMap& a, const SmoothMap& b) {
  return std::max(a.arity(), b.arity());
}
}  // namespace

SmoothMap operator+(const SmoothMap& a, const SmoothMap& b) {
  return SmoothMap(common_arity(a, b), a.body() + b.body());
}
SmoothMap operator*(const SmoothMap& a, const SmoothMap& b) {
  return SmoothMap(common_arity(a, b), a.body() * b.body());
}
SmoothMap operator-(const SmoothMap& a) { return SmoothMap(a.arity(), -a.body()); }
SmoothMap operator-(const SmoothMap& a, const SmoothMap& b) {
  return SmoothMap(common_arity(a, b), a.body() - b.body());
}

double evaluate(const SmoothMap& f, const std::vector<double>& xs) {
  if (static_cast<int>(xs.size()) < f.arity())
    throw ArityMismatch("point has " + std::to_string(xs.size()) + " coordinates, map needs " +
                        std::to_string(f.arity()));
  return evaluate(f.body(), RealPoint::slots(xs));
}

double evaluate(const SmoothMap& f, const RealPoint& p) { return evaluate(f.body(), p); }

SmoothMap compose(const SmoothMap& f, const std::vector<SmoothMap>& gs) {
  if (static_cast<int>(gs.size()) != f.arity())
    throw ArityMismatch("composing arity-" + std::to_string(f.arity()) + " map with " +
                        std::to_string(gs.size()) + " inner maps");
  int m = 0;
  for (const auto& g : gs) m = std::max(m, g.arity());
  std::map<std::string, Term> binding;
  for (std::size_t i = 0; i < gs.size(); ++i) binding[slot_name(static_cast<int>(i) + 1)] = gs[i].body();
  return SmoothMap(m, substitute(f.body(), binding));
}

namespace {

Term diff_term(const Term& t, const std::string& var) {
  switch (t.kind()) {
    case TermKind::constant:
      return Term::constant(0);
    case TermKind::variable:
      return Term::constant(t.name() == var ? 1 : 0);
    case TermKind::apply: {
      switch (t.op()) {
        case Prim::add: {
          std::vector<Term> parts;
          for (const auto& a : t.args()) parts.push_back(diff_term(a, var));
          return Term::apply(Prim::add, std::move(parts));
        }
        case Prim::mul: {
          std::vector<Term> parts;
          for (std::size_t i = 0; i < t.args().size(); ++i) {
            std::vector<Term> factors;
            for (std::size_t j = 0; j < t.args().size(); ++j)
              factors.push_back(i == j ? diff_term(t.args()[j], var) : t.args()[j]);
            parts.push_back(Term::apply(Prim::mul, std::move(factors)));
          }
          return Term::apply(Prim::add, std::move(parts));
        }
        case Prim::neg:
          return -diff_term(t.args()[0], var);
        default: {
          // chain rule through the primitive's derivative template
          const Term& rule = derivative_rule(t.op())[0];
          Term outer = substitute(rule, {{slot_name(1), t.args()[0]}});
          return outer * diff_term(t.args()[0], var);
        }
      }
    }
    case TermKind::defined_apply: {
      std::vector<Term> parts;
      std::map<std::string, Term> binding;
      for (std::size_t i = 0; i < t.args().size(); ++i)
        binding[slot_name(static_cast<int>(i) + 1)] = t.args()[i];
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        Term partial = diff_term(t.map().body(), slot_name(static_cast<int>(i) + 1));
        parts.push_back(substitute(partial, binding) * diff_term(t.args()[i], var));
      }
      if (parts.empty()) return Term::constant(0);
      return Term::apply(Prim::add, std::move(parts));
    }
  }
  return Term::constant(0);
}

}  // namespace

SmoothMap differentiate(const SmoothMap& f, int slot_index) {
  if (slot_index < 1 || slot_index > f.arity())
    throw ArityMismatch("slot index " + std::to_string(slot_index) + " out of range for arity " +
                        std::to_string(f.arity()));
  return SmoothMap(f.arity(), diff_term(f.body(), slot_name(slot_index)));
}

// ------------------------------------------------------------------ printing

std::string print_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::constant:
      return rational_to_string(t.value());
    case TermKind::variable:
      return t.name();
    case TermKind::apply: {
      std::string out = "(";
      out += primitive(t.op()).name;
      for (const auto& a : t.args()) {
        out += ' ';
        out += print_term(a);
      }
      out += ')';
      return out;
    }
    case TermKind::defined_apply: {
      std::string out = "(defined[";
      out += print_term(t.map().body());
      out += ']';
      for (const auto& a : t.args()) {
        out += ' ';
        out += print_term(a);
      }
      out += ')';
      return out;
    }
  }
  return "?";
}

// ------------------------------------------------------------------- parsing

Term term_from_sexpr(const Sexpr& node) {
  if (node.is_atom) {
    if (auto q = parse_rational(node.atom)) return Term::constant(std::move(*q));
    if (is_identifier(node.atom)) {
      if (find_primitive(node.atom))
        throw SyntaxError(node.line, node.column,
                          "primitive '" + node.atom + "' used as a variable");
      return Term::variable(node.atom);
    }
    throw SyntaxError(node.line, node.column, "malformed atom '" + node.atom + "'");
  }
  if (node.items.empty()) throw SyntaxError(node.line, node.column, "empty application");
  const Sexpr& head = node.items.front();
  if (!head.is_atom)
    throw SyntaxError(head.line, head.column, "application head must be a symbol");
  const PrimitiveSymbol* sym = find_primitive(head.atom);
  if (!sym) throw UnknownSymbol(head.line, head.column, "unknown symbol '" + head.atom + "'");
  std::vector<Term> args;
  for (std::size_t i = 1; i < node.items.size(); ++i) args.push_back(term_from_sexpr(node.items[i]));
  if (sym->op != Prim::add && sym->op != Prim::mul &&
      static_cast<int>(args.size()) != sym->arity)
    throw ArityError(node.line, node.column,
                     std::string(sym->name) + " expects " + std::to_string(sym->arity) +
                         " arguments, got " + std::to_string(args.size()));
  // n-ary sums/products in the surface syntax
  if (sym->op == Prim::add && args.empty()) return Term::constant(0);
  if (sym->op == Prim::mul && args.empty()) return Term::constant(1);
  if ((sym->op == Prim::add || sym->op == Prim::mul) && args.size() == 1) return args.front();
  return Term::apply(sym->op, std::move(args));
}

Term parse_term(const std::string& text) { return term_from_sexpr(parse_sexpr(text)); }

// -------------------------------------------------------- name/slot bridging

SmoothMap map_from_named_term(const Term& t, const std::vector<std::string>& names) {
  std::map<std::string, Term> binding;
  for (std::size_t i = 0; i < names.size(); ++i)
    binding[names[i]] = slot(static_cast<int>(i) + 1);
  for (const auto& v : variables(t))
    if (!binding.count(v)) throw UnboundVariable("variable " + v + " is not a generator");
  return SmoothMap(static_cast<int>(names.size()), substitute(t, binding));
}

Term named_term_from_map(const SmoothMap& m, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) < m.arity())
    throw ArityMismatch("not enough names for arity " + std::to_string(m.arity()));
  std::map<std::string, Term> binding;
  for (std::size_t i = 0; i < names.size(); ++i)
    binding[slot_name(static_cast<int>(i) + 1)] = Term::variable(names[i]);
  return normalize(substitute(m.body(), binding));
}

}  // namespace cinf
