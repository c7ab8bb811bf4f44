#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cinf/errors.hpp"
#include "cinf/rational.hpp"

namespace cinf {

// The smooth signature is the term-definable closure of a fixed recursive
// primitive set; rational constants are the 0-ary symbols. Projections are
// not symbols: a projection is a slot variable after normalization.
enum class Prim { add, mul, neg, recip, sin, cos, exp, log, atan };

class Term;

struct PrimitiveSymbol {
  Prim op;
  const char* name;
  int arity;  // add/mul are the binary symbols; terms store them flattened n-ary
  bool partial;
  const char* domain;  // definedness predicate, empty when total
};

const PrimitiveSymbol& primitive(Prim op);
const PrimitiveSymbol* find_primitive(const std::string& name);

// Symbolic partial derivative of a primitive w.r.t. each argument, as a term
// template over the argument slots v1..v_arity.
const std::vector<Term>& derivative_rule(Prim op);

enum class TermKind { constant, variable, apply, defined_apply };

class SmoothMap;

// Immutable syntax tree over the smooth signature. Cheap to copy (shared
// nodes); all operations on terms are pure.
class Term {
 public:
  Term();  // Const 0

  static Term variable(std::string name);
  static Term constant(Rational value);
  static Term constant(long long value);
  static Term apply(Prim op, std::vector<Term> args);
  static Term defined_apply(const SmoothMap& map, std::vector<Term> args);

  TermKind kind() const;
  const std::string& name() const;       // variable
  const Rational& value() const;         // constant
  Prim op() const;                       // apply
  const SmoothMap& map() const;          // defined_apply
  const std::vector<Term>& args() const; // apply / defined_apply

  bool is_constant(const Rational& v) const;
  bool is_zero() const;
  bool is_one() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// raw builders (no normalization)
Term operator+(const Term& a, const Term& b);
Term operator*(const Term& a, const Term& b);
Term operator-(const Term& a);
Term operator-(const Term& a, const Term& b);

// Fixed total order on terms: (node kind, symbol name, recursive comparison).
// Backbone of canonical forms and of every sorted container of terms.
int compare(const Term& a, const Term& b);
bool equal(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

// Canonical form: DefApp substituted away (E2), projections resolved (E1),
// constants folded, sums/products expanded and collected with flat sorted
// arguments. Idempotent; equality of normal forms is the term equality used
// everywhere downstream.
Term normalize(const Term& t);

// simultaneous substitution
Term substitute(const Term& t, const std::map<std::string, Term>& binding);

std::set<std::string> free_support(const Term& t);  // variables of normalize(t)
std::set<std::string> variables(const Term& t);     // raw syntactic occurrence

bool is_polynomial(const Term& t);          // add/mul/neg/constants/variables only
bool has_partial_primitive(const Term& t);  // mentions recip or log

struct RealPoint {
  std::map<std::string, double> coords;

  RealPoint() = default;
  explicit RealPoint(std::map<std::string, double> c) : coords(std::move(c)) {}
  static RealPoint slots(const std::vector<double>& xs);  // v1..vn

  double at(const std::string& name) const;
};

double evaluate(const Term& t, const RealPoint& p);

std::string slot_name(int i);  // 1-based: "v1", "v2", ...
Term slot(int i);

// An element of C^inf(R^n): arity plus a normalized body over slots v1..vn.
// Doubles as an n-ary function symbol.
class SmoothMap {
 public:
  SmoothMap();  // arity 0, constant 0
  SmoothMap(int arity, const Term& body);  // normalizes; support must fit the slots

  int arity() const { return arity_; }
  const Term& body() const { return body_; }

  bool is_polynomial() const;
  bool is_partial() const;
  bool is_zero() const { return body_.is_zero(); }

  static SmoothMap projection(int arity, int slot);  // p_slot, 1-based
  static SmoothMap constant(int arity, Rational c);

  // same body viewed in a larger slot count
  SmoothMap widen(int arity) const;

 private:
  int arity_;
  Term body_;
};

int compare(const SmoothMap& a, const SmoothMap& b);
bool equal(const SmoothMap& a, const SmoothMap& b);

SmoothMap operator+(const SmoothMap& a, const SmoothMap& b);
SmoothMap operator*(const SmoothMap& a, const SmoothMap& b);
SmoothMap operator-(const SmoothMap& a);
SmoothMap operator-(const SmoothMap& a, const SmoothMap& b);

double evaluate(const SmoothMap& f, const std::vector<double>& xs);
double evaluate(const SmoothMap& f, const RealPoint& p);

// f of arity n applied to n maps of common arity m; E2 realized by
// substitution plus normalization.
SmoothMap compose(const SmoothMap& f, const std::vector<SmoothMap>& gs);

// exact symbolic partial derivative w.r.t. slot i (1-based), normalized
SmoothMap differentiate(const SmoothMap& f, int slot);

// S-expression printing over the shared grammar; canonical whenever the term
// is normalized.
std::string print_term(const Term& t);

// Parses the grammar term := IDENT | RATIONAL | "(" PRIM term* ")".
// Throws SyntaxError / UnknownSymbol / ArityError with source locations.
Term parse_term(const std::string& text);
struct Sexpr;
Term term_from_sexpr(const Sexpr& node);

// name/slot translation for terms living over named generators
SmoothMap map_from_named_term(const Term& t, const std::vector<std::string>& names);
Term named_term_from_map(const SmoothMap& m, const std::vector<std::string>& names);

}  // namespace cinf
