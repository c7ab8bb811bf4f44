#include "cinf/session.hpp"

#include <algorithm>
#include <sstream>

#include "cinf/sexpr.hpp"

namespace cinf {

namespace {

const std::string& expect_name(const Sexpr& node, const char* what) {
  if (!node.is_atom || !is_identifier(node.atom))
    throw SyntaxError(node.line, node.column, std::string("expected ") + what);
  return node.atom;
}

const Sexpr& expect_list(const Sexpr& node, const std::string& head) {
  if (node.is_atom || node.items.empty() || !node.items.front().is_atom ||
      node.items.front().atom != head)
    throw SyntaxError(node.line, node.column, "expected (" + head + " ...)");
  return node;
}

// a term over a ring's generators, with parse locations on failure
SmoothMap named_map(const Sexpr& node, const RingPtr& ring) {
  Term t = term_from_sexpr(node);
  try {
    return map_from_named_term(t, ring->generator_names);
  } catch (const UnboundVariable& e) {
    throw UnknownSymbol(node.line, node.column, e.what());
  }
}

void parse_ring_def(Session& session, const Sexpr& def) {
  if (def.items.size() != 4)
    throw SyntaxError(def.line, def.column, "ring definition needs a name, gens and rels");
  std::string name = expect_name(def.items[1], "ring name");
  if (session.rings.count(name))
    throw SyntaxError(def.items[1].line, def.items[1].column, "ring " + name + " redefined");
  const Sexpr& gens = expect_list(def.items[2], "gens");
  const Sexpr& rels = expect_list(def.items[3], "rels");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < gens.items.size(); ++i) {
    const std::string& g = expect_name(gens.items[i], "generator name");
    if (find_primitive(g))
      throw SyntaxError(gens.items[i].line, gens.items[i].column,
                        "generator shadows primitive " + g);
    if (!seen.insert(g).second)
      throw SyntaxError(gens.items[i].line, gens.items[i].column, "duplicate generator " + g);
    names.push_back(g);
  }
  RingPtr shell = free_ring(names);
  std::vector<SmoothMap> relation_maps;
  for (std::size_t i = 1; i < rels.items.size(); ++i)
    relation_maps.push_back(named_map(rels.items[i], shell));
  session.rings.emplace(
      name, make_ring(names, Ideal::make(static_cast<int>(names.size()),
                                         std::move(relation_maps))));
}

const RingPtr& lookup_ring(const Session& session, const Sexpr& node) {
  const std::string& name = expect_name(node, "ring name");
  auto it = session.rings.find(name);
  if (it == session.rings.end())
    throw UnknownSymbol(node.line, node.column, "ring " + name + " is not defined");
  return it->second;
}

void parse_elem_def(Session& session, const Sexpr& def) {
  if (def.items.size() != 4)
    throw SyntaxError(def.line, def.column, "elem definition needs a name, a ring and a term");
  std::string name = expect_name(def.items[1], "element name");
  if (session.elements.count(name))
    throw SyntaxError(def.items[1].line, def.items[1].column, "element " + name + " redefined");
  const RingPtr& ring = lookup_ring(session, def.items[2]);
  session.elements.emplace(name, element(ring, named_map(def.items[3], ring)));
}

void parse_hom_def(Session& session, const Sexpr& def) {
  if (def.items.size() != 5)
    throw SyntaxError(def.line, def.column,
                      "hom definition needs a name, two rings and an images list");
  std::string name = expect_name(def.items[1], "hom name");
  if (session.homs.count(name))
    throw SyntaxError(def.items[1].line, def.items[1].column, "hom " + name + " redefined");
  const RingPtr& source = lookup_ring(session, def.items[2]);
  const RingPtr& target = lookup_ring(session, def.items[3]);
  const Sexpr& images = expect_list(def.items[4], "images");
  if (static_cast<int>(images.items.size()) - 1 != source->arity())
    throw ArityError(images.line, images.column,
                     "expected " + std::to_string(source->arity()) + " images, got " +
                         std::to_string(images.items.size() - 1));
  std::vector<RingElement> image_elements;
  for (std::size_t i = 1; i < images.items.size(); ++i)
    image_elements.push_back(element(target, named_map(images.items[i], target)));
  Session::HomEntry entry;
  entry.source_name = def.items[2].atom;
  entry.target_name = def.items[3].atom;
  entry.hom = make_hom(source, target, std::move(image_elements));
  session.homs.emplace(name, std::move(entry));
}

void parse_chain_def(Session& session, const Sexpr& def) {
  if (def.items.size() < 4 || def.items.size() % 2 != 0)
    throw SyntaxError(def.line, def.column,
                      "chain definition needs a name and (ring hom) pairs");
  std::string name = expect_name(def.items[1], "chain name");
  if (session.chains.count(name))
    throw SyntaxError(def.items[1].line, def.items[1].column, "chain " + name + " redefined");
  Session::ChainEntry chain;
  for (std::size_t i = 2; i + 1 < def.items.size(); i += 2) {
    const std::string& ring_name = expect_name(def.items[i], "ring name");
    const std::string& hom_name = expect_name(def.items[i + 1], "hom name");
    if (!session.rings.count(ring_name))
      throw UnknownSymbol(def.items[i].line, def.items[i].column,
                          "ring " + ring_name + " is not defined");
    auto hom_it = session.homs.find(hom_name);
    if (hom_it == session.homs.end())
      throw UnknownSymbol(def.items[i + 1].line, def.items[i + 1].column,
                          "hom " + hom_name + " is not defined");
    if (hom_it->second.source_name != ring_name)
      throw SyntaxError(def.items[i + 1].line, def.items[i + 1].column,
                        "hom " + hom_name + " does not start at " + ring_name);
    if (!chain.hom_names.empty()) {
      const auto& previous = session.homs.at(chain.hom_names.back());
      if (previous.target_name != ring_name)
        throw SyntaxError(def.items[i].line, def.items[i].column,
                          "chain breaks: previous hom targets " + previous.target_name);
    }
    chain.ring_names.push_back(ring_name);
    chain.hom_names.push_back(hom_name);
  }
  session.chains.emplace(name, std::move(chain));
}

}  // namespace

Session parse_session(const std::string& text) {
  Session session;
  for (const Sexpr& def : parse_sexpr_document(text)) {
    if (def.is_atom || def.items.empty() || !def.items.front().is_atom)
      throw SyntaxError(def.line, def.column, "expected a definition list");
    const std::string& head = def.items.front().atom;
    if (head == "ring")
      parse_ring_def(session, def);
    else if (head == "elem")
      parse_elem_def(session, def);
    else if (head == "hom")
      parse_hom_def(session, def);
    else if (head == "chain")
      parse_chain_def(session, def);
    else
      throw UnknownSymbol(def.items.front().line, def.items.front().column,
                          "unknown definition head '" + head + "'");
  }
  return session;
}

std::string print_session(const Session& s) {
  std::ostringstream out;
  out << "; cinf session 1\n";
  for (const auto& [name, ring] : s.rings) out << print_ring(*ring, name) << "\n";
  for (const auto& [name, elem] : s.elements) {
    std::string ring_name;
    for (const auto& [rn, ring] : s.rings)
      if (same_presentation(ring, elem.ring)) {
        ring_name = rn;
        break;
      }
    out << "(elem " << name << " " << ring_name << " "
        << print_term(named_term_from_map(elem.rep, elem.ring->generator_names)) << ")\n";
  }
  for (const auto& [name, entry] : s.homs) {
    out << "(hom " << name << " " << entry.source_name << " " << entry.target_name
        << " (images";
    for (const auto& img : entry.hom.images)
      out << " " << print_term(named_term_from_map(img.rep, entry.hom.target->generator_names));
    out << "))\n";
  }
  for (const auto& [name, chain] : s.chains) {
    out << "(chain " << name;
    for (std::size_t i = 0; i < chain.ring_names.size(); ++i)
      out << " " << chain.ring_names[i] << " " << chain.hom_names[i];
    out << ")\n";
  }
  return out.str();
}

std::vector<RingPtr> chain_objects(const Session& s, const Session::ChainEntry& chain) {
  std::vector<RingPtr> objects;
  for (const auto& rn : chain.ring_names) objects.push_back(s.rings.at(rn));
  objects.push_back(s.homs.at(chain.hom_names.back()).hom.target);
  return objects;
}

DirectedDiagram chain_diagram(const Session& s, const std::string& chain_name) {
  auto it = s.chains.find(chain_name);
  if (it == s.chains.end()) throw UnknownSymbol(0, 0, "chain " + chain_name + " is not defined");
  std::vector<Homomorphism> steps;
  for (const auto& hn : it->second.hom_names) steps.push_back(s.homs.at(hn).hom);
  return DirectedDiagram::chain(chain_objects(s, it->second), std::move(steps));
}

}  // namespace cinf
