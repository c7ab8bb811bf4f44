#pragma once

#include <map>
#include <string>
#include <vector>

#include "cinf/constructions.hpp"
#include "cinf/ring.hpp"

namespace cinf {

// A .cinf document: named rings, elements, homs and chains.
//   document := def*
//   def := "(ring" NAME "(gens" IDENT* ")" "(rels" term* "))"
//        | "(hom" NAME NAME NAME "(images" term* "))"
//        | "(elem" NAME ringname term ")"
//        | "(chain" NAME (NAME homname)* ")"
// In a chain, each hom maps the ring it is paired with to the next pair's
// ring; the final object is the last hom's declared target.
struct Session {
  struct HomEntry {
    std::string source_name, target_name;
    Homomorphism hom;
  };
  struct ChainEntry {
    std::vector<std::string> ring_names;  // one per pair
    std::vector<std::string> hom_names;   // one per pair
  };

  std::map<std::string, RingPtr> rings;
  std::map<std::string, RingElement> elements;
  std::map<std::string, HomEntry> homs;
  std::map<std::string, ChainEntry> chains;
};

Session parse_session(const std::string& text);

// canonical: definitions sorted by kind then name, terms normalized
std::string print_session(const Session& s);

// materialize a named chain as a directed diagram (objects in chain order)
DirectedDiagram chain_diagram(const Session& s, const std::string& chain_name);
std::vector<RingPtr> chain_objects(const Session& s, const Session::ChainEntry& chain);

}  // namespace cinf
