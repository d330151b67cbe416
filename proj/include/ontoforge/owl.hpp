#pragma once

#include <string>
#include <vector>

#include "ontoforge/ontology.hpp"
#include "ontoforge/rdf.hpp"

namespace ontoforge::owl {

enum class Syntax { turtle, rdfxml };

struct OwlDocument {
  std::string text;
  std::string base_iri;
  Syntax syntax = Syntax::turtle;
};

/// The triples an ontology maps to, in canonical order.
std::vector<rdf::Triple> to_triples(const ontology::Ontology& ontology);

/// Serializes an ontology that validates without errors.
/// Throws Error(validation, "invalid-ontology") otherwise.
OwlDocument to_owl(const ontology::Ontology& ontology, Syntax syntax = Syntax::turtle);

struct ImportResult {
  ontology::Ontology ontology;
  std::vector<rdf::Triple> ignored;  // triples with no ontology meaning here
};

/// Inverse of to_owl. Unknown predicates are kept in `ignored`.
/// Throws Error(parse, "syntax-error") or Error(validation, "unresolvable-iri").
ImportResult from_owl(const OwlDocument& document);
/// Detects the syntax: RDF/XML if the first non-space character is '<'
/// followed by '?' or 'rdf:RDF', otherwise Turtle.
ImportResult from_owl_text(const std::string& text);

Syntax detect_syntax(const std::string& text);

}  // namespace ontoforge::owl
