#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge::rdf {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

struct Term {
  enum class Type { iri, blank, literal };
  Type type = Type::iri;
  std::string value;     // IRI, blank label, or lexical form
  std::string datatype;  // literals only; empty for plain strings
  std::string lang;

  static Term iri(std::string v) { return {Type::iri, std::move(v), {}, {}}; }
  static Term blank(std::string v) { return {Type::blank, std::move(v), {}, {}}; }
  static Term literal(std::string v, std::string datatype = {}, std::string lang = {}) {
    return {Type::literal, std::move(v), std::move(datatype), std::move(lang)};
  }

  bool is_iri() const { return type == Type::iri; }
  bool is_literal() const { return type == Type::literal; }
  /// N-Triples form; also the canonical sort key.
  std::string ntriples() const;

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

/// Sorts by the N-Triples forms of (subject, predicate, object) and drops duplicates.
void canonical_sort(std::vector<Triple>& triples);

/// Terse syntax with rdf/rdfs/owl/xsd prefixes, subjects grouped with ';'.
/// Triples are written in the order given.
std::string write_turtle(const std::vector<Triple>& triples, const std::map<std::string, std::string>& prefixes);

/// Parses the Turtle subset used for ontologies: prefixes, base, 'a',
/// ';' and ',' lists, blank node property lists, string/numeric/boolean
/// literals with language tags or datatypes. Collections are rejected.
/// Throws Error(parse, "syntax-error") with line and column.
std::vector<Triple> parse_turtle(std::string_view text);

/// RDF/XML with one rdf:Description per subject.
std::string write_rdfxml(const std::vector<Triple>& triples, const std::map<std::string, std::string>& prefixes);

/// Reads striped RDF/XML node elements (rdf:Description or typed nodes)
/// with rdf:about/rdf:nodeID, rdf:resource, rdf:datatype and xml:lang.
std::vector<Triple> parse_rdfxml(std::string_view text);

}  // namespace ontoforge::rdf
