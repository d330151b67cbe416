#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge::ontology {

inline constexpr std::string_view kDefaultBaseIri = "http://ontoforge.example/wind#";

enum class RelationKind { is_a, has, generates, causes, utilizes, measures, controls };
inline constexpr std::array<RelationKind, 7> kAllRelationKinds = {
    RelationKind::is_a,     RelationKind::has,      RelationKind::generates, RelationKind::causes,
    RelationKind::utilizes, RelationKind::measures, RelationKind::controls};

std::string to_string(RelationKind kind);
/// Accepts "is_a", "is-a", "has", ... Throws Error(invalid_argument).
RelationKind relation_kind_from_string(std::string_view s);

enum class ValueKind { text, quantity, date, concept_reference };
std::string to_string(ValueKind kind);
ValueKind value_kind_from_string(std::string_view s);

struct PropertyDef {
  std::string name;
  std::set<std::string> synonyms;
  ValueKind value_kind = ValueKind::text;

  bool operator==(const PropertyDef&) const = default;
};

struct Concept {
  std::string id;     // slug of the label
  std::string label;  // display casing
  std::set<std::string> synonyms;
  std::vector<PropertyDef> properties;  // insertion order

  const PropertyDef* find_property(std::string_view name) const;  // case-insensitive
  bool operator==(const Concept&) const = default;
};

struct Relation {
  RelationKind kind;
  std::string source;
  std::string target;

  auto operator<=>(const Relation&) const = default;
};

/// Element ids: a concept id, or "<concept id>.<property slug>" for a property.
std::string property_id(const std::string& concept_id, const std::string& property_name);

enum class ElementKind { concept_element, property_element };
enum class MatchOn { label, synonym, property, property_synonym };
std::string to_string(ElementKind kind);
std::string to_string(MatchOn on);

struct Match {
  ElementKind kind;
  std::string id;
  MatchOn on;

  bool operator==(const Match&) const = default;
};

struct Issue {
  std::string code;  // "is-a-cycle", "dangling-endpoint", "synonym-collision", ...
  std::string message;
  std::vector<std::string> elements;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const { return errors.empty(); }
  bool has_error(std::string_view code) const;
  bool has_warning(std::string_view code) const;
};

struct AddResult {
  std::string id;
  std::vector<Issue> warnings;
};

/// Concepts, their properties and synonyms, and typed relations.
///
/// The checked mutators (add_*, remove_*) keep validate() free of errors.
/// The put_* functions insert without checks; importers use them so that a
/// broken document can still be loaded and reported on.
class Ontology {
 public:
  explicit Ontology(std::string base_iri = std::string(kDefaultBaseIri), std::string version = "1.0");

  const std::string& base_iri() const { return base_iri_; }
  const std::string& version() const { return version_; }
  void set_base_iri(std::string iri) { base_iri_ = std::move(iri); }
  void set_version(std::string v) { version_ = std::move(v); }

  const std::map<std::string, Concept>& concepts() const { return concepts_; }
  const std::set<Relation>& relations() const { return relations_; }
  const Concept* find(std::string_view id) const;
  /// Case-insensitive label lookup.
  const Concept* find_by_label(std::string_view label) const;
  bool has_relation(RelationKind kind, std::string_view source, std::string_view target) const;
  /// True if `id` names an existing concept or property.
  bool element_exists(std::string_view id) const;

  AddResult add_concept(const std::string& label, const std::set<std::string>& synonyms = {});
  void add_relation(RelationKind kind, const std::string& source, const std::string& target);
  void add_property(const std::string& concept_id, const PropertyDef& property);
  /// Adds a synonym to a concept or property element. Returns collision warnings.
  std::vector<Issue> add_synonym(const std::string& element_id, const std::string& synonym);

  /// Refused ("element-in-use") while relations reference the concept.
  void remove_concept(const std::string& id);
  void remove_relation(RelationKind kind, const std::string& source, const std::string& target);
  void remove_property(const std::string& concept_id, const std::string& name);
  void remove_synonym(const std::string& element_id, const std::string& synonym);

  void put_concept(Concept c);
  void put_relation(Relation r);

  std::vector<Match> query_by_term(std::string_view term) const;
  ValidationReport validate() const;

  /// Topological order of concepts under is_a (children before parents);
  /// nullopt if the is_a graph has a cycle.
  std::optional<std::vector<std::string>> is_a_topological_order() const;

  /// Canonical line-oriented text: header, concepts, properties, relations,
  /// each section sorted.
  std::string canonical_text() const;
  static Ontology from_canonical_text(const std::string& text);

  friend bool operator==(const Ontology& a, const Ontology& b) = default;

 private:
  bool is_a_reaches(const std::string& from, const std::string& to) const;
  std::vector<Issue> label_collisions(const std::string& label, const std::set<std::string>& synonyms,
                                      const std::string& self_id) const;

  std::string base_iri_;
  std::string version_;
  std::map<std::string, Concept> concepts_;
  std::set<Relation> relations_;
};

/// The complete wind-energy ontology: 47 classes, is_a/has taxonomy,
/// functional relations, synonym sets and property lists.
Ontology seed_wind_ontology();

}  // namespace ontoforge::ontology
