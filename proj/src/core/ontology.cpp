#include "ontoforge/ontology.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ontoforge/error.hpp"
#include "ontoforge/util.hpp"

namespace ontoforge::ontology {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::is_a: return "is_a";
    case RelationKind::has: return "has";
    case RelationKind::generates: return "generates";
    case RelationKind::causes: return "causes";
    case RelationKind::utilizes: return "utilizes";
    case RelationKind::measures: return "measures";
    case RelationKind::controls: return "controls";
  }
  return "is_a";
}

RelationKind relation_kind_from_string(std::string_view s) {
  std::string key = ascii_lower(s);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "isa") key = "is_a";
  for (RelationKind k : kAllRelationKinds) {
    if (to_string(k) == key) return k;
  }
  throw Error(ErrorKind::invalid_argument, "bad-relation-kind", "unknown relation kind: " + std::string(s));
}

std::string to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::text: return "text";
    case ValueKind::quantity: return "quantity";
    case ValueKind::date: return "date";
    case ValueKind::concept_reference: return "concept_reference";
  }
  return "text";
}

ValueKind value_kind_from_string(std::string_view s) {
  for (ValueKind k : {ValueKind::text, ValueKind::quantity, ValueKind::date, ValueKind::concept_reference}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::invalid_argument, "bad-value-kind", "unknown property value kind: " + std::string(s));
}

std::string to_string(ElementKind kind) { return kind == ElementKind::concept_element ? "concept" : "property"; }

std::string to_string(MatchOn on) {
  switch (on) {
    case MatchOn::label: return "label";
    case MatchOn::synonym: return "synonym";
    case MatchOn::property: return "property";
    case MatchOn::property_synonym: return "property-synonym";
  }
  return "label";
}

std::string property_id(const std::string& concept_id, const std::string& property_name) {
  return concept_id + "." + slugify(property_name);
}

const PropertyDef* Concept::find_property(std::string_view name) const {
  for (const PropertyDef& p : properties) {
    if (iequals(p.name, name)) return &p;
  }
  return nullptr;
}

bool ValidationReport::has_error(std::string_view code) const {
  return std::any_of(errors.begin(), errors.end(), [&](const Issue& i) { return i.code == code; });
}

bool ValidationReport::has_warning(std::string_view code) const {
  return std::any_of(warnings.begin(), warnings.end(), [&](const Issue& i) { return i.code == code; });
}

Ontology::Ontology(std::string base_iri, std::string version)
    : base_iri_(std::move(base_iri)), version_(std::move(version)) {}

const Concept* Ontology::find(std::string_view id) const {
  const auto it = concepts_.find(std::string(id));
  return it == concepts_.end() ? nullptr : &it->second;
}

const Concept* Ontology::find_by_label(std::string_view label) const {
  for (const auto& [id, c] : concepts_) {
    if (iequals(c.label, label)) return &c;
  }
  return nullptr;
}

bool Ontology::has_relation(RelationKind kind, std::string_view source, std::string_view target) const {
  return relations_.count(Relation{kind, std::string(source), std::string(target)}) > 0;
}

namespace {

struct PropertyRef {
  std::string concept_id;
  std::size_t index;
};

std::optional<PropertyRef> resolve_property(const std::map<std::string, Concept>& concepts, std::string_view id) {
  const std::size_t dot_limit = id.size();
  for (std::size_t dot = id.find('.'); dot != std::string_view::npos && dot < dot_limit; dot = id.find('.', dot + 1)) {
    const auto it = concepts.find(std::string(id.substr(0, dot)));
    if (it == concepts.end()) continue;
    const std::string_view slug = id.substr(dot + 1);
    for (std::size_t i = 0; i < it->second.properties.size(); ++i) {
      if (slugify(it->second.properties[i].name) == slug) return PropertyRef{it->first, i};
    }
  }
  return std::nullopt;
}

void insert_sorted(std::vector<PropertyDef>& props, PropertyDef p) {
  const std::string key = ascii_lower(p.name);
  const auto pos = std::find_if(props.begin(), props.end(), [&](const PropertyDef& q) { return ascii_lower(q.name) > key; });
  props.insert(pos, std::move(p));
}

}  // namespace

bool Ontology::element_exists(std::string_view id) const {
  return find(id) != nullptr || resolve_property(concepts_, id).has_value();
}

std::vector<Issue> Ontology::label_collisions(const std::string& label, const std::set<std::string>& synonyms,
                                              const std::string& self_id) const {
  std::vector<Issue> out;
  for (const auto& [id, c] : concepts_) {
    if (id == self_id) continue;
    for (const std::string& s : c.synonyms) {
      if (iequals(s, label)) {
        out.push_back({"synonym-collision", "label '" + label + "' is also a synonym of " + c.label, {self_id, id}});
      }
    }
    for (const std::string& s : synonyms) {
      if (iequals(s, c.label)) {
        out.push_back({"synonym-collision", "synonym '" + s + "' is also the label of " + c.label, {self_id, id}});
      }
    }
  }
  return out;
}

AddResult Ontology::add_concept(const std::string& raw_label, const std::set<std::string>& synonyms) {
  const std::string label = trim(raw_label);
  if (label.empty()) throw Error(ErrorKind::invalid_argument, "empty-label", "concept label must not be empty");
  const std::string id = slugify(label);
  if (find_by_label(label) != nullptr || concepts_.count(id) > 0) {
    throw Error(ErrorKind::conflict, "duplicate-label", "a concept labelled '" + label + "' already exists");
  }
  for (const std::string& s : synonyms) {
    if (iequals(s, label)) {
      throw Error(ErrorKind::invalid_argument, "synonym-is-label", "synonym '" + s + "' equals the concept label");
    }
  }
  AddResult result{id, label_collisions(label, synonyms, id)};
  for (const std::string& s : synonyms) {
    if (trim(s).empty()) result.warnings.push_back({"empty-synonym", "empty synonym on " + label, {id}});
  }
  concepts_.emplace(id, Concept{id, label, synonyms, {}});
  return result;
}

bool Ontology::is_a_reaches(const std::string& from, const std::string& to) const {
  std::set<std::string> seen;
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    if (cur == to) return true;
    if (!seen.insert(cur).second) continue;
    for (auto it = relations_.lower_bound(Relation{RelationKind::is_a, cur, ""});
         it != relations_.end() && it->kind == RelationKind::is_a && it->source == cur; ++it) {
      queue.push_back(it->target);
    }
  }
  return false;
}

void Ontology::add_relation(RelationKind kind, const std::string& source, const std::string& target) {
  for (const std::string* end : {&source, &target}) {
    if (concepts_.count(*end) == 0) {
      throw Error(ErrorKind::not_found, "unknown-endpoint", "no concept with id '" + *end + "'");
    }
  }
  if (has_relation(kind, source, target)) {
    throw Error(ErrorKind::conflict, "duplicate-relation",
                to_string(kind) + "(" + source + ", " + target + ") already exists");
  }
  if (kind == RelationKind::is_a && (source == target || is_a_reaches(target, source))) {
    throw Error(ErrorKind::validation, "is-a-cycle",
                "is_a(" + source + ", " + target + ") would close a subclass cycle");
  }
  relations_.insert(Relation{kind, source, target});
}

void Ontology::add_property(const std::string& concept_id, const PropertyDef& property) {
  const auto it = concepts_.find(concept_id);
  if (it == concepts_.end()) throw Error(ErrorKind::not_found, "unknown-concept", "no concept with id '" + concept_id + "'");
  PropertyDef p = property;
  p.name = trim(p.name);
  if (p.name.empty()) throw Error(ErrorKind::invalid_argument, "empty-property", "property name must not be empty");
  if (it->second.find_property(p.name) != nullptr) {
    throw Error(ErrorKind::conflict, "duplicate-property",
                "concept " + it->second.label + " already has a property '" + p.name + "'");
  }
  // Two names with the same slug would share an element id.
  for (const PropertyDef& q : it->second.properties) {
    if (slugify(q.name) == slugify(p.name)) {
      throw Error(ErrorKind::conflict, "duplicate-property", "property '" + p.name + "' clashes with '" + q.name + "'");
    }
  }
  for (const std::string& s : p.synonyms) {
    if (iequals(s, p.name)) {
      throw Error(ErrorKind::invalid_argument, "synonym-is-label", "synonym '" + s + "' equals the property name");
    }
  }
  insert_sorted(it->second.properties, std::move(p));
}

std::vector<Issue> Ontology::add_synonym(const std::string& element_id, const std::string& raw_synonym) {
  const std::string synonym = trim(raw_synonym);
  if (synonym.empty()) throw Error(ErrorKind::invalid_argument, "empty-synonym", "synonym must not be empty");
  const auto duplicate = [&](const std::set<std::string>& set) {
    return std::any_of(set.begin(), set.end(), [&](const std::string& s) { return iequals(s, synonym); });
  };
  if (const auto it = concepts_.find(element_id); it != concepts_.end()) {
    Concept& c = it->second;
    if (iequals(c.label, synonym)) {
      throw Error(ErrorKind::invalid_argument, "synonym-is-label", "'" + synonym + "' is the label of " + c.label);
    }
    if (duplicate(c.synonyms)) {
      throw Error(ErrorKind::conflict, "duplicate-synonym", "'" + synonym + "' is already a synonym of " + c.label);
    }
    std::vector<Issue> warnings;
    if (const Concept* other = find_by_label(synonym); other != nullptr) {
      warnings.push_back({"synonym-collision", "synonym '" + synonym + "' is also the label of " + other->label,
                          {c.id, other->id}});
    }
    c.synonyms.insert(synonym);
    return warnings;
  }
  const auto ref = resolve_property(concepts_, element_id);
  if (!ref) throw Error(ErrorKind::not_found, "unknown-element", "no element with id '" + element_id + "'");
  PropertyDef& p = concepts_.at(ref->concept_id).properties[ref->index];
  if (iequals(p.name, synonym)) {
    throw Error(ErrorKind::invalid_argument, "synonym-is-label", "'" + synonym + "' is the property name");
  }
  if (duplicate(p.synonyms)) {
    throw Error(ErrorKind::conflict, "duplicate-synonym", "'" + synonym + "' is already a synonym of " + p.name);
  }
  p.synonyms.insert(synonym);
  return {};
}

void Ontology::remove_concept(const std::string& id) {
  if (concepts_.count(id) == 0) throw Error(ErrorKind::not_found, "unknown-concept", "no concept with id '" + id + "'");
  for (const Relation& r : relations_) {
    if (r.source == id || r.target == id) {
      throw Error(ErrorKind::conflict, "element-in-use",
                  "concept '" + id + "' still takes part in " + to_string(r.kind) + "(" + r.source + ", " + r.target + ")");
    }
  }
  concepts_.erase(id);
}

void Ontology::remove_relation(RelationKind kind, const std::string& source, const std::string& target) {
  if (relations_.erase(Relation{kind, source, target}) == 0) {
    throw Error(ErrorKind::not_found, "unknown-relation", to_string(kind) + "(" + source + ", " + target + ") not present");
  }
}

void Ontology::remove_property(const std::string& concept_id, const std::string& name) {
  const auto it = concepts_.find(concept_id);
  if (it == concepts_.end()) throw Error(ErrorKind::not_found, "unknown-concept", "no concept with id '" + concept_id + "'");
  auto& props = it->second.properties;
  const auto pos = std::find_if(props.begin(), props.end(), [&](const PropertyDef& p) { return iequals(p.name, name); });
  if (pos == props.end()) throw Error(ErrorKind::not_found, "unknown-property", "no property '" + name + "'");
  props.erase(pos);
}

void Ontology::remove_synonym(const std::string& element_id, const std::string& synonym) {
  std::set<std::string>* set = nullptr;
  if (const auto it = concepts_.find(element_id); it != concepts_.end()) {
    set = &it->second.synonyms;
  } else if (const auto ref = resolve_property(concepts_, element_id)) {
    set = &concepts_.at(ref->concept_id).properties[ref->index].synonyms;
  } else {
    throw Error(ErrorKind::not_found, "unknown-element", "no element with id '" + element_id + "'");
  }
  const auto pos = std::find_if(set->begin(), set->end(), [&](const std::string& s) { return iequals(s, synonym); });
  if (pos == set->end()) throw Error(ErrorKind::not_found, "unknown-synonym", "'" + synonym + "' is not a synonym");
  set->erase(pos);
}

void Ontology::put_concept(Concept c) {
  std::sort(c.properties.begin(), c.properties.end(),
            [](const PropertyDef& a, const PropertyDef& b) { return ascii_lower(a.name) < ascii_lower(b.name); });
  std::string id = c.id;
  concepts_[id] = std::move(c);
}

void Ontology::put_relation(Relation r) { relations_.insert(std::move(r)); }

std::vector<Match> Ontology::query_by_term(std::string_view raw_term) const {
  const std::string term = ascii_lower(trim(raw_term));
  if (term.empty()) return {};
  // Tier 0: whole-string match, tier 1: substring match. Concepts before
  // properties within a tier, then by id.
  struct Hit {
    int tier;
    Match match;
  };
  std::vector<Hit> hits;
  const auto tier_of = [&](const std::string& text) -> int {
    const std::string lower = ascii_lower(text);
    if (lower == term) return 0;
    return lower.find(term) != std::string::npos ? 1 : 2;
  };
  const auto consider = [&](ElementKind kind, const std::string& id, MatchOn primary, const std::string& name,
                            MatchOn secondary, const std::set<std::string>& synonyms) {
    int best = tier_of(name);
    MatchOn on = primary;
    for (const std::string& s : synonyms) {
      const int t = tier_of(s);
      if (t < best) {
        best = t;
        on = secondary;
      }
    }
    if (best < 2) hits.push_back({best, {kind, id, on}});
  };
  for (const auto& [id, c] : concepts_) {
    consider(ElementKind::concept_element, id, MatchOn::label, c.label, MatchOn::synonym, c.synonyms);
    for (const PropertyDef& p : c.properties) {
      consider(ElementKind::property_element, property_id(id, p.name), MatchOn::property, p.name,
               MatchOn::property_synonym, p.synonyms);
    }
  }
  std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    if (a.match.kind != b.match.kind) return a.match.kind < b.match.kind;
    return a.match.id < b.match.id;
  });
  std::vector<Match> out;
  out.reserve(hits.size());
  for (Hit& h : hits) out.push_back(std::move(h.match));
  return out;
}

std::optional<std::vector<std::string>> Ontology::is_a_topological_order() const {
  // Kahn's algorithm over child -> parent edges, ties broken by id.
  std::map<std::string, int> pending_children;
  for (const auto& [id, c] : concepts_) pending_children[id] = 0;
  std::map<std::string, std::vector<std::string>> parents;
  std::size_t edges = 0;
  for (const Relation& r : relations_) {
    if (r.kind != RelationKind::is_a || concepts_.count(r.source) == 0 || concepts_.count(r.target) == 0) continue;
    ++pending_children[r.target];
    parents[r.source].push_back(r.target);
    ++edges;
  }
  std::set<std::string> ready;
  for (const auto& [id, n] : pending_children) {
    if (n == 0) ready.insert(id);
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    const std::string cur = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(cur);
    for (const std::string& p : parents[cur]) {
      --edges;
      if (--pending_children[p] == 0) ready.insert(p);
    }
  }
  if (edges > 0) return std::nullopt;
  return order;
}

ValidationReport Ontology::validate() const {
  ValidationReport report;

  // Identity and labels.
  std::map<std::string, std::string> seen_labels;  // lowercase label -> id
  for (const auto& [id, c] : concepts_) {
    if (trim(c.label).empty()) report.errors.push_back({"empty-label", "concept '" + id + "' has no label", {id}});
    if (id.empty() || id.find_first_of(" \t\r\n") != std::string::npos) {
      report.errors.push_back({"bad-id", "concept id '" + id + "' is empty or contains whitespace", {id}});
    }
    const std::string key = ascii_lower(c.label);
    if (const auto it = seen_labels.find(key); it != seen_labels.end()) {
      report.errors.push_back({"duplicate-label", "label '" + c.label + "' is used by " + it->second + " and " + id,
                               {it->second, id}});
    } else {
      seen_labels.emplace(key, id);
    }
    std::set<std::string> prop_names;
    for (const PropertyDef& p : c.properties) {
      if (!prop_names.insert(ascii_lower(p.name)).second) {
        report.errors.push_back({"duplicate-property", "concept " + c.label + " repeats property '" + p.name + "'", {id}});
      }
      for (const std::string& s : p.synonyms) {
        if (trim(s).empty()) {
          report.warnings.push_back({"empty-synonym", "empty synonym on property " + p.name, {property_id(id, p.name)}});
        }
      }
    }
    for (const std::string& s : c.synonyms) {
      if (trim(s).empty()) report.warnings.push_back({"empty-synonym", "empty synonym on " + c.label, {id}});
      if (iequals(s, c.label)) {
        report.errors.push_back({"synonym-is-label", "concept " + c.label + " lists its own label as a synonym", {id}});
      }
    }
  }
  // Synonym of one concept equal to another concept's label.
  for (const auto& [id, c] : concepts_) {
    for (const std::string& s : c.synonyms) {
      if (const Concept* other = find_by_label(s); other != nullptr && other->id != id) {
        report.warnings.push_back({"synonym-collision",
                                   "'" + s + "' is a synonym of " + c.label + " and the label of " + other->label,
                                   {id, other->id}});
      }
    }
  }

  // Relations.
  for (const Relation& r : relations_) {
    for (const std::string* end : {&r.source, &r.target}) {
      if (concepts_.count(*end) == 0) {
        report.errors.push_back({"dangling-endpoint",
                                 to_string(r.kind) + "(" + r.source + ", " + r.target + ") refers to missing concept '" + *end + "'",
                                 {r.source, r.target}});
      }
    }
    if (r.kind == RelationKind::is_a && r.source == r.target) {
      report.errors.push_back({"is-a-cycle", "concept '" + r.source + "' is declared a subclass of itself", {r.source}});
    }
  }
  if (!is_a_topological_order()) {
    // Name the concepts that sit on a cycle: those left after peeling acyclic parts.
    std::set<std::string> on_cycle;
    for (const auto& [id, c] : concepts_) {
      for (auto it = relations_.lower_bound(Relation{RelationKind::is_a, id, ""});
           it != relations_.end() && it->kind == RelationKind::is_a && it->source == id; ++it) {
        if (it->target != id && concepts_.count(it->target) > 0 && is_a_reaches(it->target, id)) on_cycle.insert(id);
      }
    }
    if (!on_cycle.empty()) {
      std::string names;
      for (const std::string& id : on_cycle) names += (names.empty() ? "" : ", ") + id;
      report.errors.push_back({"is-a-cycle", "subclass cycle through: " + names, {on_cycle.begin(), on_cycle.end()}});
    }
  }

  // Connectivity: every concept should be linked, through any relation,
  // to the main body of the ontology (the largest connected component).
  if (concepts_.size() > 1) {
    std::map<std::string, std::string> parent;
    for (const auto& [id, c] : concepts_) parent[id] = id;
    std::function<std::string(const std::string&)> root_of = [&](const std::string& x) {
      std::string r = x;
      while (parent[r] != r) r = parent[r];
      return r;
    };
    for (const Relation& r : relations_) {
      if (concepts_.count(r.source) == 0 || concepts_.count(r.target) == 0) continue;
      const std::string a = root_of(r.source), b = root_of(r.target);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::string, std::size_t> sizes;
    for (const auto& [id, c] : concepts_) ++sizes[root_of(id)];
    std::string main_root;
    std::size_t best = 0;
    for (const auto& [root, n] : sizes) {
      if (n > best) {
        best = n;
        main_root = root;
      }
    }
    for (const auto& [id, c] : concepts_) {
      if (root_of(id) != main_root) {
        report.warnings.push_back({"unreachable-concept", "concept " + c.label + " is not connected to the main taxonomy", {id}});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Canonical text

namespace {

std::string escape_field(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '|': out += "\\p"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    switch (s[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 'p': out.push_back('|'); break;
      default: out.push_back(s[i]);
    }
  }
  return out;
}

std::string join_set(const std::set<std::string>& s) {
  std::string out;
  for (const std::string& x : s) out += (out.empty() ? "" : "|") + escape_field(x);
  return out;
}

std::set<std::string> split_set(std::string_view s) {
  std::set<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = s.find('|', start);
    out.insert(unescape_field(s.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

std::string Ontology::canonical_text() const {
  std::string out = "ontology\t" + escape_field(base_iri_) + "\t" + escape_field(version_) + "\n";
  for (const auto& [id, c] : concepts_) {
    out += "concept\t" + escape_field(id) + "\t" + escape_field(c.label) + "\t" + join_set(c.synonyms) + "\n";
  }
  for (const auto& [id, c] : concepts_) {
    for (const PropertyDef& p : c.properties) {
      out += "property\t" + escape_field(id) + "\t" + escape_field(p.name) + "\t" + to_string(p.value_kind) + "\t" +
             join_set(p.synonyms) + "\n";
    }
  }
  for (const Relation& r : relations_) {
    out += "relation\t" + to_string(r.kind) + "\t" + escape_field(r.source) + "\t" + escape_field(r.target) + "\n";
  }
  return out;
}

Ontology Ontology::from_canonical_text(const std::string& text) {
  Ontology o;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::vector<std::string> f = split_tabs(lines[i]);
    const auto bad = [&] {
      return Error(ErrorKind::parse, "malformed-record", "line " + std::to_string(i + 1) + ": unexpected record");
    };
    if (f[0] == "ontology" && f.size() == 3) {
      o.base_iri_ = unescape_field(f[1]);
      o.version_ = unescape_field(f[2]);
    } else if (f[0] == "concept" && f.size() == 4) {
      o.put_concept(Concept{unescape_field(f[1]), unescape_field(f[2]), split_set(f[3]), {}});
    } else if (f[0] == "property" && f.size() == 5) {
      const std::string cid = unescape_field(f[1]);
      if (o.concepts_.count(cid) == 0) throw bad();
      o.concepts_[cid].properties.push_back(PropertyDef{unescape_field(f[2]), split_set(f[4]), value_kind_from_string(f[3])});
    } else if (f[0] == "relation" && f.size() == 4) {
      o.put_relation(Relation{relation_kind_from_string(f[1]), unescape_field(f[2]), unescape_field(f[3])});
    } else {
      throw bad();
    }
  }
  for (auto& [id, c] : o.concepts_) {
    std::sort(c.properties.begin(), c.properties.end(),
              [](const PropertyDef& a, const PropertyDef& b) { return ascii_lower(a.name) < ascii_lower(b.name); });
  }
  return o;
}

}  // namespace ontoforge::ontology
