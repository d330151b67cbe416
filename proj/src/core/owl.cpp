#include "ontoforge/owl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "ontoforge/error.hpp"
#include "ontoforge/util.hpp"

namespace ontoforge::owl {

using ontology::Concept;
using ontology::Ontology;
using ontology::PropertyDef;
using ontology::Relation;
using ontology::RelationKind;
using ontology::ValueKind;
using rdf::Term;
using rdf::Triple;

namespace {

const std::string kRdf(rdf::kRdf), kRdfs(rdf::kRdfs), kOwl(rdf::kOwl), kXsd(rdf::kXsd);
const std::string kType = kRdf + "type";
const std::string kLabel = kRdfs + "label";
const std::string kSubClassOf = kRdfs + "subClassOf";
const std::string kDomain = kRdfs + "domain";
const std::string kRange = kRdfs + "range";
const std::string kVersionInfo = kOwl + "versionInfo";
const std::string kClass = kOwl + "Class";
const std::string kOntologyType = kOwl + "Ontology";
const std::string kObjectProperty = kOwl + "ObjectProperty";
const std::string kDatatypeProperty = kOwl + "DatatypeProperty";
const std::string kAnnotationProperty = kOwl + "AnnotationProperty";
constexpr const char* kSynonymSet = "synonymSet";

std::string encode_local(std::string_view id) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char c : id) {
    const auto u = static_cast<unsigned char>(c);
    const bool keep = std::isalnum(u) || c == '-' || c == '.' || c == '_' || c == '~' || u >= 0x80;
    if (keep) {
      out.push_back(c);
    } else {
      out.push_back('%');
      out.push_back(kHex[u >> 4]);
      out.push_back(kHex[u & 0xf]);
    }
  }
  return out;
}

std::string ontology_iri(const std::string& base) {
  if (!base.empty() && base.back() == '#') return base.substr(0, base.size() - 1);
  return base;
}

std::map<std::string, std::string> prefixes_for(const std::string& base) {
  return {{"owl", kOwl}, {"rdf", kRdf}, {"rdfs", kRdfs}, {"xsd", kXsd}, {"wind", base}};
}

std::string range_for(ValueKind kind) {
  switch (kind) {
    case ValueKind::quantity: return kXsd + "decimal";
    case ValueKind::date: return kXsd + "date";
    default: return kXsd + "string";
  }
}

}  // namespace

std::vector<Triple> to_triples(const Ontology& o) {
  const std::string& base = o.base_iri();
  const auto iri = [&](std::string_view local) { return Term::iri(base + encode_local(local)); };
  const Term type = Term::iri(kType), label = Term::iri(kLabel), synonym = iri(kSynonymSet);

  std::vector<Triple> out;
  const Term onto = Term::iri(ontology_iri(base));
  out.push_back({onto, type, Term::iri(kOntologyType)});
  out.push_back({onto, Term::iri(kVersionInfo), Term::literal(o.version())});
  for (RelationKind kind : ontology::kAllRelationKinds) {
    out.push_back({iri(ontology::to_string(kind)), type, Term::iri(kObjectProperty)});
  }
  out.push_back({synonym, type, Term::iri(kAnnotationProperty)});

  for (const auto& [id, c] : o.concepts()) {
    const Term cls = iri(id);
    out.push_back({cls, type, Term::iri(kClass)});
    out.push_back({cls, label, Term::literal(c.label)});
    for (const std::string& s : c.synonyms) out.push_back({cls, synonym, Term::literal(s)});
    for (const PropertyDef& p : c.properties) {
      const Term prop = iri(ontology::property_id(id, p.name));
      if (p.value_kind == ValueKind::concept_reference) {
        out.push_back({prop, type, Term::iri(kObjectProperty)});
      } else {
        out.push_back({prop, type, Term::iri(kDatatypeProperty)});
        out.push_back({prop, Term::iri(kRange), Term::iri(range_for(p.value_kind))});
      }
      out.push_back({prop, Term::iri(kDomain), cls});
      out.push_back({prop, label, Term::literal(p.name)});
      for (const std::string& s : p.synonyms) out.push_back({prop, synonym, Term::literal(s)});
    }
  }
  for (const Relation& r : o.relations()) {
    const Term predicate = r.kind == RelationKind::is_a ? Term::iri(kSubClassOf) : iri(ontology::to_string(r.kind));
    out.push_back({iri(r.source), predicate, iri(r.target)});
  }
  rdf::canonical_sort(out);
  return out;
}

OwlDocument to_owl(const Ontology& o, Syntax syntax) {
  const ontology::ValidationReport report = o.validate();
  if (!report.ok()) {
    std::string why;
    for (const auto& e : report.errors) why += (why.empty() ? "" : "; ") + e.message;
    throw Error(ErrorKind::validation, "invalid-ontology", "ontology has validation errors: " + why);
  }
  const std::vector<Triple> triples = to_triples(o);
  const auto prefixes = prefixes_for(o.base_iri());
  OwlDocument doc;
  doc.base_iri = o.base_iri();
  doc.syntax = syntax;
  doc.text = syntax == Syntax::turtle ? rdf::write_turtle(triples, prefixes) : rdf::write_rdfxml(triples, prefixes);
  return doc;
}

Syntax detect_syntax(const std::string& text) {
  const std::string head = trim(text.substr(0, std::min<std::size_t>(text.size(), 256)));
  if (head.rfind("<?xml", 0) == 0 || head.rfind("<rdf:RDF", 0) == 0 || head.rfind("<!DOCTYPE", 0) == 0 ||
      head.rfind("<!--", 0) == 0) {
    return Syntax::rdfxml;
  }
  return Syntax::turtle;
}

namespace {

class Importer {
 public:
  explicit Importer(std::vector<Triple> triples) : triples_(std::move(triples)) {}

  ImportResult run() {
    find_base();
    collect_classes();
    collect_properties();
    collect_relations();
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      if (!used_.count(i)) result_.ignored.push_back(triples_[i]);
    }
    return std::move(result_);
  }

 private:
  bool is(const Term& t, const std::string& iri) const { return t.is_iri() && t.value == iri; }

  void find_base() {
    std::string base;
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      if (is(t.predicate, kType) && is(t.object, kOntologyType) && t.subject.is_iri()) {
        base = t.subject.value;
        ontology_subject_ = base;
        used_.insert(i);
        break;
      }
    }
    if (base.empty()) {
      for (const Triple& t : triples_) {
        if (is(t.predicate, kType) && is(t.object, kClass) && t.subject.is_iri()) {
          const std::size_t cut = t.subject.value.find_last_of("#/");
          if (cut != std::string::npos) base = t.subject.value.substr(0, cut + 1);
          break;
        }
      }
    }
    if (!base.empty() && base.back() != '#' && base.back() != '/') base += '#';
    if (base.empty()) base = std::string(ontology::kDefaultBaseIri);
    base_ = base;
    result_.ontology.set_base_iri(base_);
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      if (t.subject.is_iri() && t.subject.value == ontology_subject_ && is(t.predicate, kVersionInfo) && t.object.is_literal()) {
        result_.ontology.set_version(t.object.value);
        used_.insert(i);
      }
    }
    synonym_iri_ = base_ + kSynonymSet;
    for (RelationKind k : ontology::kAllRelationKinds) kind_by_iri_[base_ + ontology::to_string(k)] = k;
  }

  std::string local_id(const std::string& iri) const {
    std::string local;
    if (iri.size() > base_.size() && iri.compare(0, base_.size(), base_) == 0) {
      local = iri.substr(base_.size());
    } else {
      const std::size_t cut = iri.find_last_of("#/");
      local = cut == std::string::npos ? "" : iri.substr(cut + 1);
    }
    local = percent_decode(local);
    if (local.empty()) throw Error(ErrorKind::validation, "unresolvable-iri", "cannot derive an id from <" + iri + ">");
    return local;
  }

  std::vector<std::size_t> about(const std::string& subject, const std::string& predicate) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      if (t.subject.is_iri() && t.subject.value == subject && is(t.predicate, predicate)) out.push_back(i);
    }
    return out;
  }

  void collect_classes() {
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      if (!(is(t.predicate, kType) && is(t.object, kClass) && t.subject.is_iri())) continue;
      used_.insert(i);
      const std::string& iri = t.subject.value;
      if (class_ids_.count(iri)) continue;
      Concept c;
      c.id = local_id(iri);
      for (std::size_t j : about(iri, kLabel)) {
        if (triples_[j].object.is_literal() && c.label.empty()) {
          c.label = triples_[j].object.value;
          used_.insert(j);
        }
      }
      if (c.label.empty()) {
        c.label = c.id;
        std::replace(c.label.begin(), c.label.end(), '_', ' ');
      }
      for (std::size_t j : about(iri, synonym_iri_)) {
        if (triples_[j].object.is_literal()) {
          c.synonyms.insert(triples_[j].object.value);
          used_.insert(j);
        }
      }
      class_ids_[iri] = c.id;
      result_.ontology.put_concept(std::move(c));
    }
  }

  void collect_properties() {
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      if (!is(t.predicate, kType) || !t.subject.is_iri()) continue;
      const std::string& iri = t.subject.value;
      const bool object_prop = is(t.object, kObjectProperty);
      const bool data_prop = is(t.object, kDatatypeProperty);
      if (iri == synonym_iri_ && is(t.object, kAnnotationProperty)) {
        used_.insert(i);
        continue;
      }
      if (!object_prop && !data_prop) continue;
      if (object_prop && kind_by_iri_.count(iri)) {
        used_.insert(i);  // relation vocabulary declaration
        continue;
      }
      const std::vector<std::size_t> domains = about(iri, kDomain);
      if (domains.size() != 1 || !triples_[domains[0]].object.is_iri()) continue;  // not one of ours
      const auto owner = class_ids_.find(triples_[domains[0]].object.value);
      if (owner == class_ids_.end()) {
        throw Error(ErrorKind::validation, "unresolvable-iri",
                    "property <" + iri + "> has undeclared domain <" + triples_[domains[0]].object.value + ">");
      }
      PropertyDef p;
      p.value_kind = object_prop ? ValueKind::concept_reference : ValueKind::text;
      std::vector<std::size_t> consumed = {i, domains[0]};
      if (data_prop) {
        for (std::size_t j : about(iri, kRange)) {
          const std::string& range = triples_[j].object.value;
          if (range == kXsd + "decimal" || range == kXsd + "double" || range == kXsd + "integer" || range == kXsd + "float") {
            p.value_kind = ValueKind::quantity;
          } else if (range == kXsd + "date" || range == kXsd + "dateTime") {
            p.value_kind = ValueKind::date;
          }
          consumed.push_back(j);
        }
      }
      for (std::size_t j : about(iri, kLabel)) {
        if (triples_[j].object.is_literal() && p.name.empty()) {
          p.name = triples_[j].object.value;
          consumed.push_back(j);
        }
      }
      if (p.name.empty()) {
        const std::string local = local_id(iri);
        const std::size_t dot = local.rfind('.');
        p.name = dot == std::string::npos ? local : local.substr(dot + 1);
        std::replace(p.name.begin(), p.name.end(), '_', ' ');
      }
      for (std::size_t j : about(iri, synonym_iri_)) {
        if (triples_[j].object.is_literal()) {
          p.synonyms.insert(triples_[j].object.value);
          consumed.push_back(j);
        }
      }
      Concept c = *result_.ontology.find(owner->second);
      c.properties.push_back(std::move(p));
      result_.ontology.put_concept(std::move(c));
      used_.insert(consumed.begin(), consumed.end());
    }
  }

  std::string class_of(const Term& t) const {
    const auto it = class_ids_.find(t.value);
    if (it == class_ids_.end()) {
      throw Error(ErrorKind::validation, "unresolvable-iri", "<" + t.value + "> is not a declared class");
    }
    return it->second;
  }

  void collect_relations() {
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      std::optional<RelationKind> kind;
      if (is(t.predicate, kSubClassOf)) {
        if (t.object.value == kOwl + "Thing") continue;
        kind = RelationKind::is_a;
      } else if (const auto it = kind_by_iri_.find(t.predicate.value); it != kind_by_iri_.end()) {
        kind = it->second;
      }
      if (!kind || !class_ids_.count(t.subject.value)) continue;
      result_.ontology.put_relation(Relation{*kind, class_of(t.subject), class_of(t.object)});
      used_.insert(i);
    }
  }

  std::vector<Triple> triples_;
  std::set<std::size_t> used_;
  std::string base_, ontology_subject_, synonym_iri_;
  std::map<std::string, RelationKind> kind_by_iri_;
  std::map<std::string, std::string> class_ids_;  // IRI -> concept id
  ImportResult result_;
};

}  // namespace

ImportResult from_owl(const OwlDocument& document) {
  std::vector<Triple> triples = document.syntax == Syntax::turtle ? rdf::parse_turtle(document.text)
                                                                   : rdf::parse_rdfxml(document.text);
  return Importer(std::move(triples)).run();
}

ImportResult from_owl_text(const std::string& text) {
  OwlDocument doc;
  doc.text = text;
  doc.syntax = detect_syntax(text);
  return from_owl(doc);
}

}  // namespace ontoforge::owl
