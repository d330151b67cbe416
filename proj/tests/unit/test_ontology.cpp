#include <gtest/gtest.h>

#include "generators.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/ontology.hpp"
#include "seed_expectations.hpp"

using namespace ontoforge;
using namespace ontoforge::ontology;

namespace {

const Concept& by_label(const Ontology& o, const std::string& label) {
  const Concept* c = o.find_by_label(label);
  if (c == nullptr) throw std::runtime_error("no concept labelled " + label);
  return *c;
}

template <typename F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Seed, HasEveryClass) {
  const Ontology o = seed_wind_ontology();
  EXPECT_EQ(o.concepts().size(), expected::kClasses.size());
  for (const auto& label : expected::kClasses) {
    const Concept* c = o.find_by_label(label);
    ASSERT_NE(c, nullptr) << label;
    EXPECT_EQ(c->label, label);
  }
}

TEST(Seed, SynonymsAndProperties) {
  const Ontology o = seed_wind_ontology();
  for (const auto& [cls, syn] : expected::kSynonyms) EXPECT_TRUE(by_label(o, cls).synonyms.count(syn)) << cls << " / " << syn;
  for (const auto& [cls, prop] : expected::kProperties) EXPECT_NE(by_label(o, cls).find_property(prop), nullptr) << cls << "." << prop;
  for (const auto& [cls, prop, syn] : expected::kPropertySynonyms) {
    const PropertyDef* p = by_label(o, cls).find_property(prop);
    ASSERT_NE(p, nullptr);
    EXPECT_TRUE(p->synonyms.count(syn)) << prop << " / " << syn;
  }
}

TEST(Seed, TaxonomyAndFunctionalRelations) {
  const Ontology o = seed_wind_ontology();
  for (const auto* list : {&expected::kTaxonomy, &expected::kFunctionalRelations}) {
    for (const auto& [kind, src, dst] : *list) {
      EXPECT_TRUE(o.has_relation(relation_kind_from_string(kind), by_label(o, src).id, by_label(o, dst).id))
          << kind << "(" << src << ", " << dst << ")";
    }
  }
}

TEST(Seed, ValidatesWithGeneratorCollisionWarning) {
  const ValidationReport r = seed_wind_ontology().validate();
  EXPECT_TRUE(r.ok()) << (r.errors.empty() ? "" : r.errors[0].message);
  EXPECT_TRUE(r.has_warning("synonym-collision"));
  bool generator = false;
  for (const Issue& w : r.warnings) {
    if (w.code == "synonym-collision" && std::find(w.elements.begin(), w.elements.end(), "generator") != w.elements.end()) generator = true;
  }
  EXPECT_TRUE(generator);
  EXPECT_FALSE(r.has_warning("unreachable-concept"));
}

TEST(Query, FindsLabelSynonymAndProperty) {
  const Ontology o = seed_wind_ontology();
  const auto vane = o.query_by_term("vane");
  EXPECT_NE(std::find(vane.begin(), vane.end(), Match{ElementKind::concept_element, "wind_vane", MatchOn::label}), vane.end());
  const auto wtg = o.query_by_term("WTG");
  ASSERT_FALSE(wtg.empty());
  EXPECT_EQ(wtg[0], (Match{ElementKind::concept_element, "wind_turbine", MatchOn::synonym}));
  const auto rated = o.query_by_term("nameplate");
  ASSERT_EQ(rated.size(), 1u);
  EXPECT_EQ(rated[0].kind, ElementKind::property_element);
  EXPECT_EQ(rated[0].id, property_id("wind_power_plant", "installed capacity"));
  EXPECT_EQ(rated[0].on, MatchOn::property_synonym);
  EXPECT_TRUE(o.query_by_term("zeppelin").empty());
}

TEST(Mutators, CheckedAddsRejectBadInput) {
  Ontology o;
  o.add_concept("Rotor");
  EXPECT_EQ(error_code_of([&] { o.add_concept("rotor"); }), "duplicate-label");
  EXPECT_EQ(error_code_of([&] { o.add_concept("  "); }), "empty-label");
  EXPECT_EQ(error_code_of([&] { o.add_concept("Hub", {"hub"}); }), "synonym-is-label");
  EXPECT_EQ(error_code_of([&] { o.add_relation(RelationKind::has, "rotor", "blade"); }), "unknown-endpoint");
  o.add_concept("Blade");
  o.add_relation(RelationKind::has, "rotor", "blade");
  EXPECT_EQ(error_code_of([&] { o.add_relation(RelationKind::has, "rotor", "blade"); }), "duplicate-relation");
  EXPECT_EQ(error_code_of([&] { o.add_relation(RelationKind::is_a, "blade", "blade"); }), "is-a-cycle");
  EXPECT_EQ(error_code_of([&] { o.remove_concept("blade"); }), "element-in-use");
  o.remove_relation(RelationKind::has, "rotor", "blade");
  o.remove_concept("blade");
  EXPECT_EQ(o.find("blade"), nullptr);
}

TEST(Mutators, PropertiesAndSynonyms) {
  Ontology o;
  o.add_concept("Wind Turbine");
  o.add_property("wind_turbine", {"hub height", {}, ValueKind::quantity});
  EXPECT_EQ(error_code_of([&] { o.add_property("wind_turbine", {"Hub Height", {}, ValueKind::text}); }), "duplicate-property");
  EXPECT_EQ(error_code_of([&] { o.add_property("nope", {"x", {}, ValueKind::text}); }), "unknown-concept");
  o.add_synonym("wind_turbine", "WTG");
  o.add_synonym(property_id("wind_turbine", "hub height"), "tower height");
  EXPECT_EQ(error_code_of([&] { o.add_synonym("wind_turbine", "WTG"); }), "duplicate-synonym");
  EXPECT_TRUE(o.find("wind_turbine")->find_property("HUB HEIGHT")->synonyms.count("tower height"));
  o.remove_synonym("wind_turbine", "WTG");
  EXPECT_TRUE(o.find("wind_turbine")->synonyms.empty());
  o.remove_property("wind_turbine", "hub height");
  EXPECT_TRUE(o.find("wind_turbine")->properties.empty());
}

TEST(Mutators, SynonymCollisionIsAWarning) {
  Ontology o;
  o.add_concept("Generator");
  const AddResult r = o.add_concept("Wind Turbine", {"Generator"});
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].code, "synonym-collision");
}

TEST(Validate, ReportsUncheckedDamage) {
  Ontology o;
  o.put_concept({"a", "A", {}, {}});
  o.put_concept({"b", "a", {}, {}});
  o.put_relation({RelationKind::has, "a", "ghost"});
  o.put_relation({RelationKind::is_a, "a", "b"});
  o.put_relation({RelationKind::is_a, "b", "a"});
  const ValidationReport r = o.validate();
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has_error("duplicate-label"));
  EXPECT_TRUE(r.has_error("dangling-endpoint"));
  EXPECT_TRUE(r.has_error("is-a-cycle"));
  EXPECT_FALSE(o.is_a_topological_order().has_value());
}

TEST(Validate, DisconnectedConceptIsAWarning) {
  Ontology o;
  o.add_concept("A");
  o.add_concept("B");
  o.add_concept("C");
  o.add_relation(RelationKind::has, "a", "b");
  const ValidationReport r = o.validate();
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.has_warning("unreachable-concept"));
  EXPECT_EQ(r.warnings.back().elements, (std::vector<std::string>{"c"}));
}

TEST(CanonicalText, RoundTripsAndIgnoresInsertionOrder) {
  const Ontology seed = seed_wind_ontology();
  const std::string text = seed.canonical_text();
  EXPECT_EQ(Ontology::from_canonical_text(text), seed);
  gen::Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const Ontology o = gen::valid_ontology(rng, 20);
    EXPECT_EQ(Ontology::from_canonical_text(o.canonical_text()), o);
  }
  Ontology a, b;
  a.add_concept("X");
  a.add_concept("Y");
  b.add_concept("Y");
  b.add_concept("X");
  EXPECT_EQ(a.canonical_text(), b.canonical_text());
}

TEST(Taxonomy, RandomInsertionsStayAcyclic) {
  gen::Rng rng(4242);
  for (int round = 0; round < 100; ++round) {
    Ontology o;
    const std::size_t n = 2 + gen::pick(rng, 25);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(o.add_concept("c" + std::to_string(i)).id);
    for (int attempt = 0; attempt < 80; ++attempt) {
      const std::string& a = ids[gen::pick(rng, n)];
      const std::string& b = ids[gen::pick(rng, n)];
      try {
        o.add_relation(RelationKind::is_a, a, b);
      } catch (const Error& e) {
        ASSERT_TRUE(e.code() == "is-a-cycle" || e.code() == "duplicate-relation") << e.code();
        if (e.code() == "is-a-cycle") ASSERT_EQ(e.kind(), ErrorKind::validation);
      }
      const auto order = o.is_a_topological_order();
      ASSERT_TRUE(order.has_value());
      std::map<std::string, std::size_t> pos;
      for (std::size_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = i;
      for (const Relation& r : o.relations()) {
        if (r.kind == RelationKind::is_a) ASSERT_LT(pos[r.source], pos[r.target]);
      }
    }
    EXPECT_TRUE(o.validate().ok());
  }
}

TEST(Taxonomy, BackEdgeOnAnyPathIsRejected) {
  gen::Rng rng(77);
  for (int round = 0; round < 100; ++round) {
    Ontology o;
    const std::size_t n = 3 + gen::pick(rng, 15);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(o.add_concept("k" + std::to_string(i)).id);
    // A random chain is a path from its head to its tail.
    std::vector<std::string> chain;
    for (std::size_t i = 0; i < n; ++i) {
      if (gen::coin(rng, 0.6)) chain.push_back(ids[i]);
    }
    if (chain.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) o.add_relation(RelationKind::is_a, chain[i], chain[i + 1]);
    const std::size_t from = gen::pick(rng, chain.size() - 1);
    const std::size_t to = from + 1 + gen::pick(rng, chain.size() - from - 1);
    const Ontology before = o;
    EXPECT_EQ(error_code_of([&] { o.add_relation(RelationKind::is_a, chain[to], chain[from]); }), "is-a-cycle");
    EXPECT_EQ(o, before);
    // The other kinds are not ordered.
    o.add_relation(RelationKind::has, chain[to], chain[from]);
  }
}
