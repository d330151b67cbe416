#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "ontoforge/ontology.hpp"
#include "ontoforge/textmine.hpp"
#include "ontoforge/util.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Up to `max_tokens` tokens over an alphabet of `alphabet` symbols, split
/// into random sentences. Symbols 0 and 1 are "the" and "of" so that
/// stopword edge rules get exercised.
inline ontoforge::textmine::TokenStream token_stream(Rng& rng, std::size_t max_tokens = 200, std::size_t alphabet = 20) {
  ontoforge::textmine::TokenStream stream;
  const std::size_t total = pick(rng, max_tokens + 1);
  std::size_t made = 0;
  while (made < total) {
    const std::size_t len = std::min(total - made, 1 + pick(rng, 30));
    ontoforge::textmine::Sentence s;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t sym = pick(rng, alphabet);
      std::string w = sym == 0 ? "the" : sym == 1 ? "of" : "w" + std::to_string(sym);
      s.push_back({w, w, i});
    }
    stream.sentences.push_back(std::move(s));
    made += len;
  }
  return stream;
}

inline std::string random_word(Rng& rng) {
  static const std::vector<std::string> kParts = {
      "wind", "rotor", "blade", "grid", "pitch", "yaw", "nacelle", "vane", "tower", "mast",
      "hub", "sensor", "data", "power", "gear", "Ünit", "naïve", "quote\"d", "back\\slash", "a<b&c>",
      "semi;colon", "tab", "x-y", "O'Neil", "percent%", "hash#", "slash/", "dot.ted", "émile", "数据"};
  return kParts[pick(rng, kParts.size())];
}

inline std::string random_phrase(Rng& rng, std::size_t max_words = 3) {
  std::string out;
  const std::size_t n = 1 + pick(rng, max_words);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out.push_back(' ');
    out += random_word(rng);
  }
  if (coin(rng, 0.3)) out += " " + std::to_string(pick(rng, 1000));
  return out;
}

/// A random ontology that validates without errors: up to `max_concepts`
/// concepts with synonyms and properties, acyclic is_a edges and random
/// edges of the other kinds.
inline ontoforge::ontology::Ontology valid_ontology(Rng& rng, std::size_t max_concepts = 50) {
  using namespace ontoforge::ontology;
  Ontology o;
  if (coin(rng, 0.2)) o.set_base_iri("http://example.org/test/" + std::to_string(pick(rng, 100)) + "#");
  if (coin(rng, 0.2)) o.set_version("2." + std::to_string(pick(rng, 9)));
  const std::size_t n = pick(rng, max_concepts + 1);
  std::vector<std::string> ids;
  std::set<std::string> used_labels;
  for (std::size_t i = 0; ids.size() < n && i < n * 4; ++i) {
    const std::string label = random_phrase(rng);
    const std::string key = ontoforge::ascii_lower(label);
    if (used_labels.count(key) || o.find(ontoforge::slugify(label))) continue;
    std::set<std::string> synonyms;
    for (std::size_t k = pick(rng, 4); k > 0; --k) {
      std::string s = random_phrase(rng, 2);
      if (!ontoforge::iequals(s, label)) synonyms.insert(s);
    }
    o.add_concept(label, synonyms);
    used_labels.insert(key);
    const std::string id = ontoforge::slugify(label);
    std::set<std::string> prop_slugs;
    for (std::size_t k = pick(rng, 4); k > 0; --k) {
      PropertyDef p;
      p.name = random_phrase(rng, 2);
      if (!prop_slugs.insert(ontoforge::slugify(p.name)).second) continue;
      if (o.find(id)->find_property(p.name)) continue;
      p.value_kind = static_cast<ValueKind>(pick(rng, 4));
      for (std::size_t s = pick(rng, 3); s > 0; --s) {
        std::string syn = random_phrase(rng, 2);
        if (!ontoforge::iequals(syn, p.name)) p.synonyms.insert(syn);
      }
      o.add_property(id, p);
    }
    ids.push_back(id);
  }
  if (ids.size() >= 2) {
    const std::size_t edges = pick(rng, ids.size() * 2 + 1);
    for (std::size_t e = 0; e < edges; ++e) {
      std::size_t a = pick(rng, ids.size()), b = pick(rng, ids.size());
      if (a == b) continue;
      const auto kind = kAllRelationKinds[pick(rng, kAllRelationKinds.size())];
      // is_a only from later to earlier concepts, so it stays acyclic.
      if (kind == RelationKind::is_a && a < b) std::swap(a, b);
      if (o.has_relation(kind, ids[a], ids[b])) continue;
      o.add_relation(kind, ids[a], ids[b]);
    }
  }
  return o;
}

}  // namespace gen
