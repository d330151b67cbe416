#pragma once

// Random curation sessions. Each step proposes a plausible decision for the
// current state; proposals the session refuses are dropped, so the resulting
// log holds only decisions that were actually applied.

#include <vector>

#include "generators.hpp"
#include "ontoforge/curation.hpp"
#include "ontoforge/error.hpp"

namespace gen {

inline ontoforge::curation::Decision propose(Rng& rng, const ontoforge::curation::Session& s) {
  using namespace ontoforge;
  using curation::Action;
  curation::Decision d;
  d.seq = s.last_seq() + 1;
  d.at = parse_timestamp("2024-01-01T00:00:00Z") + std::chrono::seconds(d.seq);

  const auto& cands = s.candidates();
  const auto& concepts = s.draft().concepts();
  auto random_concept = [&]() -> std::string {
    if (concepts.empty()) return "none";
    auto it = concepts.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(pick(rng, concepts.size())));
    return it->first;
  };

  const std::size_t roll = pick(rng, 100);
  if (roll < 10 && concepts.size() >= 2) {
    d.action = Action::relate;
    d.payload.kind = ontology::kAllRelationKinds[pick(rng, ontology::kAllRelationKinds.size())];
    d.payload.source = random_concept();
    d.payload.target = random_concept();
    return d;
  }
  if (roll < 14 && !s.draft().relations().empty()) {
    auto it = s.draft().relations().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(pick(rng, s.draft().relations().size())));
    d.action = Action::unrelate;
    d.payload.kind = it->kind;
    d.payload.source = it->source;
    d.payload.target = it->target;
    return d;
  }

  const auto& c = cands[pick(rng, cands.size())];
  d.phrase = c.phrase;
  if (c.status != textmine::Status::pending) {
    d.action = Action::undo;
    return d;
  }
  const std::size_t kind = pick(rng, 10);
  if (kind < 4 || concepts.empty()) {
    d.action = Action::accept_concept;
    if (coin(rng, 0.3)) d.payload.label = c.phrase + " (term)";
  } else if (kind < 6) {
    d.action = Action::accept_property;
    d.payload.owner = random_concept();
    d.payload.value_kind = static_cast<ontology::ValueKind>(pick(rng, 4));
  } else if (kind < 8) {
    d.action = Action::accept_synonym;
    d.payload.target = random_concept();
  } else {
    d.action = Action::reject;
  }
  return d;
}

/// Runs `steps` proposals against `s`; returns how many were applied.
inline std::size_t drive(Rng& rng, ontoforge::curation::Session& s, std::size_t steps) {
  std::size_t applied = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    try {
      s.apply(propose(rng, s));
      ++applied;
    } catch (const ontoforge::Error&) {
    }
  }
  return applied;
}

}  // namespace gen
