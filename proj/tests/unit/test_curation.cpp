#include <gtest/gtest.h>

#include <filesystem>

#include "decisions.hpp"
#include "ontoforge/curation.hpp"
#include "ontoforge/error.hpp"
#include "paths.hpp"

using namespace ontoforge;
using namespace ontoforge::curation;
using textmine::Status;

namespace {

const corpus::Corpus& fixture() {
  static const corpus::Corpus c = corpus::load_fixture_corpus(testpaths::source("fixtures/corpus.jsonl"));
  return c;
}

Session fresh(bool from_seed = false) {
  return open_session(fixture(), textmine::PipelineConfig::defaults(), {from_seed, "test"});
}

Payload label(const std::string& l) {
  Payload p;
  p.label = l;
  return p;
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

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() / ("ontoforge-curation-" + new_session_id());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Session, StartsPendingWithRankedCandidates) {
  const Session s = fresh();
  ASSERT_FALSE(s.candidates().empty());
  EXPECT_EQ(s.candidates()[0].phrase, "wind");
  for (const auto& c : s.candidates()) EXPECT_EQ(c.status, Status::pending);
  EXPECT_EQ(s.last_seq(), 0);
  EXPECT_TRUE(s.draft().concepts().empty());
  EXPECT_EQ(s.info().corpus_ref, fixture().content_digest());
  EXPECT_EQ(fresh(true).draft().concepts().size(), 47u);
}

TEST(Session, AcceptConceptPropertySynonymReject) {
  Session s = fresh();
  EXPECT_EQ(s.decide("wind turbine", Action::accept_concept).seq, 1);
  EXPECT_EQ(s.find("wind turbine")->status, Status::as_concept);
  EXPECT_EQ(s.find("wind turbine")->linked_element, "wind_turbine");
  EXPECT_EQ(s.draft().find("wind_turbine")->label, "wind turbine");

  s.decide("wind farm", Action::accept_concept, label("Wind Farm"));
  EXPECT_EQ(s.draft().find("wind_farm")->label, "Wind Farm");

  Payload prop;
  prop.owner = "wind_farm";
  prop.value_kind = ontology::ValueKind::quantity;
  s.decide("capacity factor", Action::accept_property, prop);
  const auto* p = s.draft().find("wind_farm")->find_property("capacity factor");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->value_kind, ontology::ValueKind::quantity);
  EXPECT_EQ(s.find("capacity factor")->linked_element, "wind_farm.capacity_factor");

  Payload syn;
  syn.target = "wind_turbine";
  s.decide("turbine", Action::accept_synonym, syn);
  EXPECT_TRUE(s.draft().find("wind_turbine")->synonyms.count("turbine"));

  s.decide("power", Action::reject);
  EXPECT_EQ(s.find("power")->status, Status::rejected);
  EXPECT_EQ(s.last_seq(), 5);
  EXPECT_EQ(s.decisions().size(), 5u);
}

TEST(Session, ErrorsLeaveStateUntouched) {
  Session s = fresh();
  s.decide("rotor", Action::accept_concept);
  const std::vector<textmine::CandidateTerm> before = s.candidates();
  const ontology::Ontology draft = s.draft();
  EXPECT_EQ(error_code_of([&] { s.decide("rotor", Action::reject); }), "already-decided");
  EXPECT_EQ(error_code_of([&] { s.decide("no such phrase", Action::reject); }), "unknown-candidate");
  EXPECT_EQ(error_code_of([&] { s.undo("wind"); }), "not-decided");
  EXPECT_EQ(error_code_of([&] { s.decide("wind", Action::accept_property); }), "missing-payload");
  Payload bad;
  bad.owner = "ghost";
  EXPECT_EQ(error_code_of([&] { s.decide("wind", Action::accept_property, bad); }), "unknown-concept");
  EXPECT_EQ(error_code_of([&] { s.relate(ontology::RelationKind::is_a, "rotor", "rotor"); }), "is-a-cycle");
  EXPECT_EQ(s.candidates(), before);
  EXPECT_EQ(s.draft(), draft);
  EXPECT_EQ(s.last_seq(), 1);
}

TEST(Session, UndoRestoresPendingAndDraft) {
  Session s = fresh();
  const ontology::Ontology empty = s.draft();
  s.decide("nacelle", Action::accept_concept);
  s.undo("nacelle");
  EXPECT_EQ(s.find("nacelle")->status, Status::pending);
  EXPECT_FALSE(s.find("nacelle")->linked_element);
  EXPECT_EQ(s.draft(), empty);
  EXPECT_EQ(s.decisions().back().action, Action::undo);
  s.decide("nacelle", Action::reject);
  s.undo("nacelle");
  s.decide("nacelle", Action::accept_concept, label("Nacelle"));
  EXPECT_EQ(s.last_seq(), 5);
}

TEST(Session, UndoRefusesWhileOthersDependOnElement) {
  Session s = fresh();
  s.decide("wind farm", Action::accept_concept);
  Payload prop;
  prop.owner = "wind_farm";
  s.decide("capacity factor", Action::accept_property, prop);
  Payload syn;
  syn.target = "wind_farm";
  s.decide("farm", Action::accept_synonym, syn);
  EXPECT_EQ(error_code_of([&] { s.undo("wind farm"); }), "element-in-use");
  s.undo("farm");
  EXPECT_EQ(error_code_of([&] { s.undo("wind farm"); }), "element-in-use");
  s.undo("capacity factor");

  s.decide("rotor", Action::accept_concept);
  s.relate(ontology::RelationKind::has, "wind_farm", "rotor");
  EXPECT_EQ(error_code_of([&] { s.undo("rotor"); }), "element-in-use");
  s.unrelate(ontology::RelationKind::has, "wind_farm", "rotor");
  s.undo("rotor");
  s.undo("wind farm");
  EXPECT_TRUE(s.draft().concepts().empty());
}

TEST(Session, DecisionJsonRoundTrip) {
  Decision d;
  d.seq = 12;
  d.phrase = "cut-in \"speed\"";
  d.action = Action::relate;
  d.payload.kind = ontology::RelationKind::measures;
  d.payload.source = "a";
  d.payload.target = "b";
  d.payload.value_kind = ontology::ValueKind::date;
  d.at = parse_timestamp("2024-02-02T12:00:00Z");
  EXPECT_EQ(decision_from_json(decision_to_json(d)), d);
  EXPECT_EQ(error_code_of([] { decision_from_json("{\"seq\": 1, \"action\": \"explode\", \"phrase\": \"x\"}"); }),
            "unknown-action");
}

TEST(Replay, RandomSequencesReproduceLiveState) {
  const Session base = fresh();
  gen::Rng rng(8080);
  for (int run = 0; run < 100; ++run) {
    Session live = base;
    gen::drive(rng, live, 5 + gen::pick(rng, 60));
    const Session again = replay(live.decisions(), live.initial_candidates(), live.base(), live.info());
    ASSERT_TRUE(again.same_state(live)) << "run " << run;
  }
}

TEST(Replay, RejectsGapsAndInvalidDecisions) {
  Session s = fresh();
  s.decide("wind", Action::accept_concept);
  s.decide("power", Action::reject);
  std::vector<Decision> log = s.decisions();
  std::vector<Decision> gap = log;
  gap[1].seq = 3;
  EXPECT_EQ(error_code_of([&] { replay(gap, s.initial_candidates()); }), "gap-in-log");
  std::vector<Decision> bad = log;
  bad[1].phrase = "wind";
  try {
    replay(bad, s.initial_candidates());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "invalid-decision-at-seq");
    EXPECT_NE(std::string(e.what()).find("decision 2"), std::string::npos) << e.what();
  }
  Decision skip = log[0];
  skip.seq = 5;
  EXPECT_EQ(error_code_of([&] { s.apply(skip); }), "gap-in-log");
}

TEST(Store, PersistsAndReloads) {
  TempDir dir;
  SessionStore store(dir.str());
  const auto cfg = textmine::PipelineConfig::defaults();
  Session s = open_session(fixture(), cfg, {false, "abc123"});
  store.create(s, cfg);
  s.decide("wind", Action::accept_concept, label("Wind"));
  s.decide("rotor", Action::accept_concept);
  s.relate(ontology::RelationKind::has, "wind", "rotor");
  s.decide("power", Action::reject);
  EXPECT_TRUE(store.exists("abc123"));
  EXPECT_EQ(store.list(), (std::vector<std::string>{"abc123"}));

  Session loaded = store.load("abc123");
  EXPECT_TRUE(loaded.same_state(s));
  EXPECT_EQ(loaded.info().corpus_ref, s.info().corpus_ref);
  loaded.undo("power");
  EXPECT_TRUE(store.load("abc123").same_state(loaded));
  EXPECT_EQ(error_code_of([&] { store.load("missing"); }), "unknown-session");
  EXPECT_EQ(error_code_of([&] { store.load("../etc"); }), "unknown-session");
}

TEST(Store, FailedDecisionIsNotLogged) {
  TempDir dir;
  SessionStore store(dir.str());
  const auto cfg = textmine::PipelineConfig::defaults();
  Session s = open_session(fixture(), cfg, {false, "s1"});
  store.create(s, cfg);
  s.decide("wind", Action::accept_concept);
  EXPECT_THROW(s.decide("wind", Action::reject), Error);
  EXPECT_EQ(split_lines(read_file(store.log_path("s1"))).size(), 1u);
}

TEST(Store, ConfigJsonRoundTrip) {
  auto cfg = textmine::PipelineConfig::defaults();
  cfg.nmax = 2;
  cfg.keep_interior_stopwords = false;
  cfg.entity_gazetteer.insert("horns rev");
  const auto back = pipeline_config_from_json(pipeline_config_to_json(cfg));
  EXPECT_EQ(back.digest(), cfg.digest());
  EXPECT_EQ(back.stopwords, cfg.stopwords);
}

TEST(Open, EmptyCorpusIsRefused) {
  EXPECT_EQ(error_code_of([] { open_session(corpus::Corpus{}, textmine::PipelineConfig::defaults()); }), "empty-corpus");
}
