#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontoforge/corpus.hpp"
#include "ontoforge/ontology.hpp"
#include "ontoforge/textmine.hpp"

namespace ontoforge::curation {

/// accept_* / reject / undo act on a candidate phrase. relate / unrelate
/// edit relations between draft concepts and carry an empty phrase.
enum class Action { accept_concept, accept_property, accept_synonym, reject, undo, relate, unrelate };
std::string to_string(Action a);
Action action_from_string(const std::string& s);

/// Action-specific arguments; unused fields stay empty.
struct Payload {
  std::optional<std::string> label;   // concept label, property name, or synonym text
  std::optional<std::string> owner;   // accept_property: owning concept id
  std::optional<std::string> target;  // accept_synonym: element id; relate: target concept id
  std::optional<std::string> source;  // relate: source concept id
  std::optional<ontology::ValueKind> value_kind;
  std::optional<ontology::RelationKind> kind;

  bool operator==(const Payload&) const = default;
};

struct Decision {
  long long seq = 0;
  std::string phrase;
  Action action = Action::reject;
  Payload payload;
  Timestamp at{};

  bool operator==(const Decision&) const = default;
};

std::string decision_to_json(const Decision& d);
Decision decision_from_json(const std::string& line);
Payload payload_from_json(const std::string& json_object);
std::string payload_to_json(const Payload& p);

struct Outcome {
  long long seq = 0;
  std::vector<ontology::Issue> warnings;
};

struct SessionInfo {
  std::string id;
  std::string corpus_ref;     // corpus content digest
  std::string config_digest;
  bool from_seed = false;
  Timestamp created_at{};
};

/// Called with each decision after it validated and before it takes effect.
/// Throwing aborts the decision (used for the durable log append).
using LogSink = std::function<void(const Decision&)>;

/// The manual review phase: ranked candidates, an append-only decision log
/// and the ontology draft they produce. Replaying the log over the initial
/// candidates reproduces the live state exactly.
class Session {
 public:
  Session(SessionInfo info, std::vector<textmine::CandidateTerm> initial, ontology::Ontology base);

  const SessionInfo& info() const { return info_; }
  const std::string& id() const { return info_.id; }
  const std::vector<textmine::CandidateTerm>& candidates() const { return candidates_; }
  const std::vector<textmine::CandidateTerm>& initial_candidates() const { return initial_; }
  const std::vector<Decision>& decisions() const { return log_; }
  const ontology::Ontology& draft() const { return draft_; }
  const ontology::Ontology& base() const { return base_; }
  long long last_seq() const { return log_.empty() ? 0 : log_.back().seq; }
  const textmine::CandidateTerm* find(const std::string& phrase) const;

  void set_log_sink(LogSink sink) { sink_ = std::move(sink); }

  Outcome decide(const std::string& phrase, Action action, const Payload& payload = {}, std::optional<Timestamp> at = {});
  Outcome undo(const std::string& phrase, std::optional<Timestamp> at = {});
  Outcome relate(ontology::RelationKind kind, const std::string& source, const std::string& target,
                 std::optional<Timestamp> at = {});
  Outcome unrelate(ontology::RelationKind kind, const std::string& source, const std::string& target,
                   std::optional<Timestamp> at = {});

  /// Applies a fully formed decision; its seq must be last_seq() + 1.
  Outcome apply(const Decision& d);

  /// Same candidate statuses, draft and log.
  bool same_state(const Session& other) const;

 private:
  // What a candidate's accept decision created, for undo.
  struct Effect {
    Action action;
    std::string element;  // concept id, property id, or synonym target
    std::string owner;    // accept_property: owner concept id
    std::string text;     // label / property name / synonym text
  };

  Outcome apply_candidate_action(const Decision& d, ontology::Ontology& draft, textmine::CandidateTerm& c,
                                 std::map<std::string, Effect>& effects) const;
  void apply_undo(const Decision& d, ontology::Ontology& draft, textmine::CandidateTerm& c,
                  std::map<std::string, Effect>& effects) const;

  SessionInfo info_;
  std::vector<textmine::CandidateTerm> initial_;
  std::vector<textmine::CandidateTerm> candidates_;
  std::map<std::string, std::size_t> index_;
  ontology::Ontology base_;
  ontology::Ontology draft_;
  std::vector<Decision> log_;
  std::map<std::string, Effect> effects_;
  LogSink sink_;
};

struct OpenOptions {
  bool from_seed = false;
  std::string id;  // generated when empty
};

/// Mines the corpus and starts a session with every candidate pending.
/// Throws Error(invalid_argument, "empty-corpus") for a corpus without articles.
Session open_session(const corpus::Corpus& corpus, const textmine::PipelineConfig& config, const OpenOptions& options = {});

/// Rebuilds a session from its log. Throws "gap-in-log" when sequence numbers
/// are not 1, 2, 3, ..., and "invalid-decision-at-seq" naming the first bad seq.
Session replay(const std::vector<Decision>& log, const std::vector<textmine::CandidateTerm>& initial,
               const ontology::Ontology& base = ontology::Ontology(), SessionInfo info = {});

std::string new_session_id();

/// Files under a data directory: `<id>.candidates.jsonl` (header + initial
/// candidates) and `<id>.log` (one decision per line, fsync'd on append).
class SessionStore {
 public:
  explicit SessionStore(std::string dir);

  const std::string& dir() const { return dir_; }
  std::string log_path(const std::string& id) const;
  std::string snapshot_path(const std::string& id) const;

  /// Writes the snapshot and an empty log, and installs the log sink.
  void create(Session& session, const textmine::PipelineConfig& config) const;
  /// Loads and replays; installs the log sink. Throws Error(not_found).
  Session load(const std::string& id) const;
  bool exists(const std::string& id) const;
  std::vector<std::string> list() const;
  void attach(Session& session) const;

 private:
  std::string dir_;
};

void append_line_durable(const std::string& path, const std::string& line);

std::string pipeline_config_to_json(const textmine::PipelineConfig& c);
textmine::PipelineConfig pipeline_config_from_json(const std::string& json_object);

}  // namespace ontoforge::curation
