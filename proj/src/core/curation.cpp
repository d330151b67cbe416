#include "ontoforge/curation.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <filesystem>
#include <random>

#include "json.hpp"
#include "ontoforge/error.hpp"

namespace ontoforge::curation {

using json = nlohmann::json;
using ontology::Ontology;
using textmine::CandidateTerm;
using textmine::Status;

namespace {

const std::pair<Action, const char*> kActionNames[] = {
    {Action::accept_concept, "accept_concept"}, {Action::accept_property, "accept_property"},
    {Action::accept_synonym, "accept_synonym"}, {Action::reject, "reject"},
    {Action::undo, "undo"},                     {Action::relate, "relate"},
    {Action::unrelate, "unrelate"},
};

const std::string& require(const std::optional<std::string>& field, const char* name, Action action) {
  if (!field || trim(*field).empty()) {
    throw Error(ErrorKind::invalid_argument, "missing-payload",
                to_string(action) + " requires payload field '" + name + "'");
  }
  return *field;
}

std::string label_or_phrase(const Payload& p, const std::string& phrase) {
  if (p.label && !trim(*p.label).empty()) return trim(*p.label);
  return phrase;
}

}  // namespace

std::string to_string(Action a) {
  for (const auto& [value, name] : kActionNames)
    if (value == a) return name;
  return "reject";
}

Action action_from_string(const std::string& s) {
  std::string key = ascii_lower(trim(s));
  std::replace(key.begin(), key.end(), '-', '_');
  for (const auto& [value, name] : kActionNames)
    if (key == name) return value;
  throw Error(ErrorKind::invalid_argument, "unknown-action", "unknown decision action '" + s + "'");
}

std::string payload_to_json(const Payload& p) {
  json j = json::object();
  if (p.label) j["label"] = *p.label;
  if (p.owner) j["owner"] = *p.owner;
  if (p.target) j["target"] = *p.target;
  if (p.source) j["source"] = *p.source;
  if (p.value_kind) j["value_kind"] = ontology::to_string(*p.value_kind);
  if (p.kind) j["kind"] = ontology::to_string(*p.kind);
  return j.dump();
}

namespace {

Payload payload_from(const json& j) {
  Payload p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw Error(ErrorKind::invalid_argument, "bad-payload", "payload must be a JSON object");
  auto str = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string()) {
      throw Error(ErrorKind::invalid_argument, "bad-payload", std::string("payload field '") + key + "' must be a string");
    }
    return j[key].get<std::string>();
  };
  p.label = str("label");
  p.owner = str("owner");
  p.target = str("target");
  p.source = str("source");
  if (auto vk = str("value_kind")) p.value_kind = ontology::value_kind_from_string(*vk);
  if (auto k = str("kind")) p.kind = ontology::relation_kind_from_string(*k);
  return p;
}

}  // namespace

Payload payload_from_json(const std::string& json_object) {
  if (trim(json_object).empty()) return {};
  json j;
  try {
    j = json::parse(json_object);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, "bad-payload", e.what());
  }
  return payload_from(j);
}

std::string decision_to_json(const Decision& d) {
  json j = {{"seq", d.seq},
            {"phrase", d.phrase},
            {"action", to_string(d.action)},
            {"payload", json::parse(payload_to_json(d.payload))},
            {"at", format_timestamp(d.at)}};
  return j.dump();
}

Decision decision_from_json(const std::string& line) {
  try {
    const json j = json::parse(line);
    Decision d;
    d.seq = j.at("seq").get<long long>();
    d.phrase = j.value("phrase", "");
    d.action = action_from_string(j.at("action").get<std::string>());
    d.payload = payload_from(j.value("payload", json::object()));
    d.at = parse_timestamp(j.at("at").get<std::string>());
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, "malformed-record", e.what());
  }
}

Session::Session(SessionInfo info, std::vector<CandidateTerm> initial, Ontology base)
    : info_(std::move(info)), initial_(std::move(initial)), base_(std::move(base)) {
  candidates_ = initial_;
  draft_ = base_;
  for (std::size_t i = 0; i < candidates_.size(); ++i) index_.emplace(candidates_[i].phrase, i);
}

const CandidateTerm* Session::find(const std::string& phrase) const {
  const auto it = index_.find(phrase);
  return it == index_.end() ? nullptr : &candidates_[it->second];
}

Outcome Session::decide(const std::string& phrase, Action action, const Payload& payload, std::optional<Timestamp> at) {
  return apply(Decision{last_seq() + 1, phrase, action, payload, at.value_or(now_utc())});
}

Outcome Session::undo(const std::string& phrase, std::optional<Timestamp> at) {
  return decide(phrase, Action::undo, {}, at);
}

Outcome Session::relate(ontology::RelationKind kind, const std::string& source, const std::string& target,
                        std::optional<Timestamp> at) {
  Payload p;
  p.kind = kind;
  p.source = source;
  p.target = target;
  return decide("", Action::relate, p, at);
}

Outcome Session::unrelate(ontology::RelationKind kind, const std::string& source, const std::string& target,
                          std::optional<Timestamp> at) {
  Payload p;
  p.kind = kind;
  p.source = source;
  p.target = target;
  return decide("", Action::unrelate, p, at);
}

Outcome Session::apply(const Decision& d) {
  if (d.seq != last_seq() + 1) {
    throw Error(ErrorKind::conflict, "gap-in-log",
                "expected seq " + std::to_string(last_seq() + 1) + ", got " + std::to_string(d.seq));
  }

  // Work on copies so a rejected decision leaves no trace.
  Ontology draft = draft_;
  Outcome outcome{d.seq, {}};
  std::optional<std::pair<std::size_t, CandidateTerm>> changed;
  std::map<std::string, Effect> effects = effects_;

  if (d.action == Action::relate || d.action == Action::unrelate) {
    if (!d.payload.kind) {
      throw Error(ErrorKind::invalid_argument, "missing-payload", to_string(d.action) + " requires payload field 'kind'");
    }
    const std::string& source = require(d.payload.source, "source", d.action);
    const std::string& target = require(d.payload.target, "target", d.action);
    if (d.action == Action::relate) {
      draft.add_relation(*d.payload.kind, source, target);
    } else {
      draft.remove_relation(*d.payload.kind, source, target);
    }
  } else {
    const auto it = index_.find(d.phrase);
    if (it == index_.end()) throw Error(ErrorKind::not_found, "unknown-candidate", "no candidate '" + d.phrase + "'");
    CandidateTerm c = candidates_[it->second];
    if (d.action == Action::undo) {
      apply_undo(d, draft, c, effects);
    } else {
      outcome = apply_candidate_action(d, draft, c, effects);
    }
    changed.emplace(it->second, std::move(c));
  }

  if (sink_) sink_(d);

  draft_ = std::move(draft);
  effects_ = std::move(effects);
  if (changed) candidates_[changed->first] = std::move(changed->second);
  log_.push_back(d);
  return outcome;
}

Outcome Session::apply_candidate_action(const Decision& d, Ontology& draft, CandidateTerm& c,
                                        std::map<std::string, Effect>& effects) const {
  if (c.status != Status::pending) {
    throw Error(ErrorKind::conflict, "already-decided",
                "candidate '" + c.phrase + "' is already " + textmine::to_string(c.status));
  }
  Outcome outcome{d.seq, {}};
  Effect effect{d.action, "", "", ""};

  switch (d.action) {
    case Action::accept_concept: {
      const std::string label = label_or_phrase(d.payload, c.phrase);
      ontology::AddResult added = draft.add_concept(label);
      outcome.warnings = std::move(added.warnings);
      effect.element = added.id;
      effect.text = label;
      c.status = Status::as_concept;
      c.linked_element = added.id;
      break;
    }
    case Action::accept_property: {
      const std::string& owner = require(d.payload.owner, "owner", d.action);
      const std::string name = label_or_phrase(d.payload, c.phrase);
      ontology::PropertyDef def{name, {}, d.payload.value_kind.value_or(ontology::ValueKind::text)};
      draft.add_property(owner, def);
      effect.element = ontology::property_id(owner, name);
      effect.owner = owner;
      effect.text = name;
      c.status = Status::as_property;
      c.linked_element = effect.element;
      break;
    }
    case Action::accept_synonym: {
      const std::string& target = require(d.payload.target, "target", d.action);
      const std::string text = label_or_phrase(d.payload, c.phrase);
      outcome.warnings = draft.add_synonym(target, text);
      effect.element = target;
      effect.text = text;
      c.status = Status::as_synonym;
      c.linked_element = target;
      break;
    }
    case Action::reject:
      c.status = Status::rejected;
      c.linked_element.reset();
      break;
    default:
      throw Error(ErrorKind::internal, "bad-action", "unexpected action " + to_string(d.action));
  }
  c.decided_at = d.at;
  effects[c.phrase] = effect;
  return outcome;
}

void Session::apply_undo(const Decision& d, Ontology& draft, CandidateTerm& c,
                         std::map<std::string, Effect>& effects) const {
  (void)d;
  if (c.status == Status::pending) {
    throw Error(ErrorKind::conflict, "not-decided", "candidate '" + c.phrase + "' has no decision to undo");
  }
  const Effect effect = effects.at(c.phrase);

  // Other accepted candidates that hang off the element this one created.
  auto dependents_of = [&](const std::string& element, bool include_children) {
    std::vector<std::string> out;
    for (const CandidateTerm& other : candidates_) {
      if (other.phrase == c.phrase || !other.linked_element) continue;
      const std::string& link = *other.linked_element;
      if (link == element || (include_children && link.rfind(element + ".", 0) == 0)) out.push_back(other.phrase);
    }
    return out;
  };
  auto refuse = [&](const std::string& element, const std::vector<std::string>& users) {
    std::string list;
    for (const std::string& u : users) list += (list.empty() ? "" : ", ") + u;
    throw Error(ErrorKind::conflict, "element-in-use", "'" + element + "' is still used by: " + list);
  };

  switch (effect.action) {
    case Action::accept_concept: {
      if (auto users = dependents_of(effect.element, true); !users.empty()) refuse(effect.element, users);
      draft.remove_concept(effect.element);
      break;
    }
    case Action::accept_property: {
      if (auto users = dependents_of(effect.element, false); !users.empty()) refuse(effect.element, users);
      draft.remove_property(effect.owner, effect.text);
      break;
    }
    case Action::accept_synonym:
      draft.remove_synonym(effect.element, effect.text);
      break;
    default:
      break;
  }
  c.status = Status::pending;
  c.linked_element.reset();
  c.decided_at.reset();
  effects.erase(c.phrase);
}

bool Session::same_state(const Session& other) const {
  return candidates_ == other.candidates_ && draft_ == other.draft_ && log_ == other.log_;
}

std::string new_session_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
  return buf;
}

Session open_session(const corpus::Corpus& corpus, const textmine::PipelineConfig& config, const OpenOptions& options) {
  if (corpus.articles.empty()) throw Error(ErrorKind::invalid_argument, "empty-corpus", "the corpus has no articles");
  config.check();
  std::vector<CandidateTerm> candidates = textmine::rank_candidates(textmine::mine_corpus(corpus, config), config);
  SessionInfo info;
  info.id = options.id.empty() ? new_session_id() : options.id;
  info.corpus_ref = corpus.content_digest();
  info.config_digest = config.digest();
  info.from_seed = options.from_seed;
  info.created_at = now_utc();
  return Session(std::move(info), std::move(candidates),
                 options.from_seed ? ontology::seed_wind_ontology() : Ontology());
}

Session replay(const std::vector<Decision>& log, const std::vector<CandidateTerm>& initial, const Ontology& base,
               SessionInfo info) {
  for (std::size_t i = 0; i < log.size(); ++i) {
    if (log[i].seq != static_cast<long long>(i) + 1) {
      throw Error(ErrorKind::validation, "gap-in-log",
                  "expected seq " + std::to_string(i + 1) + ", found " + std::to_string(log[i].seq));
    }
  }
  Session session(std::move(info), initial, base);
  for (const Decision& d : log) {
    try {
      session.apply(d);
    } catch (const Error& e) {
      throw Error(ErrorKind::validation, "invalid-decision-at-seq",
                  "decision " + std::to_string(d.seq) + " (" + to_string(d.action) + " '" + d.phrase +
                      "') failed: " + e.code() + ": " + e.what());
    }
  }
  return session;
}

void append_line_durable(const std::string& path, const std::string& line) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(ErrorKind::io, "io-error", "cannot open " + path + ": " + std::strerror(errno));
  std::string data = line;
  data.push_back('\n');
  const char* p = data.data();
  std::size_t left = data.size();
  while (left > 0) {
    const ssize_t n = ::write(fd, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      throw Error(ErrorKind::io, "io-error", "cannot write " + path + ": " + std::strerror(err));
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    const int err = errno;
    ::close(fd);
    throw Error(ErrorKind::io, "io-error", "fsync failed on " + path + ": " + std::strerror(err));
  }
  ::close(fd);
}

std::string pipeline_config_to_json(const textmine::PipelineConfig& c) {
  json j = {{"nmax", c.nmax},
            {"min_frequency", c.min_frequency},
            {"keep_interior_stopwords", c.keep_interior_stopwords},
            {"case_fold", c.case_fold},
            {"stopwords", c.stopwords},
            {"entity_gazetteer", c.entity_gazetteer}};
  return j.dump();
}

textmine::PipelineConfig pipeline_config_from_json(const std::string& json_object) {
  textmine::PipelineConfig c = textmine::PipelineConfig::defaults();
  if (trim(json_object).empty()) return c;
  json j;
  try {
    j = json::parse(json_object);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, "bad-config", e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::invalid_argument, "bad-config", "config must be a JSON object");
  try {
    if (j.contains("nmax")) c.nmax = j["nmax"].get<int>();
    if (j.contains("min_frequency")) c.min_frequency = j["min_frequency"].get<long long>();
    if (j.contains("keep_interior_stopwords")) c.keep_interior_stopwords = j["keep_interior_stopwords"].get<bool>();
    if (j.contains("case_fold")) c.case_fold = j["case_fold"].get<bool>();
    if (j.contains("stopwords")) c.stopwords = j["stopwords"].get<std::set<std::string>>();
    if (j.contains("entity_gazetteer")) c.entity_gazetteer = j["entity_gazetteer"].get<std::set<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, "bad-config", e.what());
  }
  c.check();
  return c;
}

SessionStore::SessionStore(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::io, "io-error", "cannot create " + dir_ + ": " + ec.message());
}

std::string SessionStore::log_path(const std::string& id) const { return dir_ + "/" + id + ".log"; }
std::string SessionStore::snapshot_path(const std::string& id) const { return dir_ + "/" + id + ".candidates.jsonl"; }

bool SessionStore::exists(const std::string& id) const {
  return std::filesystem::exists(snapshot_path(id));
}

std::vector<std::string> SessionStore::list() const {
  std::vector<std::string> ids;
  const std::string suffix = ".candidates.jsonl";
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      ids.push_back(name.substr(0, name.size() - suffix.size()));
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

void SessionStore::attach(Session& session) const {
  const std::string path = log_path(session.id());
  session.set_log_sink([path](const Decision& d) { append_line_durable(path, decision_to_json(d)); });
}

void SessionStore::create(Session& session, const textmine::PipelineConfig& config) const {
  const SessionInfo& info = session.info();
  if (info.id.empty() || info.id.find('/') != std::string::npos || info.id.find("..") != std::string::npos) {
    throw Error(ErrorKind::invalid_argument, "bad-session-id", "unusable session id '" + info.id + "'");
  }
  json header = {{"session", info.id},
                 {"corpus_ref", info.corpus_ref},
                 {"config_digest", info.config_digest},
                 {"config", json::parse(pipeline_config_to_json(config))},
                 {"base", info.from_seed ? "seed" : "empty"},
                 {"created_at", format_timestamp(info.created_at)}};
  write_file(snapshot_path(info.id), header.dump() + "\n" + textmine::serialize_candidates(session.initial_candidates()));
  write_file(log_path(info.id), "");
  for (const Decision& d : session.decisions()) append_line_durable(log_path(info.id), decision_to_json(d));
  attach(session);
}

Session SessionStore::load(const std::string& id) const {
  if (id.empty() || id.find('/') != std::string::npos || !exists(id)) {
    throw Error(ErrorKind::not_found, "unknown-session", "no session '" + id + "'");
  }
  const std::string snapshot = read_file(snapshot_path(id));
  const std::size_t eol = snapshot.find('\n');
  SessionInfo info;
  bool from_seed = false;
  try {
    const json header = json::parse(snapshot.substr(0, eol));
    info.id = header.at("session").get<std::string>();
    info.corpus_ref = header.value("corpus_ref", "");
    info.config_digest = header.value("config_digest", "");
    from_seed = header.value("base", "empty") == "seed";
    info.created_at = parse_timestamp(header.at("created_at").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, "malformed-record", snapshot_path(id) + " line 1: " + e.what());
  }
  info.from_seed = from_seed;
  const std::vector<CandidateTerm> initial =
      textmine::parse_candidates(eol == std::string::npos ? std::string() : snapshot.substr(eol + 1));

  std::vector<Decision> log;
  const std::string log_text = std::filesystem::exists(log_path(id)) ? read_file(log_path(id)) : std::string();
  const std::vector<std::string> lines = split_lines(log_text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      log.push_back(decision_from_json(lines[i]));
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, "malformed-record", log_path(id) + " line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  Session session = replay(log, initial, from_seed ? ontology::seed_wind_ontology() : Ontology(), info);
  attach(session);
  return session;
}

}  // namespace ontoforge::curation
