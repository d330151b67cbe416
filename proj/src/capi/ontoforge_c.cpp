#include "ontoforge/ontoforge.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"
#include "ontoforge/corpus.hpp"
#include "ontoforge/curation.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/ontology.hpp"
#include "ontoforge/owl.hpp"
#include "ontoforge/textmine.hpp"

using json = nlohmann::json;
using namespace ontoforge;

struct of_corpus {
  corpus::Corpus value;
};

struct of_ontology {
  ontology::Ontology value;
};

struct of_store {
  curation::SessionStore value;
};

struct of_session {
  explicit of_session(curation::Session s) : value(std::move(s)) {}
  std::mutex mutex;  // one writer per session
  curation::Session value;
  std::optional<curation::SessionStore> store;
};

namespace {

thread_local std::string g_error_code;
thread_local std::string g_error_message;

of_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return OF_ERR_INVALID_ARGUMENT;
    case ErrorKind::not_found: return OF_ERR_NOT_FOUND;
    case ErrorKind::network: return OF_ERR_NETWORK;
    case ErrorKind::parse: return OF_ERR_PARSE;
    case ErrorKind::conflict: return OF_ERR_CONFLICT;
    case ErrorKind::validation: return OF_ERR_VALIDATION;
    case ErrorKind::io: return OF_ERR_IO;
    case ErrorKind::internal: return OF_ERR_INTERNAL;
  }
  return OF_ERR_INTERNAL;
}

of_status fail(of_status status, std::string code, std::string message) {
  g_error_code = std::move(code);
  g_error_message = std::move(message);
  return status;
}

template <class F>
of_status guarded(F&& body) {
  g_error_code.clear();
  g_error_message.clear();
  try {
    body();
    return OF_OK;
  } catch (const Error& e) {
    return fail(status_for(e.kind()), e.code(), e.what());
  } catch (const json::exception& e) {
    return fail(OF_ERR_INVALID_ARGUMENT, "bad-json", e.what());
  } catch (const std::bad_alloc&) {
    return fail(OF_ERR_INTERNAL, "out-of-memory", "allocation failed");
  } catch (const std::exception& e) {
    return fail(OF_ERR_INTERNAL, "internal", e.what());
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw Error(ErrorKind::invalid_argument, "null-argument", std::string(name) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string str_or_empty(const char* s) { return s ? std::string(s) : std::string(); }

json parse_object(const char* text, const char* what) {
  if (text == nullptr || trim(text).empty()) return json::object();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, "bad-json", std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::invalid_argument, "bad-json", std::string(what) + " must be a JSON object");
  return j;
}

corpus::AcquisitionConfig acquisition_config(const json& j) {
  corpus::AcquisitionConfig c;
  c.source = corpus::source_kind_from_string(j.value("source", "fixture"));
  c.fixture_dir = j.value("fixture_dir", "");
  c.api_url = j.value("api_url", "");
  c.user_agent = j.value("user_agent", "");
  if (j.contains("max_links")) c.max_links = j["max_links"].get<std::size_t>();
  if (j.contains("max_concurrent")) c.max_concurrent = j["max_concurrent"].get<std::size_t>();
  if (j.contains("request_delay_ms")) c.request_delay = std::chrono::milliseconds(j["request_delay_ms"].get<long long>());
  if (j.contains("timeout_s")) c.timeout = std::chrono::seconds(j["timeout_s"].get<long long>());
  return c;
}

json issue_json(const ontology::Issue& i) {
  return {{"code", i.code}, {"message", i.message}, {"elements", i.elements}};
}

json issues_json(const std::vector<ontology::Issue>& issues) {
  json a = json::array();
  for (const auto& i : issues) a.push_back(issue_json(i));
  return a;
}

json report_json(const ontology::ValidationReport& r) {
  return {{"ok", r.ok()}, {"errors", issues_json(r.errors)}, {"warnings", issues_json(r.warnings)}};
}

json ontology_json(const ontology::Ontology& o) {
  json concepts = json::array();
  for (const auto& [id, c] : o.concepts()) {
    json props = json::array();
    for (const auto& p : c.properties) {
      props.push_back({{"id", ontology::property_id(id, p.name)},
                       {"name", p.name},
                       {"synonyms", p.synonyms},
                       {"value_kind", ontology::to_string(p.value_kind)}});
    }
    concepts.push_back({{"id", id}, {"label", c.label}, {"synonyms", c.synonyms}, {"properties", props}});
  }
  json relations = json::array();
  for (const auto& r : o.relations()) {
    relations.push_back({{"kind", ontology::to_string(r.kind)}, {"source", r.source}, {"target", r.target}});
  }
  return {{"base_iri", o.base_iri()}, {"version", o.version()}, {"concepts", concepts}, {"relations", relations}};
}

json candidate_json(const textmine::CandidateTerm& c) {
  json j = {{"phrase", c.phrase},
            {"n", c.n},
            {"total_frequency", c.total_frequency},
            {"per_article", c.per_article},
            {"status", textmine::to_string(c.status)},
            {"linked_element", nullptr},
            {"decided_at", nullptr}};
  if (c.linked_element) j["linked_element"] = *c.linked_element;
  if (c.decided_at) j["decided_at"] = format_timestamp(*c.decided_at);
  return j;
}

owl::Syntax to_syntax(of_syntax s) { return s == OF_SYNTAX_RDFXML ? owl::Syntax::rdfxml : owl::Syntax::turtle; }

json outcome_json(const curation::Session& s, const curation::Outcome& o, const std::string& phrase) {
  json j = {{"seq", o.seq}, {"warnings", issues_json(o.warnings)}};
  if (const auto* c = s.find(phrase)) j["candidate"] = candidate_json(*c);
  return j;
}

}  // namespace

extern "C" {

const char* of_version(void) { return "0.1.0"; }

const char* of_status_name(of_status status) {
  switch (status) {
    case OF_OK: return "ok";
    case OF_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case OF_ERR_NOT_FOUND: return "not-found";
    case OF_ERR_NETWORK: return "network";
    case OF_ERR_PARSE: return "parse";
    case OF_ERR_CONFLICT: return "conflict";
    case OF_ERR_VALIDATION: return "validation";
    case OF_ERR_IO: return "io";
    case OF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* of_last_error_code(void) { return g_error_code.c_str(); }
const char* of_last_error_message(void) { return g_error_message.c_str(); }

void of_string_free(char* s) { std::free(s); }

of_status of_corpus_fetch(const char* seed, const char* config_json, of_corpus** out) {
  return guarded([&] {
    need(seed, "seed");
    need(out, "out");
    const corpus::AcquisitionConfig config = acquisition_config(parse_object(config_json, "config"));
    *out = new of_corpus{corpus::build_corpus(seed, config)};
  });
}

of_status of_corpus_load(const char* path, of_corpus** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new of_corpus{corpus::load_fixture_corpus(path)};
  });
}

of_status of_corpus_parse(const char* text, of_corpus** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new of_corpus{corpus::parse_corpus(text)};
  });
}

of_status of_corpus_save(const of_corpus* c, const char* path) {
  return guarded([&] {
    need(c, "corpus");
    need(path, "path");
    corpus::save_corpus(c->value, path);
  });
}

of_status of_corpus_serialize(const of_corpus* c, char** out) {
  return guarded([&] {
    need(c, "corpus");
    need(out, "out");
    *out = dup(corpus::serialize_corpus(c->value));
  });
}

of_status of_corpus_summary(const of_corpus* c, char** out_json) {
  return guarded([&] {
    need(c, "corpus");
    need(out_json, "out_json");
    const corpus::Corpus& k = c->value;
    json articles = json::array();
    for (const auto& [slug, a] : k.articles) articles.push_back(slug);
    json failures = json::array();
    for (const auto& f : k.failures) failures.push_back({{"slug", f.slug}, {"code", f.code}, {"message", f.message}});
    json j = {{"seed", k.seed},
              {"articles", articles},
              {"content_digest", k.content_digest()},
              {"config_digest", k.config_digest},
              {"created_at", format_timestamp(k.created_at)},
              {"failures", failures},
              {"warnings", k.warnings}};
    *out_json = dup(j.dump());
  });
}

void of_corpus_free(of_corpus* c) { delete c; }

of_status of_pipeline_defaults(char** out_json) {
  return guarded([&] {
    need(out_json, "out_json");
    *out_json = dup(curation::pipeline_config_to_json(textmine::PipelineConfig::defaults()));
  });
}

of_status of_word_list_load(const char* path, char** out_json) {
  return guarded([&] {
    need(path, "path");
    need(out_json, "out_json");
    *out_json = dup(json(textmine::load_word_list(path)).dump());
  });
}

of_status of_mine(const of_corpus* c, const char* config_json, char** out_jsonl) {
  return guarded([&] {
    need(c, "corpus");
    need(out_jsonl, "out_jsonl");
    const textmine::PipelineConfig config = curation::pipeline_config_from_json(str_or_empty(config_json));
    const auto tables = textmine::mine_corpus(c->value, config);
    *out_jsonl = dup(textmine::serialize_candidates(textmine::rank_candidates(tables, config)));
  });
}

of_status of_ontology_new(const char* base_iri, of_ontology** out) {
  return guarded([&] {
    need(out, "out");
    const std::string base = base_iri && *base_iri ? base_iri : std::string(ontology::kDefaultBaseIri);
    *out = new of_ontology{ontology::Ontology(base)};
  });
}

of_status of_ontology_seed(of_ontology** out) {
  return guarded([&] {
    need(out, "out");
    *out = new of_ontology{ontology::seed_wind_ontology()};
  });
}

of_status of_ontology_from_owl(const char* text, of_ontology** out, char** ignored_json) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    owl::ImportResult r = owl::from_owl_text(text);
    std::string ignored;
    if (ignored_json) {
      json a = json::array();
      for (const auto& t : r.ignored) a.push_back(t.subject.ntriples() + " " + t.predicate.ntriples() + " " + t.object.ntriples() + " .");
      ignored = a.dump();
    }
    *out = new of_ontology{std::move(r.ontology)};
    if (ignored_json) *ignored_json = dup(ignored);
  });
}

of_status of_ontology_to_owl(const of_ontology* o, of_syntax syntax, char** out) {
  return guarded([&] {
    need(o, "ontology");
    need(out, "out");
    *out = dup(owl::to_owl(o->value, to_syntax(syntax)).text);
  });
}

of_status of_ontology_validate(const of_ontology* o, char** out_json) {
  return guarded([&] {
    need(o, "ontology");
    need(out_json, "out_json");
    *out_json = dup(report_json(o->value.validate()).dump());
  });
}

of_status of_ontology_to_json(const of_ontology* o, char** out_json) {
  return guarded([&] {
    need(o, "ontology");
    need(out_json, "out_json");
    *out_json = dup(ontology_json(o->value).dump());
  });
}

of_status of_ontology_query(const of_ontology* o, const char* term, char** out_json) {
  return guarded([&] {
    need(o, "ontology");
    need(term, "term");
    need(out_json, "out_json");
    json a = json::array();
    for (const auto& m : o->value.query_by_term(term)) {
      a.push_back({{"kind", ontology::to_string(m.kind)}, {"id", m.id}, {"on", ontology::to_string(m.on)}});
    }
    *out_json = dup(a.dump());
  });
}

of_status of_ontology_canonical_text(const of_ontology* o, char** out) {
  return guarded([&] {
    need(o, "ontology");
    need(out, "out");
    *out = dup(o->value.canonical_text());
  });
}

of_status of_ontology_add_concept(of_ontology* o, const char* label, char** out_json) {
  return guarded([&] {
    need(o, "ontology");
    need(label, "label");
    ontology::AddResult r = o->value.add_concept(label);
    if (out_json) *out_json = dup(json{{"id", r.id}, {"warnings", issues_json(r.warnings)}}.dump());
  });
}

of_status of_ontology_add_relation(of_ontology* o, const char* kind, const char* source, const char* target) {
  return guarded([&] {
    need(o, "ontology");
    need(kind, "kind");
    need(source, "source");
    need(target, "target");
    o->value.add_relation(ontology::relation_kind_from_string(kind), source, target);
  });
}

void of_ontology_free(of_ontology* o) { delete o; }

of_status of_store_open(const char* dir, of_store** out) {
  return guarded([&] {
    need(dir, "dir");
    need(out, "out");
    *out = new of_store{curation::SessionStore(dir)};
  });
}

of_status of_store_list(const of_store* store, char** out_json) {
  return guarded([&] {
    need(store, "store");
    need(out_json, "out_json");
    *out_json = dup(json(store->value.list()).dump());
  });
}

void of_store_free(of_store* store) { delete store; }

of_status of_session_create(of_store* store, const of_corpus* c, const char* options_json, of_session** out) {
  return guarded([&] {
    need(c, "corpus");
    need(out, "out");
    const json options = parse_object(options_json, "options");
    const textmine::PipelineConfig config =
        curation::pipeline_config_from_json(options.contains("config") ? options["config"].dump() : std::string());
    curation::OpenOptions open;
    open.from_seed = options.value("from_seed", false);
    open.id = options.value("id", "");
    if (store && !open.id.empty() && store->value.exists(open.id)) {
      throw Error(ErrorKind::conflict, "session-exists", "session '" + open.id + "' already exists");
    }
    auto handle = std::make_unique<of_session>(curation::open_session(c->value, config, open));
    if (store) {
      store->value.create(handle->value, config);
      handle->store = store->value;
    }
    *out = handle.release();
  });
}

of_status of_session_open(of_store* store, const char* id, of_session** out) {
  return guarded([&] {
    need(store, "store");
    need(id, "id");
    need(out, "out");
    auto handle = std::make_unique<of_session>(store->value.load(id));
    handle->store = store->value;
    *out = handle.release();
  });
}

of_status of_session_replay(const of_session* session, of_session** out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    auto& s = const_cast<of_session*>(session)->value;
    std::lock_guard lock(const_cast<of_session*>(session)->mutex);
    *out = new of_session(curation::replay(s.decisions(), s.initial_candidates(), s.base(), s.info()));
  });
}

of_status of_session_info(of_session* session, char** out_json) {
  return guarded([&] {
    need(session, "session");
    need(out_json, "out_json");
    std::lock_guard lock(session->mutex);
    const curation::Session& s = session->value;
    json counts = json::object();
    for (const char* name : {"pending", "concept", "property", "synonym", "rejected"}) counts[name] = 0;
    for (const auto& c : s.candidates()) counts[textmine::to_string(c.status)] = counts[textmine::to_string(c.status)].get<long long>() + 1;
    json j = {{"id", s.id()},
              {"corpus_ref", s.info().corpus_ref},
              {"config_digest", s.info().config_digest},
              {"base", s.info().from_seed ? "seed" : "empty"},
              {"created_at", format_timestamp(s.info().created_at)},
              {"last_seq", s.last_seq()},
              {"total", s.candidates().size()},
              {"counts", counts}};
    *out_json = dup(j.dump());
  });
}

of_status of_session_candidates(of_session* session, const char* status_filter, long long offset, long long limit,
                                char** out_json) {
  return guarded([&] {
    need(session, "session");
    need(out_json, "out_json");
    if (offset < 0) throw Error(ErrorKind::invalid_argument, "bad-offset", "offset must be >= 0");
    std::optional<textmine::Status> filter;
    if (status_filter && *status_filter) filter = textmine::status_from_string(status_filter);
    std::lock_guard lock(session->mutex);
    json items = json::array();
    long long total = 0;
    for (const auto& c : session->value.candidates()) {
      if (filter && c.status != *filter) continue;
      if (total >= offset && (limit < 0 || total < offset + limit)) items.push_back(candidate_json(c));
      ++total;
    }
    json j = {{"total", total}, {"offset", offset}, {"limit", limit < 0 ? json(nullptr) : json(limit)}, {"items", items}};
    *out_json = dup(j.dump());
  });
}

of_status of_session_decide(of_session* session, const char* phrase, const char* action, const char* payload_json,
                            long long* seq, char** out_json) {
  return guarded([&] {
    need(session, "session");
    need(action, "action");
    const curation::Action a = curation::action_from_string(action);
    const curation::Payload payload = curation::payload_from_json(str_or_empty(payload_json));
    const std::string p = str_or_empty(phrase);
    std::lock_guard lock(session->mutex);
    const curation::Outcome o = session->value.decide(p, a, payload);
    if (seq) *seq = o.seq;
    if (out_json) *out_json = dup(outcome_json(session->value, o, p).dump());
  });
}

of_status of_session_undo(of_session* session, const char* phrase, long long* seq, char** out_json) {
  return of_session_decide(session, phrase, "undo", nullptr, seq, out_json);
}

of_status of_session_log(of_session* session, char** out_jsonl) {
  return guarded([&] {
    need(session, "session");
    need(out_jsonl, "out_jsonl");
    std::lock_guard lock(session->mutex);
    std::string text;
    for (const auto& d : session->value.decisions()) text += curation::decision_to_json(d) + "\n";
    *out_jsonl = dup(text);
  });
}

of_status of_session_draft(of_session* session, of_ontology** out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    std::lock_guard lock(session->mutex);
    *out = new of_ontology{session->value.draft()};
  });
}

of_status of_session_export_owl(of_session* session, of_syntax syntax, char** out) {
  return guarded([&] {
    need(session, "session");
    need(out, "out");
    std::lock_guard lock(session->mutex);
    *out = dup(owl::to_owl(session->value.draft(), to_syntax(syntax)).text);
  });
}

of_status of_session_same_state(of_session* a, of_session* b, int* out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    if (a == b) {
      *out = 1;
      return;
    }
    std::scoped_lock lock(a->mutex, b->mutex);
    *out = a->value.same_state(b->value) ? 1 : 0;
  });
}

void of_session_free(of_session* session) { delete session; }

}  // extern "C"
