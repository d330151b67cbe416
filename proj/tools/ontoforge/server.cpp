#include "server.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

namespace ontoforge::service {

using json = nlohmann::json;

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { of_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct ApiFailure {
  int status;
  std::string code;
  std::string message;
};

void check(of_status s) {
  if (s != OF_OK) throw ApiFailure{http_status(s), of_last_error_code(), of_last_error_message()};
}

void send_json(httplib::Response& res, int status, const std::string& body) {
  res.status = status;
  res.set_content(body, "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message) {
  send_json(res, status, json{{"code", code}, {"message", message}}.dump());
}

json body_object(const httplib::Request& req, bool allow_empty) {
  if (req.body.empty() && allow_empty) return json::object();
  const std::string type = req.get_header_value("Content-Type");
  if (type.rfind("application/json", 0) != 0) {
    throw ApiFailure{415, "unsupported-media-type", "request body must be application/json"};
  }
  json j = json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ApiFailure{400, "bad-payload", "request body must be a JSON object"};
  return j;
}

of_syntax syntax_param(const httplib::Request& req) {
  const std::string f = req.get_param_value("format");
  if (f.empty() || f == "turtle" || f == "ttl") return OF_SYNTAX_TURTLE;
  if (f == "rdfxml" || f == "xml" || f == "owl") return OF_SYNTAX_RDFXML;
  throw ApiFailure{400, "bad-format", "format must be turtle or rdfxml"};
}

void send_owl(httplib::Response& res, of_syntax syntax, const std::string& text) {
  res.status = 200;
  res.set_content(text, syntax == OF_SYNTAX_RDFXML ? "application/rdf+xml" : "text/turtle");
}

long long int_param(const httplib::Request& req, const char* name, long long fallback) {
  if (!req.has_param(name)) return fallback;
  const std::string v = req.get_param_value(name);
  try {
    std::size_t used = 0;
    const long long n = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ApiFailure{400, "bad-parameter", std::string(name) + " must be an integer"};
  }
}

}  // namespace

int http_status(of_status status) {
  switch (status) {
    case OF_OK: return 200;
    case OF_ERR_INVALID_ARGUMENT:
    case OF_ERR_PARSE: return 400;
    case OF_ERR_NOT_FOUND: return 404;
    case OF_ERR_CONFLICT: return 409;
    case OF_ERR_VALIDATION: return 422;
    case OF_ERR_NETWORK: return 502;
    case OF_ERR_IO:
    case OF_ERR_INTERNAL: return 500;
  }
  return 500;
}

struct ApiServer::Impl {
  of_corpus* corpus = nullptr;
  of_store* store = nullptr;
  ServerOptions options;
  httplib::Server http;
  std::mutex sessions_mutex;
  std::map<std::string, of_session*> sessions;

  ~Impl() {
    for (auto& [id, s] : sessions) of_session_free(s);
    of_store_free(store);
    of_corpus_free(corpus);
  }

  of_session* session(const std::string& id) {
    std::lock_guard lock(sessions_mutex);
    if (auto it = sessions.find(id); it != sessions.end()) return it->second;
    of_session* s = nullptr;
    check(of_session_open(store, id.c_str(), &s));
    sessions.emplace(id, s);
    return s;
  }

  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  static Handler wrap(Handler h) {
    return [h = std::move(h)](const httplib::Request& req, httplib::Response& res) {
      try {
        h(req, res);
      } catch (const ApiFailure& f) {
        send_error(res, f.status, f.code, f.message);
      } catch (const std::exception& e) {
        send_error(res, 500, "internal", e.what());
      }
    };
  }

  void routes() {
    http.Get("/healthz", wrap([](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, json{{"status", "ok"}, {"version", of_version()}}.dump());
    }));

    http.Get("/seed.owl", wrap([](const httplib::Request& req, httplib::Response& res) {
      const of_syntax syntax = syntax_param(req);
      of_ontology* seed = nullptr;
      check(of_ontology_seed(&seed));
      Owned text;
      const of_status s = of_ontology_to_owl(seed, syntax, &text.p);
      of_ontology_free(seed);
      check(s);
      send_owl(res, syntax, text.str());
    }));

    http.Get("/sessions", wrap([this](const httplib::Request&, httplib::Response& res) {
      Owned ids;
      check(of_store_list(store, &ids.p));
      send_json(res, 200, json{{"sessions", json::parse(ids.str())}}.dump());
    }));

    http.Post("/sessions", wrap([this](const httplib::Request& req, httplib::Response& res) {
      const json body = body_object(req, true);
      json options = json::object();
      if (body.contains("from_seed")) options["from_seed"] = body["from_seed"];
      if (body.contains("config")) options["config"] = body["config"];
      if (body.contains("id")) options["id"] = body["id"];
      of_session* s = nullptr;
      check(of_session_create(store, corpus, options.dump().c_str(), &s));
      Owned info;
      check(of_session_info(s, &info.p));
      const std::string id = json::parse(info.str()).at("id").get<std::string>();
      {
        std::lock_guard lock(sessions_mutex);
        sessions.emplace(id, s);
      }
      send_json(res, 201, info.str());
    }));

    http.Get(R"(/sessions/([^/]+))", wrap([this](const httplib::Request& req, httplib::Response& res) {
      Owned info;
      check(of_session_info(session(req.matches[1]), &info.p));
      send_json(res, 200, info.str());
    }));

    http.Get(R"(/sessions/([^/]+)/candidates)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      of_session* s = session(req.matches[1]);
      const long long offset = int_param(req, "offset", 0);
      const long long limit = int_param(req, "limit", 50);
      if (offset < 0 || limit < 0) throw ApiFailure{400, "bad-parameter", "offset and limit must be >= 0"};
      Owned page;
      check(of_session_candidates(s, req.get_param_value("status").c_str(), offset, limit, &page.p));
      send_json(res, 200, page.str());
    }));

    http.Post(R"(/sessions/([^/]+)/decisions)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      of_session* s = session(req.matches[1]);
      const json body = body_object(req, false);
      if (!body.contains("action") || !body["action"].is_string()) {
        throw ApiFailure{400, "bad-payload", "decision needs a string 'action'"};
      }
      const std::string phrase = body.value("phrase", "");
      const std::string payload = body.contains("payload") ? body["payload"].dump() : std::string();
      long long seq = 0;
      Owned out;
      check(of_session_decide(s, phrase.c_str(), body["action"].get<std::string>().c_str(), payload.c_str(), &seq, &out.p));
      send_json(res, 200, out.str());
    }));

    http.Post(R"(/sessions/([^/]+)/undo)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      of_session* s = session(req.matches[1]);
      const json body = body_object(req, false);
      if (!body.contains("phrase") || !body["phrase"].is_string()) {
        throw ApiFailure{400, "bad-payload", "undo needs a string 'phrase'"};
      }
      long long seq = 0;
      Owned out;
      check(of_session_undo(s, body["phrase"].get<std::string>().c_str(), &seq, &out.p));
      send_json(res, 200, out.str());
    }));

    http.Get(R"(/sessions/([^/]+)/ontology)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      of_ontology* draft = nullptr;
      check(of_session_draft(session(req.matches[1]), &draft));
      Owned doc, report;
      const of_status a = of_ontology_to_json(draft, &doc.p);
      const of_status b = a == OF_OK ? of_ontology_validate(draft, &report.p) : a;
      of_ontology_free(draft);
      check(b);
      json j = json::parse(doc.str());
      j["validation"] = json::parse(report.str());
      send_json(res, 200, j.dump());
    }));

    http.Get(R"(/sessions/([^/]+)/query)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      of_ontology* draft = nullptr;
      check(of_session_draft(session(req.matches[1]), &draft));
      Owned matches;
      const of_status st = of_ontology_query(draft, req.get_param_value("term").c_str(), &matches.p);
      of_ontology_free(draft);
      check(st);
      send_json(res, 200, json{{"matches", json::parse(matches.str())}}.dump());
    }));

    http.Get(R"(/sessions/([^/]+)/log)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      Owned log;
      check(of_session_log(session(req.matches[1]), &log.p));
      res.status = 200;
      res.set_content(log.str(), "application/x-ndjson");
    }));

    http.Get(R"(/sessions/([^/]+)/export\.owl)", wrap([this](const httplib::Request& req, httplib::Response& res) {
      const of_syntax syntax = syntax_param(req);
      Owned text;
      check(of_session_export_owl(session(req.matches[1]), syntax, &text.p));
      send_owl(res, syntax, text.str());
    }));

    if (!options.static_dir.empty() && std::filesystem::is_directory(options.static_dir)) {
      http.set_mount_point("/", options.static_dir);
    }
  }
};

ApiServer::ApiServer(of_corpus* corpus, ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->corpus = corpus;
  impl_->options = std::move(options);
  if (of_store_open(impl_->options.data_dir.c_str(), &impl_->store) != OF_OK) {
    throw std::runtime_error(std::string("cannot open data directory: ") + of_last_error_message());
  }
  impl_->routes();
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(int port) {
  if (port == 0) return impl_->http.bind_to_any_port(impl_->options.host);
  return impl_->http.bind_to_port(impl_->options.host, port) ? port : -1;
}

bool ApiServer::run() { return impl_->http.listen_after_bind(); }

void ApiServer::stop() {
  if (impl_) impl_->http.stop();
}

void ApiServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace ontoforge::service
