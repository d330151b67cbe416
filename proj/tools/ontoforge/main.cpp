// ontoforge command line: fetch, mine, curate, export, validate, seed, serve.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontoforge/ontoforge.h"
#include "server.hpp"

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNotFound = 2, kValidation = 3, kNetwork = 4 };

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(of_status s) {
  switch (s) {
    case OF_OK: return kOk;
    case OF_ERR_NOT_FOUND: return kNotFound;
    case OF_ERR_VALIDATION:
    case OF_ERR_PARSE: return kValidation;
    case OF_ERR_NETWORK: return kNetwork;
    default: return kUsage;
  }
}

void check(of_status s) {
  if (s != OF_OK) {
    throw Failure{exit_for(s), std::string(of_last_error_code()) + ": " + of_last_error_message()};
  }
}

struct Str {
  char* p = nullptr;
  ~Str() { of_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kNotFound, "file-not-found: cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kUsage, "cannot write " + path};
  out << text;
}

of_syntax parse_syntax(const std::string& name, const std::string& out_path) {
  if (name == "rdfxml" || name == "xml") return OF_SYNTAX_RDFXML;
  if (name == "turtle" || name == "ttl") return OF_SYNTAX_TURTLE;
  if (name.empty()) {
    const std::string ext = std::filesystem::path(out_path).extension().string();
    return ext == ".owl" || ext == ".rdf" ? OF_SYNTAX_RDFXML : OF_SYNTAX_TURTLE;
  }
  throw Failure{kUsage, "unknown format '" + name + "' (turtle or rdfxml)"};
}

struct CorpusHandle {
  of_corpus* p = nullptr;
  ~CorpusHandle() { of_corpus_free(p); }
};

struct MiningFlags {
  long long min_freq = 2;
  int nmax = 3;
  std::string stopwords;
  std::string gazetteer;
  bool drop_interior_stopwords = false;
  bool no_case_fold = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--min-freq", min_freq, "Drop phrases seen fewer times in total")->check(CLI::PositiveNumber);
    cmd->add_option("--nmax", nmax, "Longest n-gram")->check(CLI::Range(1, 10));
    cmd->add_option("--stopwords", stopwords, "Stopword file (one token per line)");
    cmd->add_option("--gazetteer", gazetteer, "Named-entity list (one lowercase name per line)");
    cmd->add_flag("--drop-interior-stopwords", drop_interior_stopwords,
                  "Remove stopwords before n-gram extraction instead of only at phrase edges");
    cmd->add_flag("--no-case-fold", no_case_fold, "Count phrases case-sensitively");
  }

  std::string config_json() const {
    json c = {{"min_frequency", min_freq},
              {"nmax", nmax},
              {"keep_interior_stopwords", !drop_interior_stopwords},
              {"case_fold", !no_case_fold}};
    auto load = [](const std::string& path) {
      if (!std::filesystem::exists(path)) throw Failure{kNotFound, "file-not-found: " + path};
      Str words;
      check(of_word_list_load(path.c_str(), &words.p));
      return json::parse(words.str());
    };
    if (!stopwords.empty()) c["stopwords"] = load(stopwords);
    if (!gazetteer.empty()) c["entity_gazetteer"] = load(gazetteer);
    return c.dump();
  }
};

void load_corpus(const std::string& path, CorpusHandle& corpus) {
  if (!std::filesystem::exists(path)) throw Failure{kNotFound, "file-not-found: " + path};
  check(of_corpus_load(path.c_str(), &corpus.p));
}

void report_corpus(const of_corpus* corpus) {
  Str summary;
  check(of_corpus_summary(corpus, &summary.p));
  const json s = json::parse(summary.str());
  std::cerr << "corpus: seed " << s["seed"].get<std::string>() << ", " << s["articles"].size() << " articles, "
            << s["failures"].size() << " failed links\n";
  for (const auto& f : s["failures"]) {
    std::cerr << "  skipped " << f["slug"].get<std::string>() << " (" << f["code"].get<std::string>() << ")\n";
  }
  for (const auto& w : s["warnings"]) std::cerr << "  warning: " << w.get<std::string>() << "\n";
}

void print_report(const json& report) {
  for (const auto& e : report["errors"]) {
    std::cout << "error " << e["code"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
  }
  for (const auto& w : report["warnings"]) {
    std::cout << "warning " << w["code"].get<std::string>() << ": " << w["message"].get<std::string>() << "\n";
  }
  std::cout << report["errors"].size() << " error(s), " << report["warnings"].size() << " warning(s)\n";
}

std::string default_static_dir() {
#ifdef ONTOFORGE_SOURCE_DIR
  return std::string(ONTOFORGE_SOURCE_DIR) + "/ui/dist";
#else
  return "ui/dist";
#endif
}

std::atomic<ontoforge::service::ApiServer*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (auto* s = g_server.load()) s->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontoforge: build a domain ontology from a seed wiki article and its links"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(of_version()));

  const std::string data_dir_default = env_or("ONTOFORGE_DATA_DIR", "ontoforge-data");

  // fetch
  auto* fetch = app.add_subcommand("fetch", "Build a corpus from a seed article and its first-level links");
  std::string seed_slug, fixture_dir, api_url, user_agent, fetch_out = "corpus.jsonl";
  bool live = false;
  std::size_t max_links = 500, max_concurrent = 2;
  long long delay_ms = 500;
  fetch->add_option("seed", seed_slug, "Seed article slug, e.g. wind_power")->required();
  fetch->add_option("--fixture-dir", fixture_dir, "Directory of <slug>.wikitext files");
  fetch->add_flag("--live", live, "Fetch from the wiki API instead of fixtures");
  fetch->add_option("--api-url", api_url, "Wiki action API endpoint (default $ONTOFORGE_WIKI_API)");
  fetch->add_option("--user-agent", user_agent, "User agent for live requests");
  fetch->add_option("--max-links", max_links, "Upper bound on followed links");
  fetch->add_option("--max-concurrent", max_concurrent, "Parallel live requests");
  fetch->add_option("--delay-ms", delay_ms, "Pause between live requests");
  fetch->add_option("-o,--out", fetch_out, "Corpus file to write");

  // mine
  auto* mine = app.add_subcommand("mine", "Rank candidate phrases from a corpus");
  std::string mine_corpus, mine_out;
  std::size_t top = 0;
  MiningFlags mining;
  mine->add_option("corpus", mine_corpus, "Corpus file")->required();
  mining.add_to(mine);
  mine->add_option("-o,--out", mine_out, "Candidates file (JSON lines); stdout when omitted");
  mine->add_option("--top", top, "Print the top N candidates as a table instead of JSON lines");

  // curate
  auto* curate = app.add_subcommand("curate", "Apply a script of curation decisions to a session");
  std::string curate_corpus, script_path, curate_session, curate_data = data_dir_default;
  bool curate_from_seed = false;
  MiningFlags curate_mining;
  curate->add_option("--corpus", curate_corpus, "Corpus file (required when starting a new session)");
  curate->add_option("--script", script_path, "JSON lines: {\"phrase\", \"action\", \"payload\"}")->required();
  curate->add_option("--session", curate_session, "Continue this session instead of starting one");
  curate->add_option("--data-dir", curate_data, "Session directory (default $ONTOFORGE_DATA_DIR)");
  curate->add_flag("--from-seed", curate_from_seed, "Start the draft from the seed ontology");
  curate_mining.add_to(curate);

  // export
  auto* exp = app.add_subcommand("export", "Write a session's ontology draft as OWL");
  std::string export_session, export_data = data_dir_default, export_out, export_format;
  exp->add_option("--session", export_session, "Session id")->required();
  exp->add_option("--data-dir", export_data, "Session directory (default $ONTOFORGE_DATA_DIR)");
  exp->add_option("-o,--out", export_out, "Output file; stdout when omitted");
  exp->add_option("--format", export_format, "turtle or rdfxml (default from extension, else turtle)");

  // validate
  auto* validate = app.add_subcommand("validate", "Check an OWL file; exits 0 only when it has no errors");
  std::string validate_path;
  bool validate_json = false;
  validate->add_option("file", validate_path, "Turtle or RDF/XML file")->required();
  validate->add_flag("--json", validate_json, "Print the report as JSON");

  // seed
  auto* seed = app.add_subcommand("seed", "Write the built-in wind energy ontology as OWL");
  std::string seed_out, seed_format;
  seed->add_option("-o,--out", seed_out, "Output file; stdout when omitted");
  seed->add_option("--format", seed_format, "turtle or rdfxml (default from extension, else turtle)");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP API and the static UI");
  std::string serve_corpus, serve_fixture_dir, serve_seed = "wind_power", serve_data = data_dir_default;
  std::string serve_static = default_static_dir(), serve_host = "127.0.0.1";
  int port = std::atoi(env_or("ONTOFORGE_PORT", "8080").c_str());
  serve->add_option("--corpus", serve_corpus, "Corpus file");
  serve->add_option("--fixture-dir", serve_fixture_dir, "Build the corpus from fixtures at startup");
  serve->add_option("--seed", serve_seed, "Seed slug used with --fixture-dir");
  serve->add_option("--data-dir", serve_data, "Session directory (default $ONTOFORGE_DATA_DIR)");
  serve->add_option("--static", serve_static, "Directory served under /");
  serve->add_option("--host", serve_host, "Listen address");
  serve->add_option("--port", port, "Listen port (default $ONTOFORGE_PORT or 8080)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*fetch) {
      json config = {{"max_links", max_links}, {"max_concurrent", max_concurrent}, {"request_delay_ms", delay_ms}};
      if (live) {
        config["source"] = "live";
        config["api_url"] = api_url;
        config["user_agent"] = user_agent.empty() ? std::string("ontoforge/") + of_version() + " (research tool)" : user_agent;
      } else {
        if (fixture_dir.empty()) throw Failure{kUsage, "fetch needs --fixture-dir or --live"};
        if (!std::filesystem::is_directory(fixture_dir)) throw Failure{kNotFound, "fixture directory not found: " + fixture_dir};
        config["source"] = "fixture";
        config["fixture_dir"] = fixture_dir;
      }
      CorpusHandle corpus;
      check(of_corpus_fetch(seed_slug.c_str(), config.dump().c_str(), &corpus.p));
      check(of_corpus_save(corpus.p, fetch_out.c_str()));
      report_corpus(corpus.p);
      std::cerr << "wrote " << fetch_out << "\n";
      return kOk;
    }

    if (*mine) {
      CorpusHandle corpus;
      load_corpus(mine_corpus, corpus);
      Str out;
      check(of_mine(corpus.p, mining.config_json().c_str(), &out.p));
      if (top > 0) {
        std::istringstream lines(out.str());
        std::string line;
        std::size_t rank = 0;
        while (rank < top && std::getline(lines, line)) {
          const json c = json::parse(line);
          std::printf("%4zu  %-40s n=%d  %lld\n", ++rank, c["phrase"].get<std::string>().c_str(), c["n"].get<int>(),
                      c["total_frequency"].get<long long>());
        }
      }
      if (!mine_out.empty() || top == 0) write_output(mine_out, out.str());
      return kOk;
    }

    if (*curate) {
      of_store* store = nullptr;
      check(of_store_open(curate_data.c_str(), &store));
      std::unique_ptr<of_store, void (*)(of_store*)> store_guard(store, of_store_free);
      of_session* session = nullptr;
      if (curate_session.empty()) {
        if (curate_corpus.empty()) throw Failure{kUsage, "curate needs --corpus or --session"};
        CorpusHandle corpus;
        load_corpus(curate_corpus, corpus);
        json options = {{"from_seed", curate_from_seed}, {"config", json::parse(curate_mining.config_json())}};
        check(of_session_create(store, corpus.p, options.dump().c_str(), &session));
      } else {
        check(of_session_open(store, curate_session.c_str(), &session));
      }
      std::unique_ptr<of_session, void (*)(of_session*)> session_guard(session, of_session_free);

      const std::string script = read_text(script_path);
      std::istringstream lines(script);
      std::string line;
      int line_no = 0, applied = 0;
      while (std::getline(lines, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const json step = json::parse(line, nullptr, false);
        if (step.is_discarded() || !step.is_object() || !step.contains("action")) {
          throw Failure{kUsage, script_path + ":" + std::to_string(line_no) + ": expected {\"phrase\", \"action\", \"payload\"}"};
        }
        const std::string phrase = step.value("phrase", "");
        const std::string payload = step.contains("payload") ? step["payload"].dump() : std::string();
        long long seq = 0;
        Str out;
        const of_status st = of_session_decide(session, phrase.c_str(), step["action"].get<std::string>().c_str(),
                                               payload.c_str(), &seq, &out.p);
        if (st != OF_OK) {
          throw Failure{exit_for(st), script_path + ":" + std::to_string(line_no) + ": " + of_last_error_code() + ": " +
                                          of_last_error_message()};
        }
        for (const auto& w : json::parse(out.str())["warnings"]) {
          std::cerr << "seq " << seq << " warning " << w["code"].get<std::string>() << ": " << w["message"].get<std::string>() << "\n";
        }
        ++applied;
      }
      Str info;
      check(of_session_info(session, &info.p));
      const json i = json::parse(info.str());
      std::cerr << "applied " << applied << " decision(s), last seq " << i["last_seq"].get<long long>() << "\n";
      std::cout << i["id"].get<std::string>() << "\n";
      return kOk;
    }

    if (*exp) {
      of_store* store = nullptr;
      check(of_store_open(export_data.c_str(), &store));
      std::unique_ptr<of_store, void (*)(of_store*)> store_guard(store, of_store_free);
      of_session* session = nullptr;
      check(of_session_open(store, export_session.c_str(), &session));
      std::unique_ptr<of_session, void (*)(of_session*)> session_guard(session, of_session_free);
      Str text;
      check(of_session_export_owl(session, parse_syntax(export_format, export_out), &text.p));
      write_output(export_out, text.str());
      return kOk;
    }

    if (*validate) {
      const std::string text = read_text(validate_path);
      of_ontology* onto = nullptr;
      Str ignored;
      const of_status st = of_ontology_from_owl(text.c_str(), &onto, &ignored.p);
      if (st != OF_OK) {
        if (validate_json) {
          std::cout << json{{"ok", false}, {"errors", {{{"code", of_last_error_code()}, {"message", of_last_error_message()}, {"elements", json::array()}}}}, {"warnings", json::array()}}.dump() << "\n";
        } else {
          std::cout << "error " << of_last_error_code() << ": " << of_last_error_message() << "\n";
        }
        return st == OF_ERR_NOT_FOUND ? kNotFound : kValidation;
      }
      std::unique_ptr<of_ontology, void (*)(of_ontology*)> guard(onto, of_ontology_free);
      Str report;
      check(of_ontology_validate(onto, &report.p));
      const json r = json::parse(report.str());
      if (validate_json) {
        json out = r;
        out["ignored_triples"] = json::parse(ignored.str());
        std::cout << out.dump(2) << "\n";
      } else {
        print_report(r);
        const auto n = json::parse(ignored.str()).size();
        if (n > 0) std::cout << n << " triple(s) ignored\n";
      }
      return r["ok"].get<bool>() ? kOk : kValidation;
    }

    if (*seed) {
      of_ontology* onto = nullptr;
      check(of_ontology_seed(&onto));
      std::unique_ptr<of_ontology, void (*)(of_ontology*)> guard(onto, of_ontology_free);
      Str text;
      check(of_ontology_to_owl(onto, parse_syntax(seed_format, seed_out), &text.p));
      write_output(seed_out, text.str());
      return kOk;
    }

    if (*serve) {
      CorpusHandle corpus;
      if (!serve_corpus.empty()) {
        load_corpus(serve_corpus, corpus);
      } else if (!serve_fixture_dir.empty()) {
        json config = {{"source", "fixture"}, {"fixture_dir", serve_fixture_dir}};
        check(of_corpus_fetch(serve_seed.c_str(), config.dump().c_str(), &corpus.p));
      } else {
        throw Failure{kUsage, "serve needs --corpus or --fixture-dir"};
      }
      report_corpus(corpus.p);
      ontoforge::service::ServerOptions options;
      options.data_dir = serve_data;
      options.static_dir = serve_static;
      options.host = serve_host;
      ontoforge::service::ApiServer server(corpus.p, options);
      corpus.p = nullptr;  // owned by the server now
      const int bound = server.bind(port);
      if (bound < 0) throw Failure{kUsage, "cannot listen on " + serve_host + ":" + std::to_string(port)};
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on http://" << serve_host << ":" << bound << "\n";
      server.run();
      g_server = nullptr;
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "ontoforge: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "ontoforge: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
