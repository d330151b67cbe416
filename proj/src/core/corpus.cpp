#include "ontoforge/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "ontoforge/error.hpp"
#include "ontoforge/wikitext.hpp"

namespace ontoforge::corpus {

using nlohmann::json;

std::string to_string(SourceKind kind) { return kind == SourceKind::live ? "live" : "fixture"; }

SourceKind source_kind_from_string(const std::string& s) {
  if (s == "live") return SourceKind::live;
  if (s == "fixture") return SourceKind::fixture;
  throw Error(ErrorKind::invalid_argument, "bad-source", "unknown acquisition mode: " + s);
}

const Article& Corpus::seed_article() const {
  const auto it = articles.find(seed);
  if (it == articles.end()) throw Error(ErrorKind::internal, "missing-seed", "corpus has no seed article " + seed);
  return it->second;
}

std::string Corpus::content_digest() const {
  json j = json::array();
  for (const auto& [slug, a] : articles) j.push_back({slug, a.title, a.text, a.links});
  return sha256_hex(json{{"seed", seed}, {"articles", j}}.dump());
}

bool structurally_equal(const Corpus& a, const Corpus& b) {
  if (a.seed != b.seed || a.depth != b.depth || a.config_digest != b.config_digest || a.failures != b.failures ||
      a.articles.size() != b.articles.size()) {
    return false;
  }
  for (const auto& [slug, x] : a.articles) {
    const auto it = b.articles.find(slug);
    if (it == b.articles.end()) return false;
    const Article& y = it->second;
    if (x.slug != y.slug || x.title != y.title || x.text != y.text || x.links != y.links || x.source != y.source ||
        x.warnings != y.warnings) {
      return false;
    }
  }
  return true;
}

std::string AcquisitionConfig::digest() const {
  // Transport knobs (concurrency, delay, timeout, user agent) do not change content.
  const json j = {{"source", to_string(source)},
                  {"fixture_dir", source == SourceKind::fixture ? std::filesystem::path(fixture_dir).filename().string() : ""},
                  {"api_url", source == SourceKind::live ? api_url : ""},
                  {"max_links", max_links},
                  {"depth", 1}};
  return sha256_hex(j.dump());
}

Article article_from_wikitext(const std::string& slug, const std::string& title, const std::string& wikitext,
                              SourceKind source, Timestamp fetched_at) {
  const wikitext::Parsed parsed = wikitext::parse(wikitext);
  Article a;
  a.slug = slug;
  a.title = title;
  a.text = parsed.text;
  for (const std::string& link : parsed.links) {
    if (link != slug) a.links.push_back(link);
  }
  a.source = source;
  a.fetched_at = fetched_at;
  a.warnings = parsed.warnings;
  return a;
}

namespace {

std::string title_from_slug(const std::string& slug) {
  std::string t = slug;
  std::replace(t.begin(), t.end(), '_', ' ');
  if (!t.empty() && t[0] >= 'a' && t[0] <= 'z') t[0] = static_cast<char>(t[0] - 'a' + 'A');
  return t;
}

void require_slug(const std::string& slug) {
  if (slug.empty()) throw Error(ErrorKind::invalid_argument, "empty-slug", "page identifier must not be empty");
}

}  // namespace

Article FixtureSource::fetch(const std::string& raw_slug) {
  require_slug(raw_slug);
  const std::string slug = slugify(percent_decode(raw_slug));
  const std::filesystem::path path = std::filesystem::path(dir_) / (slug + ".wikitext");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorKind::not_found, "page-not-found", "no fixture for page " + slug);
  }
  std::string raw = read_file(path.string());
  std::string title = title_from_slug(slug);
  if (raw.rfind("title:", 0) == 0) {
    const std::size_t nl = raw.find('\n');
    title = trim(std::string_view(raw).substr(6, nl == std::string::npos ? std::string::npos : nl - 6));
    raw.erase(0, nl == std::string::npos ? raw.size() : nl + 1);
  }
  return article_from_wikitext(slug, title, raw, SourceKind::fixture, Timestamp{});
}

std::unique_ptr<ArticleSource> make_source(const AcquisitionConfig& config) {
  if (config.source == SourceKind::fixture) {
    if (config.fixture_dir.empty()) {
      throw Error(ErrorKind::invalid_argument, "no-fixture-dir", "fixture mode needs a fixture directory");
    }
    return std::make_unique<FixtureSource>(config.fixture_dir);
  }
  AcquisitionConfig live = config;
  if (live.api_url.empty()) {
    if (const char* env = std::getenv("ONTOFORGE_WIKI_API")) live.api_url = env;
  }
  return std::make_unique<WikiApiSource>(std::move(live));
}

Article fetch_article(const std::string& slug, ArticleSource& source) {
  require_slug(slug);
  return source.fetch(slug);
}

Article fetch_article(const std::string& slug, const AcquisitionConfig& config) {
  require_slug(slug);
  auto source = make_source(config);
  return source->fetch(slug);
}

Corpus build_corpus(const std::string& seed, const AcquisitionConfig& config) {
  auto source = make_source(config);
  return build_corpus(seed, config, *source);
}

Corpus build_corpus(const std::string& seed, const AcquisitionConfig& config, ArticleSource& source) {
  require_slug(seed);
  Corpus corpus;
  corpus.created_at = now_utc();
  corpus.config_digest = config.digest();
  Article seed_article;
  try {
    seed_article = source.fetch(seed);
  } catch (const Error& e) {
    throw Error(e.kind() == ErrorKind::network ? ErrorKind::network : ErrorKind::not_found, "seed-fetch-failure",
                "cannot fetch seed " + seed + ": " + e.what());
  }
  corpus.seed = seed_article.slug;

  std::vector<std::string> links = seed_article.links;
  if (links.size() > config.max_links) {
    corpus.warnings.push_back("limit-exceeded: seed has " + std::to_string(links.size()) + " links, truncated to " +
                              std::to_string(config.max_links));
    links.resize(config.max_links);
  }

  struct Outcome {
    std::optional<Article> article;
    std::optional<FetchFailure> failure;
  };
  std::vector<Outcome> outcomes(links.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.max_concurrent, links.size()));
  if (config.source == SourceKind::fixture || workers == 1) {
    for (std::size_t i = 0; i < links.size(); ++i) {
      try {
        outcomes[i].article = source.fetch(links[i]);
      } catch (const Error& e) {
        outcomes[i].failure = FetchFailure{links[i], e.code(), e.what()};
      }
    }
  } else {
    // Each worker takes the next index; the per-request delay lives in the source.
    std::mutex mu;
    std::size_t next = 0;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard lock(mu);
            if (next >= links.size()) return;
            i = next++;
          }
          try {
            outcomes[i].article = source.fetch(links[i]);
          } catch (const Error& e) {
            outcomes[i].failure = FetchFailure{links[i], e.code(), e.what()};
          } catch (const std::exception& e) {
            outcomes[i].failure = FetchFailure{links[i], "network-failure", e.what()};
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  corpus.articles.emplace(corpus.seed, std::move(seed_article));
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (outcomes[i].article) {
      Article a = std::move(*outcomes[i].article);
      // Redirected pages are stored under the link slug so the depth-1 closure holds.
      a.slug = links[i];
      a.links.erase(std::remove(a.links.begin(), a.links.end(), a.slug), a.links.end());
      corpus.articles.emplace(links[i], std::move(a));
    } else if (outcomes[i].failure) {
      corpus.failures.push_back(*outcomes[i].failure);
    }
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Record file

namespace {

json article_to_json(const Article& a) {
  json j = {{"slug", a.slug},
            {"title", a.title},
            {"text", a.text},
            {"links", a.links},
            {"source", to_string(a.source)},
            {"fetched_at", format_timestamp(a.fetched_at)}};
  if (!a.warnings.empty()) j["warnings"] = a.warnings;
  return j;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::parse, "malformed-record", "line " + std::to_string(line_no) + ": " + why);
}

template <typename T>
T field(const json& j, const char* name, std::size_t line_no) {
  const auto it = j.find(name);
  if (it == j.end()) malformed(line_no, std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    malformed(line_no, std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace

std::string serialize_corpus(const Corpus& corpus) {
  json header = {{"seed", corpus.seed},
                 {"depth", corpus.depth},
                 {"config_digest", corpus.config_digest},
                 {"content_digest", corpus.content_digest()},
                 {"created_at", format_timestamp(corpus.created_at)}};
  json failures = json::array();
  for (const auto& f : corpus.failures) failures.push_back({{"slug", f.slug}, {"code", f.code}, {"message", f.message}});
  header["failures"] = failures;
  if (!corpus.warnings.empty()) header["warnings"] = corpus.warnings;

  std::string out = header.dump() + "\n";
  // Seed first, then the rest in slug order.
  out += article_to_json(corpus.seed_article()).dump() + "\n";
  for (const auto& [slug, a] : corpus.articles) {
    if (slug != corpus.seed) out += article_to_json(a).dump() + "\n";
  }
  return out;
}

Corpus parse_corpus(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  Corpus corpus;
  bool have_header = false;
  std::string expected_content_digest;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (trim(lines[i]).empty()) continue;
    json j;
    try {
      j = json::parse(lines[i]);
    } catch (const json::parse_error& e) {
      malformed(line_no, std::string("not a JSON object: ") + e.what());
    }
    if (!j.is_object()) malformed(line_no, "record is not an object");
    if (!have_header) {
      corpus.seed = field<std::string>(j, "seed", line_no);
      corpus.depth = field<int>(j, "depth", line_no);
      corpus.config_digest = field<std::string>(j, "config_digest", line_no);
      if (j.contains("content_digest")) expected_content_digest = field<std::string>(j, "content_digest", line_no);
      corpus.created_at = j.contains("created_at") ? parse_timestamp(field<std::string>(j, "created_at", line_no)) : Timestamp{};
      if (j.contains("failures")) {
        for (const json& f : j["failures"]) {
          corpus.failures.push_back(FetchFailure{f.value("slug", ""), f.value("code", ""), f.value("message", "")});
        }
      }
      if (j.contains("warnings")) corpus.warnings = field<std::vector<std::string>>(j, "warnings", line_no);
      if (corpus.seed.empty()) malformed(line_no, "header has an empty seed");
      if (corpus.depth != 1) malformed(line_no, "only depth 1 corpora are supported");
      have_header = true;
      continue;
    }
    Article a;
    a.slug = field<std::string>(j, "slug", line_no);
    a.title = field<std::string>(j, "title", line_no);
    a.text = field<std::string>(j, "text", line_no);
    a.links = field<std::vector<std::string>>(j, "links", line_no);
    a.source = j.contains("source") ? source_kind_from_string(field<std::string>(j, "source", line_no)) : SourceKind::fixture;
    try {
      a.fetched_at = parse_timestamp(field<std::string>(j, "fetched_at", line_no));
    } catch (const Error&) {
      malformed(line_no, "bad fetched_at timestamp");
    }
    if (j.contains("warnings")) a.warnings = field<std::vector<std::string>>(j, "warnings", line_no);
    if (a.slug.empty() || a.slug.find_first_of(" \t\r\n") != std::string::npos) malformed(line_no, "invalid slug");
    if (corpus.articles.count(a.slug) > 0) malformed(line_no, "duplicate article " + a.slug);
    const std::string slug = a.slug;
    corpus.articles.emplace(slug, std::move(a));
  }
  if (!have_header) malformed(1, "missing header record");
  if (corpus.articles.count(corpus.seed) == 0) malformed(lines.size(), "seed article " + corpus.seed + " not present");
  const Article& seed = corpus.articles.at(corpus.seed);
  for (const auto& [slug, a] : corpus.articles) {
    if (slug != corpus.seed && std::find(seed.links.begin(), seed.links.end(), slug) == seed.links.end()) {
      malformed(lines.size(), "article " + slug + " is not linked from the seed");
    }
  }
  if (!expected_content_digest.empty() && expected_content_digest != corpus.content_digest()) {
    corpus.warnings.push_back("digest-mismatch: header content digest does not match the articles");
  }
  return corpus;
}

Corpus load_fixture_corpus(const std::string& path) { return parse_corpus(read_file(path)); }

void save_corpus(const Corpus& corpus, const std::string& path) { write_file(path, serialize_corpus(corpus)); }

}  // namespace ontoforge::corpus
