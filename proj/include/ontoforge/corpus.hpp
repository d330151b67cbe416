#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ontoforge/util.hpp"

namespace ontoforge::corpus {

enum class SourceKind { live, fixture };

std::string to_string(SourceKind kind);
SourceKind source_kind_from_string(const std::string& s);

struct Article {
  std::string slug;
  std::string title;
  std::string text;                // markup-free prose
  std::vector<std::string> links;  // body links, deduplicated, excludes own slug
  SourceKind source = SourceKind::fixture;
  Timestamp fetched_at{};
  std::vector<std::string> warnings;  // best-effort parse notes; empty when clean

  bool operator==(const Article&) const = default;
};

/// A link that could not be fetched while building a corpus.
struct FetchFailure {
  std::string slug;
  std::string code;  // "page-not-found", "network-failure", ...
  std::string message;

  bool operator==(const FetchFailure&) const = default;
};

struct Corpus {
  std::string seed;
  std::map<std::string, Article> articles;
  int depth = 1;
  Timestamp created_at{};
  std::string config_digest;
  std::vector<FetchFailure> failures;
  std::vector<std::string> warnings;  // truncation and similar notices

  const Article& seed_article() const;

  /// Digest of the article contents (slug, title, text, links), independent
  /// of timestamps. Sessions refer to their corpus by this value.
  std::string content_digest() const;
};

/// Structural equality: everything except created_at and fetched_at.
bool structurally_equal(const Corpus& a, const Corpus& b);

struct AcquisitionConfig {
  SourceKind source = SourceKind::fixture;
  std::string fixture_dir;   // fixture mode: directory of <slug>.wikitext files
  std::string api_url;       // live mode: action API endpoint, e.g. https://en.wikipedia.org/w/api.php
  std::string user_agent;    // live mode: mandatory
  std::size_t max_links = 500;
  std::size_t max_concurrent = 2;
  std::chrono::milliseconds request_delay{500};
  std::chrono::seconds timeout{30};

  /// Hash of the fields that affect corpus content.
  std::string digest() const;
};

/// Where articles come from. Implementations must be safe to call from
/// several threads at once.
class ArticleSource {
 public:
  virtual ~ArticleSource() = default;
  /// Throws Error with code "page-not-found" or "network-failure".
  virtual Article fetch(const std::string& slug) = 0;
};

/// Reads `<dir>/<slug>.wikitext`. The first line may be "title: <Display Title>";
/// otherwise the title is derived from the slug.
class FixtureSource : public ArticleSource {
 public:
  explicit FixtureSource(std::string dir) : dir_(std::move(dir)) {}
  Article fetch(const std::string& slug) override;

 private:
  std::string dir_;
};

/// MediaWiki action API client (action=parse, prop=wikitext).
class WikiApiSource : public ArticleSource {
 public:
  explicit WikiApiSource(AcquisitionConfig config);
  ~WikiApiSource() override;
  Article fetch(const std::string& slug) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Builds an Article from raw wikitext.
Article article_from_wikitext(const std::string& slug, const std::string& title, const std::string& wikitext,
                              SourceKind source, Timestamp fetched_at);

/// Source matching config.source. Live mode falls back to $ONTOFORGE_WIKI_API
/// when api_url is empty.
std::unique_ptr<ArticleSource> make_source(const AcquisitionConfig& config);

Article fetch_article(const std::string& slug, ArticleSource& source);
Article fetch_article(const std::string& slug, const AcquisitionConfig& config);

/// Seed plus every fetchable first-level link. Link failures are recorded;
/// a seed failure throws ("seed-fetch-failure").
Corpus build_corpus(const std::string& seed, const AcquisitionConfig& config);
Corpus build_corpus(const std::string& seed, const AcquisitionConfig& config, ArticleSource& source);

/// Line-delimited JSON: header record, then one record per article.
std::string serialize_corpus(const Corpus& corpus);
/// Throws Error(parse, "malformed-record") naming the 1-based line number.
/// A digest mismatch between header and content is a warning on the corpus.
Corpus parse_corpus(const std::string& text);
Corpus load_fixture_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);

}  // namespace ontoforge::corpus
