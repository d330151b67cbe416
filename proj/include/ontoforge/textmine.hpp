#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontoforge/corpus.hpp"
#include "ontoforge/util.hpp"

namespace ontoforge::textmine {

/// One token. `text` is the (possibly case-folded) form used for counting;
/// `surface` keeps the original casing for the entity heuristic.
struct Token {
  std::string text;
  std::string surface;
  std::size_t position = 0;  // index within the sentence as first tokenized

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct TokenStream {
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
  /// Sentences as plain token strings, mostly for tests and debugging.
  std::vector<std::vector<std::string>> words() const;
  bool operator==(const TokenStream&) const = default;
};

struct PipelineConfig {
  std::set<std::string> stopwords;
  int nmax = 3;
  long long min_frequency = 2;
  bool keep_interior_stopwords = true;
  std::set<std::string> entity_gazetteer;  // lowercase names, tokens separated by single spaces
  bool case_fold = true;

  /// Shipped stopword list and gazetteer, nmax 3, min_frequency 2.
  static PipelineConfig defaults();
  /// Throws Error(invalid_argument) when nmax or min_frequency is out of range.
  void check() const;
  std::string digest() const;
};

/// Stopword file: UTF-8, one token per line, '#' starts a comment.
std::set<std::string> parse_word_list(const std::string& text);
std::set<std::string> load_word_list(const std::string& path);
const std::string& default_stopwords_text();
const std::string& default_gazetteer_text();

struct NGramTable {
  std::string article;
  std::map<std::string, long long> entries;  // phrase -> count

  long long count(const std::string& phrase) const;
  bool operator==(const NGramTable&) const = default;
};

enum class Status { pending, as_concept, as_property, as_synonym, rejected };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CandidateTerm {
  std::string phrase;
  int n = 1;
  long long total_frequency = 0;
  std::map<std::string, long long> per_article;
  Status status = Status::pending;
  std::optional<std::string> linked_element;
  std::optional<Timestamp> decided_at;

  bool operator==(const CandidateTerm&) const = default;
};

TokenStream normalize(const std::string& text, const PipelineConfig& config);
TokenStream remove_stopwords(const TokenStream& stream, const PipelineConfig& config);
TokenStream remove_entities_and_numerics(const TokenStream& stream, const PipelineConfig& config);
NGramTable extract_ngrams(const TokenStream& stream, const PipelineConfig& config);
std::vector<CandidateTerm> rank_candidates(const std::vector<NGramTable>& tables, const PipelineConfig& config);

/// True for integers, decimals, percentages, years, ranges and other tokens
/// that begin with a digit.
bool is_numeric_token(const std::string& surface);

/// Full cleaning for one text: normalize, stopword removal (unless interior
/// stopwords are kept), entity/numeric removal.
TokenStream clean(const std::string& text, const PipelineConfig& config);
NGramTable mine_article(const corpus::Article& article, const PipelineConfig& config);
/// One table per article, seed first.
std::vector<NGramTable> mine_corpus(const corpus::Corpus& corpus, const PipelineConfig& config);

/// Candidate export: one JSON object per line.
std::string serialize_candidates(const std::vector<CandidateTerm>& candidates);
/// Throws Error(parse, "malformed-record") with the line number.
std::vector<CandidateTerm> parse_candidates(const std::string& text);

}  // namespace ontoforge::textmine
