#include "ontoforge/textmine.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "ontoforge/error.hpp"

namespace ontoforge::textmine {

using nlohmann::json;

std::size_t TokenStream::token_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences) n += s.size();
  return n;
}

std::vector<std::vector<std::string>> TokenStream::words() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(sentences.size());
  for (const Sentence& s : sentences) {
    std::vector<std::string> w;
    w.reserve(s.size());
    for (const Token& t : s) w.push_back(t.text);
    out.push_back(std::move(w));
  }
  return out;
}

std::set<std::string> parse_word_list(const std::string& text) {
  std::set<std::string> words;
  for (const std::string& line : split_lines(text)) {
    std::string entry = line;
    const std::size_t hash = entry.find('#');
    if (hash != std::string::npos) entry.resize(hash);
    entry = trim(entry);
    if (entry.empty()) continue;
    // Multi-word entries (gazetteer) are normalized to single spaces.
    std::string normalized;
    for (const char c : ascii_lower(entry)) {
      const bool space = c == ' ' || c == '\t';
      if (space && (normalized.empty() || normalized.back() == ' ')) continue;
      normalized.push_back(space ? ' ' : c);
    }
    words.insert(trim(normalized));
  }
  return words;
}

std::set<std::string> load_word_list(const std::string& path) { return parse_word_list(read_file(path)); }

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig c;
  c.stopwords = parse_word_list(default_stopwords_text());
  c.entity_gazetteer = parse_word_list(default_gazetteer_text());
  return c;
}

void PipelineConfig::check() const {
  if (nmax < 1 || nmax > 3) throw Error(ErrorKind::invalid_argument, "bad-config", "nmax must be 1, 2 or 3");
  if (min_frequency < 1) throw Error(ErrorKind::invalid_argument, "bad-config", "min_frequency must be at least 1");
}

std::string PipelineConfig::digest() const {
  const json j = {{"stopwords", stopwords},
                  {"nmax", nmax},
                  {"min_frequency", min_frequency},
                  {"keep_interior_stopwords", keep_interior_stopwords},
                  {"entity_gazetteer", entity_gazetteer},
                  {"case_fold", case_fold}};
  return sha256_hex(j.dump());
}

long long NGramTable::count(const std::string& phrase) const {
  const auto it = entries.find(phrase);
  return it == entries.end() ? 0 : it->second;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pending: return "pending";
    case Status::as_concept: return "concept";
    case Status::as_property: return "property";
    case Status::as_synonym: return "synonym";
    case Status::rejected: return "rejected";
  }
  return "pending";
}

Status status_from_string(const std::string& s) {
  static const std::array<Status, 5> kAll = {Status::pending, Status::as_concept, Status::as_property, Status::as_synonym,
                                             Status::rejected};
  for (Status st : kAll) {
    if (to_string(st) == s) return st;
  }
  throw Error(ErrorKind::invalid_argument, "bad-status", "unknown candidate status: " + s);
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

// Multi-byte punctuation stripped from token edges like ASCII punctuation.
constexpr std::array<std::string_view, 8> kUnicodePunct = {
    "\xE2\x80\x93", "\xE2\x80\x94", "\xE2\x80\x98", "\xE2\x80\x99",
    "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\xA6", "\xC2\xA0"};

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Length of an edge punctuation sequence at the front (or back) of s, or 0.
std::size_t punct_prefix(std::string_view s) {
  if (s.empty()) return 0;
  const auto c = static_cast<unsigned char>(s.front());
  if (c < 0x80) return is_ascii_alnum(s.front()) ? 0 : 1;
  for (std::string_view p : kUnicodePunct) {
    if (s.substr(0, p.size()) == p) return p.size();
  }
  return 0;
}

std::size_t punct_suffix(std::string_view s) {
  if (s.empty()) return 0;
  const auto c = static_cast<unsigned char>(s.back());
  if (c < 0x80) return is_ascii_alnum(s.back()) ? 0 : 1;
  for (std::string_view p : kUnicodePunct) {
    if (s.size() >= p.size() && s.substr(s.size() - p.size()) == p) return p.size();
  }
  return 0;
}

bool ends_sentence(std::string_view raw) {
  // Look past closing quotes/brackets: `clean.)` and `clean."` end sentences.
  while (!raw.empty()) {
    const char c = raw.back();
    if (c == '.' || c == '!' || c == '?') return true;
    if (c == ')' || c == ']' || c == '"' || c == '\'') {
      raw.remove_suffix(1);
      continue;
    }
    if (raw.size() >= 3 && (raw.substr(raw.size() - 3) == "\xE2\x80\x9D" || raw.substr(raw.size() - 3) == "\xE2\x80\x99")) {
      raw.remove_suffix(3);
      continue;
    }
    return false;
  }
  return false;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

TokenStream normalize(const std::string& text, const PipelineConfig& config) {
  TokenStream stream;
  Sentence current;
  const auto flush = [&] {
    if (!current.empty()) stream.sentences.push_back(std::move(current));
    current.clear();
  };
  for (const std::string& line : split_lines(text)) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      std::string_view raw(line.data() + i, j - i);
      i = j;
      const bool terminal = ends_sentence(raw);
      std::string_view core = raw;
      for (std::size_t k; (k = punct_prefix(core)) > 0;) core.remove_prefix(k);
      for (std::size_t k; (k = punct_suffix(core)) > 0;) core.remove_suffix(k);
      if (!core.empty()) {
        Token t;
        t.surface = std::string(core);
        t.text = config.case_fold ? ascii_lower(core) : t.surface;
        t.position = current.size();
        current.push_back(std::move(t));
      }
      if (terminal) flush();
    }
    flush();  // a line break always ends a sentence (headings, list items)
  }
  return stream;
}

TokenStream remove_stopwords(const TokenStream& stream, const PipelineConfig& config) {
  TokenStream out;
  for (const Sentence& s : stream.sentences) {
    Sentence kept;
    for (const Token& t : s) {
      if (config.stopwords.count(ascii_lower(t.text)) == 0) kept.push_back(t);
    }
    if (!kept.empty()) out.sentences.push_back(std::move(kept));
  }
  return out;
}

bool is_numeric_token(const std::string& surface) {
  std::string_view s = surface;
  while (!s.empty() && (s.front() == '$' || s.front() == '~' || s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  for (std::string_view sign : {"\xE2\x82\xAC", "\xC2\xA3", "\xC2\xB1"}) {  // euro, pound, plus-minus
    if (s.substr(0, sign.size()) == sign) s.remove_prefix(sign.size());
  }
  return !s.empty() && s.front() >= '0' && s.front() <= '9';
}

namespace {

bool is_title_case(const std::string& surface) {
  if (surface.empty() || surface[0] < 'A' || surface[0] > 'Z') return false;
  // All-caps tokens (WTG, WPP) are abbreviations, not names.
  return std::any_of(surface.begin() + 1, surface.end(), [](char c) { return c >= 'a' && c <= 'z'; }) ||
         surface.size() == 1;
}

constexpr std::size_t kMaxGazetteerTokens = 8;

}  // namespace

TokenStream remove_entities_and_numerics(const TokenStream& stream, const PipelineConfig& config) {
  TokenStream out;
  for (const Sentence& s : stream.sentences) {
    std::vector<bool> drop(s.size(), false);

    // Gazetteer: longest match first, scanning left to right.
    if (!config.entity_gazetteer.empty()) {
      std::size_t i = 0;
      while (i < s.size()) {
        std::size_t matched = 0;
        std::string phrase;
        for (std::size_t len = 1; len <= kMaxGazetteerTokens && i + len <= s.size(); ++len) {
          if (len > 1) phrase.push_back(' ');
          phrase += ascii_lower(s[i + len - 1].surface);
          if (config.entity_gazetteer.count(phrase) > 0) matched = len;
        }
        if (matched > 0) {
          std::fill(drop.begin() + static_cast<std::ptrdiff_t>(i), drop.begin() + static_cast<std::ptrdiff_t>(i + matched), true);
          i += matched;
        } else {
          ++i;
        }
      }
    }

    for (std::size_t i = 0; i < s.size(); ++i) {
      if (is_numeric_token(s[i].surface)) drop[i] = true;
    }

    // Capitalized tokens away from the sentence start are proper-name runs.
    // A sentence-initial capital is positional unless the run continues
    // directly into such a mid-sentence token.
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].position > 0 && is_title_case(s[i].surface)) {
        drop[i] = true;
        if (i == 1 && s[0].position == 0 && s[1].position == 1 && is_title_case(s[0].surface)) drop[0] = true;
      }
    }

    Sentence kept;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!drop[i]) kept.push_back(s[i]);
    }
    if (!kept.empty()) out.sentences.push_back(std::move(kept));
  }
  return out;
}

NGramTable extract_ngrams(const TokenStream& stream, const PipelineConfig& config) {
  config.check();
  NGramTable table;
  const auto is_stop = [&](const Token& t) { return config.stopwords.count(ascii_lower(t.text)) > 0; };
  for (const Sentence& s : stream.sentences) {
    for (std::size_t n = 1; n <= static_cast<std::size_t>(config.nmax); ++n) {
      if (s.size() < n) break;
      for (std::size_t i = 0; i + n <= s.size(); ++i) {
        if (config.keep_interior_stopwords && (is_stop(s[i]) || is_stop(s[i + n - 1]))) continue;
        std::string phrase = s[i].text;
        for (std::size_t k = 1; k < n; ++k) {
          phrase.push_back(' ');
          phrase += s[i + k].text;
        }
        ++table.entries[phrase];
      }
    }
  }
  return table;
}

std::vector<CandidateTerm> rank_candidates(const std::vector<NGramTable>& tables, const PipelineConfig& config) {
  config.check();
  std::map<std::string, CandidateTerm> merged;
  for (const NGramTable& table : tables) {
    for (const auto& [phrase, count] : table.entries) {
      CandidateTerm& c = merged[phrase];
      c.phrase = phrase;
      c.total_frequency += count;
      c.per_article[table.article] += count;
    }
  }
  std::vector<CandidateTerm> out;
  out.reserve(merged.size());
  for (auto& [phrase, c] : merged) {
    if (c.total_frequency < config.min_frequency) continue;
    c.n = static_cast<int>(std::count(phrase.begin(), phrase.end(), ' ')) + 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CandidateTerm& a, const CandidateTerm& b) {
    if (a.total_frequency != b.total_frequency) return a.total_frequency > b.total_frequency;
    return a.phrase < b.phrase;
  });
  return out;
}

TokenStream clean(const std::string& text, const PipelineConfig& config) {
  TokenStream stream = normalize(text, config);
  if (!config.keep_interior_stopwords) stream = remove_stopwords(stream, config);
  return remove_entities_and_numerics(stream, config);
}

NGramTable mine_article(const corpus::Article& article, const PipelineConfig& config) {
  NGramTable table = extract_ngrams(clean(article.text, config), config);
  table.article = article.slug;
  return table;
}

std::vector<NGramTable> mine_corpus(const corpus::Corpus& corpus, const PipelineConfig& config) {
  std::vector<NGramTable> tables;
  tables.push_back(mine_article(corpus.seed_article(), config));
  for (const auto& [slug, article] : corpus.articles) {
    if (slug != corpus.seed) tables.push_back(mine_article(article, config));
  }
  return tables;
}

// ---------------------------------------------------------------------------
// Candidate export

std::string serialize_candidates(const std::vector<CandidateTerm>& candidates) {
  std::string out;
  for (const CandidateTerm& c : candidates) {
    json j = {{"phrase", c.phrase},
              {"n", c.n},
              {"total_frequency", c.total_frequency},
              {"per_article", c.per_article},
              {"status", to_string(c.status)}};
    if (c.linked_element) j["linked_element"] = *c.linked_element;
    if (c.decided_at) j["decided_at"] = format_timestamp(*c.decided_at);
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<CandidateTerm> parse_candidates(const std::string& text) {
  std::vector<CandidateTerm> out;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      const json j = json::parse(lines[i]);
      CandidateTerm c;
      c.phrase = j.at("phrase").get<std::string>();
      c.n = j.at("n").get<int>();
      c.total_frequency = j.at("total_frequency").get<long long>();
      c.per_article = j.at("per_article").get<std::map<std::string, long long>>();
      c.status = status_from_string(j.value("status", "pending"));
      if (j.contains("linked_element")) c.linked_element = j["linked_element"].get<std::string>();
      if (j.contains("decided_at")) c.decided_at = parse_timestamp(j["decided_at"].get<std::string>());
      out.push_back(std::move(c));
    } catch (const std::exception& e) {
      throw Error(ErrorKind::parse, "malformed-record", "line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ontoforge::textmine
