#include "ontoforge/wikitext.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "ontoforge/util.hpp"

namespace ontoforge::wikitext {
namespace {

bool starts_with_ci(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  return iequals(s.substr(pos, prefix.size()), prefix);
}

std::string strip_comments(std::string_view in, std::vector<std::string>& warnings) {
  std::string out;
  std::size_t pos = 0;
  while (pos < in.size()) {
    const std::size_t open = in.find("<!--", pos);
    if (open == std::string_view::npos) {
      out.append(in.substr(pos));
      break;
    }
    out.append(in.substr(pos, open - pos));
    const std::size_t close = in.find("-->", open + 4);
    if (close == std::string_view::npos) {
      warnings.emplace_back("unterminated comment");
      break;
    }
    pos = close + 3;
  }
  return out;
}

// Removes <tag ...>...</tag> and self-closing <tag .../> for the named tags,
// including their content.
std::string strip_tag_blocks(std::string_view in, std::string_view tag, std::vector<std::string>& warnings) {
  std::string out;
  const std::string open_prefix = "<" + std::string(tag);
  const std::string close_tag = "</" + std::string(tag);
  std::size_t pos = 0;
  while (pos < in.size()) {
    std::size_t open = std::string_view::npos;
    for (std::size_t i = pos; i < in.size(); ++i) {
      if (in[i] == '<' && starts_with_ci(in, i, open_prefix)) {
        const std::size_t after = i + open_prefix.size();
        if (after >= in.size() || in[after] == '>' || in[after] == ' ' || in[after] == '/' || in[after] == '\t') {
          open = i;
          break;
        }
      }
    }
    if (open == std::string_view::npos) {
      out.append(in.substr(pos));
      break;
    }
    out.append(in.substr(pos, open - pos));
    const std::size_t gt = in.find('>', open);
    if (gt == std::string_view::npos) {
      warnings.emplace_back("unterminated <" + std::string(tag) + "> tag");
      break;
    }
    if (in[gt - 1] == '/') {
      pos = gt + 1;
      continue;
    }
    std::size_t close = std::string_view::npos;
    for (std::size_t i = gt; i < in.size(); ++i) {
      if (in[i] == '<' && starts_with_ci(in, i, close_tag)) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) {
      warnings.emplace_back("unclosed <" + std::string(tag) + "> block");
      pos = gt + 1;
      continue;
    }
    const std::size_t end = in.find('>', close);
    pos = end == std::string_view::npos ? in.size() : end + 1;
  }
  return out;
}

// Removes balanced {{ ... }} spans, nesting aware.
std::string strip_templates(std::string_view in, std::vector<std::string>& warnings) {
  std::string out;
  int depth = 0;
  std::size_t i = 0;
  std::size_t span_start = 0;
  while (i < in.size()) {
    if (in.compare(i, 2, "{{") == 0) {
      if (depth == 0) span_start = out.size();
      ++depth;
      i += 2;
      continue;
    }
    if (depth > 0 && in.compare(i, 2, "}}") == 0) {
      --depth;
      i += 2;
      continue;
    }
    if (depth == 0) out.push_back(in[i]);
    ++i;
  }
  if (depth > 0) {
    warnings.emplace_back("unbalanced template braces");
    out.resize(span_start);
  }
  return out;
}

// Removes {| ... |} tables. Table delimiters must start a line.
std::string strip_tables(std::string_view in, std::vector<std::string>& warnings) {
  std::string out;
  int depth = 0;
  for (const std::string& raw_line : split_lines(in)) {
    const std::string line = trim(raw_line);
    if (line.rfind("{|", 0) == 0) {
      ++depth;
      continue;
    }
    if (depth > 0) {
      if (line.rfind("|}", 0) == 0) --depth;
      continue;
    }
    out.append(raw_line);
    out.push_back('\n');
  }
  if (depth > 0) warnings.emplace_back("unclosed table");
  return out;
}

const std::unordered_set<std::string>& namespaces() {
  static const std::unordered_set<std::string> kNamespaces = {
      "category", "file", "image", "media", "template", "help", "wikipedia", "wp", "project", "portal",
      "user", "talk", "special", "draft", "module", "mediawiki", "book", "timedtext", "wiktionary", "wikt",
      "commons", "meta", "wikisource", "wikiquote", "wikinews", "wikiversity", "wikivoyage", "wikidata",
      "d", "s", "q", "n", "v", "b", "w", "mw", "species", "gadget", "topic"};
  return kNamespaces;
}

bool is_namespace_prefix(const std::string& prefix) {
  const std::string p = ascii_lower(trim(prefix));
  if (p.empty()) return false;
  if (namespaces().count(p) > 0) return true;
  if (p.size() > 5 && p.compare(p.size() - 5, 5, " talk") == 0) return true;
  // Interlanguage prefixes: "de", "fr", "zh-yue", "simple".
  if (p == "simple") return true;
  std::size_t letters = 0;
  while (letters < p.size() && p[letters] >= 'a' && p[letters] <= 'z') ++letters;
  if ((letters == 2 || letters == 3) && (letters == p.size() || p[letters] == '-')) {
    return std::all_of(p.begin() + static_cast<std::ptrdiff_t>(letters), p.end(),
                       [](char c) { return c == '-' || (c >= 'a' && c <= 'z'); });
  }
  return false;
}

// Finds the "]]" matching the "[[" at `open`, honoring nested [[...]].
std::size_t matching_link_close(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i + 1 < s.size(); ++i) {
    if (s.compare(i, 2, "[[") == 0) {
      ++depth;
      ++i;
    } else if (s.compare(i, 2, "]]") == 0) {
      if (--depth == 0) return i;
      ++i;
    }
  }
  return std::string_view::npos;
}

bool is_url(std::string_view s) {
  return s.find("://") != std::string_view::npos || s.rfind("//", 0) == 0 || starts_with_ci(s, 0, "mailto:");
}

class LinkFlattener {
 public:
  LinkFlattener(std::vector<std::string>& links, std::vector<std::string>& warnings)
      : links_(links), warnings_(warnings) {}

  std::string run(std::string_view in) {
    std::string out;
    std::size_t i = 0;
    while (i < in.size()) {
      if (in.compare(i, 2, "[[") == 0) {
        const std::size_t close = matching_link_close(in, i);
        if (close == std::string_view::npos) {
          warnings_.emplace_back("unbalanced link brackets");
          i += 2;
          continue;
        }
        out += internal_link(in.substr(i + 2, close - i - 2));
        i = close + 2;
        continue;
      }
      if (in[i] == '[' && is_url(in.substr(i + 1, 8))) {
        const std::size_t close = in.find(']', i);
        if (close == std::string_view::npos) {
          warnings_.emplace_back("unbalanced external link");
          ++i;
          continue;
        }
        const std::string_view body = in.substr(i + 1, close - i - 1);
        const std::size_t sp = body.find(' ');
        if (sp != std::string_view::npos) out += run(body.substr(sp + 1));
        i = close + 1;
        continue;
      }
      out.push_back(in[i]);
      ++i;
    }
    return out;
  }

 private:
  std::string internal_link(std::string_view body) {
    std::string_view target = body;
    std::string_view display;
    bool has_display = false;
    // The first '|' outside nested links splits target from display text.
    int depth = 0;
    for (std::size_t k = 0; k < body.size(); ++k) {
      if (body.compare(k, 2, "[[") == 0) ++depth;
      if (body.compare(k, 2, "]]") == 0) --depth;
      if (body[k] == '|' && depth == 0) {
        target = body.substr(0, k);
        display = body.substr(k + 1);
        has_display = true;
        break;
      }
    }
    std::string_view t = target;
    while (!t.empty() && (t.front() == ' ' || t.front() == ':')) t.remove_prefix(1);
    const std::size_t colon = t.find(':');
    if (colon != std::string_view::npos && is_namespace_prefix(std::string(t.substr(0, colon)))) {
      return "";  // file embeds, categories, interwiki: dropped with their captions
    }
    const std::string slug = link_target_slug(target);
    if (!slug.empty() && std::find(links_.begin(), links_.end(), slug) == links_.end()) links_.push_back(slug);
    if (has_display) {
      // Pipe trick "[[Foo (bar)|]]" shows the bare target; we just show the target.
      if (trim(display).empty()) return trim(target);
      return run(display);
    }
    std::string shown = trim(target);
    if (!shown.empty() && shown.front() == '#') shown.erase(0, 1);
    return shown;
  }

  std::vector<std::string>& links_;
  std::vector<std::string>& warnings_;
};

std::string strip_quotes_and_tags(std::string_view in) {
  std::string out;
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] == '\'' && i + 1 < in.size() && in[i + 1] == '\'') {
      while (i < in.size() && in[i] == '\'') ++i;
      continue;
    }
    if (in[i] == '<') {
      // Generic html tag such as <br/>, <sup>, </small>: drop the tag, keep content.
      const std::size_t gt = in.find('>', i);
      const bool tagish = i + 1 < in.size() &&
                          (std::isalpha(static_cast<unsigned char>(in[i + 1])) || in[i + 1] == '/');
      if (tagish && gt != std::string_view::npos) {
        i = gt + 1;
        continue;
      }
    }
    out.push_back(in[i]);
    ++i;
  }
  return out;
}

std::string format_lines(std::string_view in) {
  std::string out;
  bool blank_pending = false;
  for (const std::string& raw : split_lines(in)) {
    std::string line = trim(raw);
    if (line.rfind("__", 0) == 0 && line.size() > 4 && line.compare(line.size() - 2, 2, "__") == 0) continue;
    if (line.rfind("----", 0) == 0) continue;
    if (line.size() >= 2 && line.front() == '=' && line.back() == '=') {
      std::size_t b = 0, e = line.size();
      while (b < e && line[b] == '=') ++b;
      while (e > b && line[e - 1] == '=') --e;
      line = trim(std::string_view(line).substr(b, e - b));
    }
    std::size_t bullet = 0;
    while (bullet < line.size() && (line[bullet] == '*' || line[bullet] == '#' || line[bullet] == ':' || line[bullet] == ';')) ++bullet;
    if (bullet > 0) line = trim(std::string_view(line).substr(bullet));
    // Residue from unbalanced constructs must not survive into prose.
    for (const std::string_view token : {"[[", "]]", "{{", "}}"}) {
      std::size_t p;
      while ((p = line.find(token)) != std::string::npos) line.erase(p, token.size());
    }
    std::size_t p;
    while ((p = ascii_lower(line).find("<ref")) != std::string::npos) line.erase(p, 4);
    std::string collapsed;
    for (char c : trim(line)) {
      const bool space = c == ' ' || c == '\t';
      if (space && !collapsed.empty() && collapsed.back() == ' ') continue;
      collapsed.push_back(space ? ' ' : c);
    }
    line = std::move(collapsed);
    if (line.empty()) {
      blank_pending = !out.empty();
      continue;
    }
    if (blank_pending) out.push_back('\n');
    blank_pending = false;
    if (!out.empty()) out.push_back('\n');
    out += line;
  }
  return out;
}

}  // namespace

std::string link_target_slug(std::string_view target) {
  std::string t = trim(percent_decode(target));
  while (!t.empty() && t.front() == ':') t.erase(0, 1);
  if (t.empty() || t.front() == '#') return "";
  if (is_url(t)) return "";
  const std::size_t colon = t.find(':');
  if (colon != std::string::npos && is_namespace_prefix(t.substr(0, colon))) return "";
  const std::size_t hash = t.find('#');
  if (hash != std::string::npos) t.resize(hash);
  return slugify(t);
}

Parsed parse(std::string_view raw) {
  Parsed result;
  std::string s = strip_comments(raw, result.warnings);
  for (const std::string_view tag : {"ref", "gallery", "math", "timeline", "score", "syntaxhighlight"}) {
    s = strip_tag_blocks(s, tag, result.warnings);
  }
  s = strip_templates(s, result.warnings);
  s = strip_tables(s, result.warnings);
  LinkFlattener flattener(result.links, result.warnings);
  s = flattener.run(s);
  s = strip_quotes_and_tags(s);
  result.text = format_lines(s);
  return result;
}

std::vector<std::string> extract_links(std::string_view raw) { return parse(raw).links; }

}  // namespace ontoforge::wikitext
