#include <algorithm>
#include <cctype>

#include "ontoforge/error.hpp"
#include "ontoforge/rdf.hpp"

namespace ontoforge::rdf {

namespace {

std::string escape_literal(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_iri(std::string_view s) {
  std::string out;
  static constexpr char kHex[] = "0123456789ABCDEF";
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      out.push_back('%');
      out.push_back(kHex[u >> 4]);
      out.push_back(kHex[u & 0xf]);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool pn_local_ok(std::string_view local) {
  if (local.empty()) return false;
  const auto ok = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; };
  if (local.front() == '-') return false;
  return std::all_of(local.begin(), local.end(), ok);
}

}  // namespace

std::string Term::ntriples() const {
  switch (type) {
    case Type::iri: return "<" + escape_iri(value) + ">";
    case Type::blank: return "_:" + value;
    case Type::literal: {
      std::string out = "\"" + escape_literal(value) + "\"";
      if (!lang.empty()) return out + "@" + lang;
      if (!datatype.empty()) return out + "^^<" + escape_iri(datatype) + ">";
      return out;
    }
  }
  return {};
}

void canonical_sort(std::vector<Triple>& triples) {
  struct Keyed {
    std::string s, p, o;
    Triple t;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(triples.size());
  for (Triple& t : triples) keyed.push_back({t.subject.ntriples(), t.predicate.ntriples(), t.object.ntriples(), std::move(t)});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.s, a.p, a.o) < std::tie(b.s, b.p, b.o);
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const Keyed& a, const Keyed& b) { return a.s == b.s && a.p == b.p && a.o == b.o; }),
              keyed.end());
  triples.clear();
  for (Keyed& k : keyed) triples.push_back(std::move(k.t));
}

namespace {

std::string render(const Term& t, const std::map<std::string, std::string>& prefixes) {
  const auto compact = [&](const std::string& iri) -> std::string {
    for (const auto& [prefix, ns] : prefixes) {
      if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0 && pn_local_ok(std::string_view(iri).substr(ns.size()))) {
        return prefix + ":" + iri.substr(ns.size());
      }
    }
    return "<" + escape_iri(iri) + ">";
  };
  if (t.type == Term::Type::iri) return compact(t.value);
  if (t.type == Term::Type::blank) return "_:" + t.value;
  std::string out = "\"" + escape_literal(t.value) + "\"";
  if (!t.lang.empty()) return out + "@" + t.lang;
  if (!t.datatype.empty()) return out + "^^" + compact(t.datatype);
  return out;
}

}  // namespace

std::string write_turtle(const std::vector<Triple>& triples, const std::map<std::string, std::string>& prefixes) {
  std::string out;
  for (const auto& [prefix, ns] : prefixes) out += "@prefix " + prefix + ": <" + escape_iri(ns) + "> .\n";
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    const bool same_subject = i > 0 && triples[i - 1].subject == t.subject;
    if (!same_subject) {
      out += "\n" + render(t.subject, prefixes) + "\n";
    }
    out += "    " + render(t.predicate, prefixes) + " " + render(t.object, prefixes);
    const bool next_same = i + 1 < triples.size() && triples[i + 1].subject == t.subject;
    out += next_same ? " ;\n" : " .\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : s_(text) {}

  std::vector<Triple> run() {
    skip_ws();
    while (pos_ < s_.size()) {
      statement();
      skip_ws();
    }
    return std::move(triples_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::parse, "syntax-error",
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }

  void skip_ws() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool keyword(std::string_view kw, bool case_insensitive) {
    if (pos_ + kw.size() > s_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      const char a = s_[pos_ + i];
      if (case_insensitive ? std::tolower(static_cast<unsigned char>(a)) != kw[i] : a != kw[i]) return false;
    }
    const char after = pos_ + kw.size() < s_.size() ? s_[pos_ + kw.size()] : ' ';
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':') return false;
    pos_ += kw.size();
    return true;
  }

  void statement() {
    if (keyword("@prefix", false)) {
      prefix_decl();
      expect('.');
      return;
    }
    if (keyword("@base", false)) {
      skip_ws();
      base_ = iri_ref();
      expect('.');
      return;
    }
    if (keyword("prefix", true)) {
      prefix_decl();
      return;
    }
    if (keyword("base", true)) {
      skip_ws();
      base_ = iri_ref();
      return;
    }
    Term subject = subject_term();
    skip_ws();
    if (peek() == '.' && subject.type == Term::Type::blank && anon_subject_) {
      ++pos_;  // "[ ... ] ." on its own
      return;
    }
    predicate_object_list(subject);
    expect('.');
  }

  void prefix_decl() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && peek() != ':') {
      if (!(std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-' || peek() == '.')) {
        fail("bad prefix name");
      }
      ++pos_;
    }
    if (at_end()) fail("unterminated prefix declaration");
    const std::string name(s_.substr(start, pos_ - start));
    ++pos_;
    skip_ws();
    prefixes_[name] = iri_ref();
  }

  std::string resolve(std::string iri) const {
    if (iri.find(':') == std::string::npos && !base_.empty()) return base_ + iri;
    return iri;
  }

  std::string iri_ref() {
    if (peek() != '<') fail("expected IRI");
    ++pos_;
    std::string out;
    while (!at_end() && peek() != '>') {
      const char c = peek();
      if (c == '\n' || c == ' ' || c == '<' || c == '"') fail("illegal character in IRI");
      if (c == '\\') {
        ++pos_;
        out += unicode_escape();
        continue;
      }
      out.push_back(c);
      ++pos_;
    }
    if (at_end()) fail("unterminated IRI");
    ++pos_;
    return resolve(out);
  }

  std::string prefixed_name() {
    const std::size_t start = pos_;
    while (!at_end() && peek() != ':') {
      const char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) break;
      ++pos_;
    }
    if (peek() != ':') {
      pos_ = start;
      fail("expected a term");
    }
    const std::string prefix(s_.substr(start, pos_ - start));
    ++pos_;
    std::string local;
    while (!at_end()) {
      const char c = peek();
      const auto u = static_cast<unsigned char>(c);
      if (std::isalnum(u) || c == '_' || c == '-' || c == ':' || u >= 0x80) {
        local.push_back(c);
        ++pos_;
      } else if (c == '.' && pos_ + 1 < s_.size() &&
                 (std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '_' || s_[pos_ + 1] == '-')) {
        local.push_back(c);
        ++pos_;
      } else if (c == '%' && pos_ + 2 < s_.size()) {
        local.append(s_.substr(pos_, 3));
        pos_ += 3;
      } else if (c == '\\' && pos_ + 1 < s_.size()) {
        local.push_back(s_[pos_ + 1]);
        pos_ += 2;
      } else {
        break;
      }
    }
    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    return it->second + local;
  }

  std::string unicode_escape() {
    // Called just after a backslash.
    const char kind = peek();
    std::size_t digits = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (digits == 0) fail("bad escape in IRI");
    ++pos_;
    if (pos_ + digits > s_.size()) fail("truncated unicode escape");
    const std::string hex(s_.substr(pos_, digits));
    pos_ += digits;
    unsigned long cp = 0;
    try {
      cp = std::stoul(hex, nullptr, 16);
    } catch (...) {
      fail("bad unicode escape");
    }
    return utf8(cp);
  }

  static std::string utf8(unsigned long cp) {
    std::string out;
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
  }

  Term iri_term() {
    skip_ws();
    if (peek() == '<') return Term::iri(iri_ref());
    return Term::iri(prefixed_name());
  }

  Term blank_label() {
    pos_ += 2;  // "_:"
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) ++pos_;
    if (pos_ == start) fail("empty blank node label");
    return Term::blank("b_" + std::string(s_.substr(start, pos_ - start)));
  }

  Term fresh_blank() { return Term::blank("anon" + std::to_string(++blank_counter_)); }

  Term subject_term() {
    skip_ws();
    anon_subject_ = false;
    if (peek() == '_' && peek(1) == ':') return blank_label();
    if (peek() == '[') {
      anon_subject_ = true;
      return blank_property_list();
    }
    if (peek() == '(') fail("collections are not supported");
    if (peek() == '"' || peek() == '\'') fail("a literal cannot be a subject");
    return iri_term();
  }

  Term blank_property_list() {
    ++pos_;  // '['
    Term node = fresh_blank();
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return node;
    }
    predicate_object_list(node);
    expect(']');
    return node;
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      skip_ws();
      Term predicate;
      if (peek() == 'a' && keyword("a", false)) {
        predicate = Term::iri(std::string(kRdf) + "type");
      } else {
        predicate = iri_term();
      }
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      if (peek() == '.' || peek() == ']') return;  // trailing ';'
    }
  }

  void object_list(const Term& subject, const Term& predicate) {
    for (;;) {
      Term object = object_term();
      triples_.push_back({subject, predicate, std::move(object)});
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  Term object_term() {
    skip_ws();
    const char c = peek();
    if (c == '"' || c == '\'') return literal();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') fail("collections are not supported");
    if (std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+' || c == '.') && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return numeric();
    }
    if (keyword("true", false)) return Term::literal("true", std::string(kXsd) + "boolean");
    if (keyword("false", false)) return Term::literal("false", std::string(kXsd) + "boolean");
    if (at_end()) fail("unexpected end of input");
    return iri_term();
  }

  Term numeric() {
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    bool dot = false, exp = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' && !dot && !exp && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        dot = true;
        ++pos_;
      } else if ((c == 'e' || c == 'E') && !exp) {
        exp = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
      } else {
        break;
      }
    }
    const std::string lexical(s_.substr(start, pos_ - start));
    const char* type = exp ? "double" : dot ? "decimal" : "integer";
    return Term::literal(lexical, std::string(kXsd) + type);
  }

  Term literal() {
    const char quote = peek();
    const bool long_form = peek(1) == quote && peek(2) == quote;
    pos_ += long_form ? 3 : 1;
    std::string value;
    for (;;) {
      if (at_end()) fail("unterminated string literal");
      const char c = peek();
      if (long_form && c == quote && peek(1) == quote && peek(2) == quote) {
        pos_ += 3;
        break;
      }
      if (!long_form && c == quote) {
        ++pos_;
        break;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("newline in string literal");
      if (c == '\\') {
        ++pos_;
        const char e = peek();
        switch (e) {
          case 't': value.push_back('\t'); ++pos_; break;
          case 'n': value.push_back('\n'); ++pos_; break;
          case 'r': value.push_back('\r'); ++pos_; break;
          case 'b': value.push_back('\b'); ++pos_; break;
          case 'f': value.push_back('\f'); ++pos_; break;
          case '"': value.push_back('"'); ++pos_; break;
          case '\'': value.push_back('\''); ++pos_; break;
          case '\\': value.push_back('\\'); ++pos_; break;
          case 'u':
          case 'U': value += unicode_escape(); break;
          default: fail("bad escape in string literal");
        }
        continue;
      }
      value.push_back(c);
      ++pos_;
    }
    if (peek() == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) ++pos_;
      if (pos_ == start) fail("empty language tag");
      return Term::literal(std::move(value), {}, std::string(s_.substr(start, pos_ - start)));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      Term dt = iri_term();
      return Term::literal(std::move(value), dt.value);
    }
    return Term::literal(std::move(value));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::string base_;
  std::map<std::string, std::string> prefixes_;
  std::vector<Triple> triples_;
  int blank_counter_ = 0;
  bool anon_subject_ = false;
};

}  // namespace

std::vector<Triple> parse_turtle(std::string_view text) { return TurtleParser(text).run(); }

}  // namespace ontoforge::rdf
