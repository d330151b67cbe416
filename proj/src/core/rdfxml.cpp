#include <algorithm>
#include <cctype>
#include <optional>

#include "ontoforge/error.hpp"
#include "ontoforge/rdf.hpp"

namespace ontoforge::rdf {

namespace {

std::string xml_escape(std::string_view s, bool attribute) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
          break;
        }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
  return out;
}

// Splits an IRI into (prefix, local) using the declared namespaces.
std::optional<std::pair<std::string, std::string>> qname(const std::string& iri,
                                                          const std::map<std::string, std::string>& prefixes) {
  for (const auto& [prefix, ns] : prefixes) {
    if (iri.size() <= ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
    const std::string local = iri.substr(ns.size());
    const bool ok = (std::isalpha(static_cast<unsigned char>(local[0])) || local[0] == '_') &&
                    std::all_of(local.begin(), local.end(), [](char c) {
                      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
                    });
    if (ok) return std::make_pair(prefix, local);
  }
  return std::nullopt;
}

}  // namespace

std::string write_rdfxml(const std::vector<Triple>& triples, const std::map<std::string, std::string>& prefixes) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rdf:RDF";
  for (const auto& [prefix, ns] : prefixes) out += "\n    xmlns:" + prefix + "=\"" + xml_escape(ns, true) + "\"";
  out += ">\n";
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (i == 0 || !(triples[i - 1].subject == t.subject)) {
      out += t.subject.type == Term::Type::blank
                 ? "  <rdf:Description rdf:nodeID=\"" + xml_escape(t.subject.value, true) + "\">\n"
                 : "  <rdf:Description rdf:about=\"" + xml_escape(t.subject.value, true) + "\">\n";
    }
    const auto q = qname(t.predicate.value, prefixes);
    if (!q) throw Error(ErrorKind::internal, "unwritable-predicate", "no namespace prefix for " + t.predicate.value);
    const std::string tag = q->first + ":" + q->second;
    switch (t.object.type) {
      case Term::Type::iri:
        out += "    <" + tag + " rdf:resource=\"" + xml_escape(t.object.value, true) + "\"/>\n";
        break;
      case Term::Type::blank:
        out += "    <" + tag + " rdf:nodeID=\"" + xml_escape(t.object.value, true) + "\"/>\n";
        break;
      case Term::Type::literal: {
        std::string attrs;
        if (!t.object.lang.empty()) attrs = " xml:lang=\"" + xml_escape(t.object.lang, true) + "\"";
        if (!t.object.datatype.empty()) attrs = " rdf:datatype=\"" + xml_escape(t.object.datatype, true) + "\"";
        out += "    <" + tag + attrs + ">" + xml_escape(t.object.value, false) + "</" + tag + ">\n";
        break;
      }
    }
    if (i + 1 == triples.size() || !(triples[i + 1].subject == t.subject)) out += "  </rdf:Description>\n";
  }
  out += "</rdf:RDF>\n";
  return out;
}

// ---------------------------------------------------------------------------
// Reader

namespace {

struct Element {
  std::string name;  // qualified, e.g. "rdf:Description"
  std::vector<std::pair<std::string, std::string>> attrs;
  bool self_closing = false;
};

class XmlReader {
 public:
  explicit XmlReader(std::string_view s) : s_(s) {}

  std::vector<Triple> run() {
    skip_prolog();
    Element root = open_tag();
    if (local(root.name) != "RDF") fail("root element must be rdf:RDF");
    declare(root);
    if (root.self_closing) return {};
    for (;;) {
      skip_misc();
      if (closing_ahead()) {
        close_tag(root.name);
        break;
      }
      node_element();
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

  static std::string local(const std::string& qname) {
    const std::size_t colon = qname.find(':');
    return colon == std::string::npos ? qname : qname.substr(colon + 1);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void skip_until(std::string_view end) {
    const std::size_t e = s_.find(end, pos_);
    if (e == std::string_view::npos) fail("unterminated markup");
    pos_ = e + end.size();
  }

  void skip_misc() {
    for (;;) {
      skip_space();
      if (s_.substr(pos_, 4) == "<!--") {
        skip_until("-->");
      } else if (s_.substr(pos_, 2) == "<?") {
        skip_until("?>");
      } else {
        return;
      }
    }
  }

  void skip_prolog() {
    for (;;) {
      skip_misc();
      if (s_.substr(pos_, 9) == "<!DOCTYPE") {
        // Internal subsets with entity declarations are not expanded.
        const std::size_t bracket = s_.find('[', pos_), gt = s_.find('>', pos_);
        if (bracket != std::string_view::npos && bracket < gt) {
          pos_ = bracket;
          skip_until("]>");
        } else {
          skip_until(">");
        }
        continue;
      }
      return;
    }
  }

  bool closing_ahead() const { return s_.substr(pos_, 2) == "</"; }

  std::string name_token() {
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_' || c == '-' || c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string decode(std::string_view raw) const {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      const std::size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity reference");
      const std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "amp") out.push_back('&');
      else if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (!ent.empty() && ent[0] == '#') {
        unsigned long cp = 0;
        try {
          cp = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X') ? std::stoul(std::string(ent.substr(2)), nullptr, 16)
                                                                    : std::stoul(std::string(ent.substr(1)));
        } catch (...) {
          fail("bad character reference");
        }
        if (cp < 0x80) {
          out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
          out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
          out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
          out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
          out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
          out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
      } else {
        fail("unknown entity &" + std::string(ent) + ";");
      }
      i = semi;
    }
    return out;
  }

  Element open_tag() {
    skip_misc();
    if (pos_ >= s_.size() || s_[pos_] != '<') fail("expected an element");
    ++pos_;
    Element e;
    e.name = name_token();
    for (;;) {
      skip_space();
      if (s_.substr(pos_, 2) == "/>") {
        pos_ += 2;
        e.self_closing = true;
        return e;
      }
      if (pos_ < s_.size() && s_[pos_] == '>') {
        ++pos_;
        return e;
      }
      std::string attr = name_token();
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' after attribute " + attr);
      ++pos_;
      skip_space();
      const char quote = pos_ < s_.size() ? s_[pos_] : '\0';
      if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
      const std::size_t end = s_.find(quote, pos_ + 1);
      if (end == std::string_view::npos) fail("unterminated attribute value");
      e.attrs.emplace_back(std::move(attr), decode(s_.substr(pos_ + 1, end - pos_ - 1)));
      pos_ = end + 1;
    }
  }

  void close_tag(const std::string& name) {
    skip_misc();
    if (!closing_ahead()) fail("expected </" + name + ">");
    pos_ += 2;
    const std::string got = name_token();
    if (got != name) fail("mismatched closing tag </" + got + ">, expected </" + name + ">");
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != '>') fail("expected '>'");
    ++pos_;
  }

  void declare(const Element& e) {
    for (const auto& [k, v] : e.attrs) {
      if (k.rfind("xmlns:", 0) == 0) ns_[k.substr(6)] = v;
      if (k == "xml:base") base_ = v;
    }
  }

  std::string expand(const std::string& qname) const {
    const std::size_t colon = qname.find(':');
    if (colon == std::string::npos) fail("unqualified name " + qname);
    const auto it = ns_.find(qname.substr(0, colon));
    if (it == ns_.end()) fail("undeclared namespace prefix in " + qname);
    return it->second + qname.substr(colon + 1);
  }

  std::optional<std::string> attr(const Element& e, std::string_view rdf_local) const {
    for (const auto& [k, v] : e.attrs) {
      if (k.rfind("xml", 0) == 0) continue;  // xml:lang, xmlns:*
      if (k.find(':') != std::string::npos && local(k) == rdf_local && expand(k).rfind(std::string(kRdf), 0) == 0) return v;
    }
    return std::nullopt;
  }

  std::string resolve(const std::string& iri) const {
    if (!iri.empty() && iri[0] == '#') return base_ + iri;
    return iri;
  }

  void node_element() {
    Element node = open_tag();
    declare(node);
    Term subject;
    if (auto about = attr(node, "about")) {
      subject = Term::iri(resolve(*about));
    } else if (auto id = attr(node, "nodeID")) {
      subject = Term::blank(*id);
    } else if (auto rid = attr(node, "ID")) {
      subject = Term::iri(base_ + "#" + *rid);
    } else {
      subject = Term::blank("x" + std::to_string(++anon_));
    }
    const std::string node_iri = expand(node.name);
    if (node_iri != std::string(kRdf) + "Description") {
      triples_.push_back({subject, Term::iri(std::string(kRdf) + "type"), Term::iri(node_iri)});
    }
    if (node.self_closing) return;
    for (;;) {
      skip_misc();
      if (closing_ahead()) {
        close_tag(node.name);
        return;
      }
      property_element(subject);
    }
  }

  void property_element(const Term& subject) {
    Element prop = open_tag();
    const Term predicate = Term::iri(expand(prop.name));
    if (auto res = attr(prop, "resource")) {
      triples_.push_back({subject, predicate, Term::iri(resolve(*res))});
      if (!prop.self_closing) close_tag(prop.name);
      return;
    }
    if (auto nid = attr(prop, "nodeID")) {
      triples_.push_back({subject, predicate, Term::blank(*nid)});
      if (!prop.self_closing) close_tag(prop.name);
      return;
    }
    if (prop.self_closing) {
      triples_.push_back({subject, predicate, Term::literal("")});
      return;
    }
    const std::size_t text_start = pos_;
    const std::size_t lt = s_.find('<', pos_);
    if (lt == std::string_view::npos) fail("unterminated property element");
    if (s_.substr(lt, 2) != "</") fail("nested node elements are not supported");
    std::string datatype, lang;
    if (auto dt = attr(prop, "datatype")) datatype = *dt;
    for (const auto& [k, v] : prop.attrs) {
      if (k == "xml:lang") lang = v;
    }
    pos_ = lt;
    triples_.push_back({subject, predicate, Term::literal(decode(s_.substr(text_start, lt - text_start)), datatype, lang)});
    close_tag(prop.name);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> ns_;
  std::string base_;
  std::vector<Triple> triples_;
  int anon_ = 0;
};

}  // namespace

std::vector<Triple> parse_rdfxml(std::string_view text) { return XmlReader(text).run(); }

}  // namespace ontoforge::rdf
