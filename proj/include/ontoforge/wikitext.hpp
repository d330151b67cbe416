#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontoforge::wikitext {

/// Result of flattening one page of wikitext.
struct Parsed {
  std::string text;                   // prose, one line per paragraph/heading
  std::vector<std::string> links;     // body article links, first-occurrence order
  std::vector<std::string> warnings;  // unbalanced constructs etc.
};

/// Strips templates, references, tables, comments, file embeds and
/// categories; keeps headings as plain lines and link display text.
/// Never throws: unbalanced markup is dropped and reported in warnings.
Parsed parse(std::string_view raw);

/// Internal article links of the page body, as normalized slugs.
std::vector<std::string> extract_links(std::string_view raw);

/// Normalizes a page title or link target to a slug: percent-decoded,
/// lowercase, whitespace/underscore runs collapsed to '_'. Drops any
/// "#anchor" suffix. Returns "" if the target is not an article link
/// (namespace prefix, interwiki, URL, same-page anchor).
std::string link_target_slug(std::string_view target);

}  // namespace ontoforge::wikitext
