#pragma once

// Reference n-gram counter: enumerates every (start, length) window of every
// sentence and counts the joined string. Deliberately naive.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Counts = std::map<std::string, long long>;

inline Counts count_windows(const std::vector<std::vector<std::string>>& sentences, int nmax,
                            const std::set<std::string>& edge_stopwords = {}) {
  Counts counts;
  for (const auto& s : sentences) {
    for (std::size_t start = 0; start < s.size(); ++start) {
      for (int len = 1; len <= nmax; ++len) {
        const std::size_t end = start + static_cast<std::size_t>(len);  // one past the window
        if (end > s.size()) continue;
        if (edge_stopwords.count(s[start]) || edge_stopwords.count(s[end - 1])) continue;
        std::string key;
        for (std::size_t k = start; k < end; ++k) key += (k == start ? "" : " ") + s[k];
        counts[key] += 1;
      }
    }
  }
  return counts;
}

}  // namespace oracle
