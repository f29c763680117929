#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "derange/error.hpp"

namespace derange {

/// One-line word with 1-based values; position i lives at index i - 1.
using Word = std::vector<int>;

/// Ascending set of positive integers without repeats.
using IntSet = std::vector<int>;

/// Parses "2135764" (one digit per entry) or "10,2,3,..." (comma separated).
inline Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) throw domain_error("empty word");
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw domain_error("bad character in word: '" + std::string(text) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view cell = text.substr(start, stop - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || value < 1) {
      throw domain_error("bad entry in word: '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = stop + 1;
  }
  return out;
}

/// Digit string when every entry is a single digit, comma separated otherwise.
inline std::string format_word(std::span<const int> word) {
  const bool compact = std::all_of(word.begin(), word.end(), [](int v) { return v >= 1 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + word[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(word[i]);
    }
  }
  return out;
}

inline std::string format_set(std::span<const int> set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(set[i]);
  }
  out.push_back('}');
  return out;
}

// Statistics of an arbitrary map g : [n] -> [n] given as a word. Permutations
// and subexcedant functions share these definitions.
namespace stat {

inline IntSet exc_indices(std::span<const int> g) {
  IntSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > static_cast<int>(i) + 1) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

inline IntSet exc_values(std::span<const int> g) {
  IntSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > static_cast<int>(i) + 1) out.push_back(g[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Positions i with g(i) < g(j) for every j > i. The last position always
/// qualifies.
inline IntSet rlm_indices(std::span<const int> g) {
  IntSet out;
  int running_min = 0;
  for (std::size_t k = g.size(); k-- > 0;) {
    if (k + 1 == g.size() || g[k] < running_min) {
      out.push_back(static_cast<int>(k) + 1);
      running_min = g[k];
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline IntSet rlm_values(std::span<const int> g) {
  IntSet out;
  for (int i : rlm_indices(g)) out.push_back(g[i - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline IntSet fixed_points(std::span<const int> g) {
  IntSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == static_cast<int>(i) + 1) out.push_back(g[i]);
  }
  return out;
}

inline std::int64_t inversions(std::span<const int> g) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i] > g[j]) ++count;
    }
  }
  return count;
}

}  // namespace stat
}  // namespace derange
