#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derange/error.hpp"
#include "derange/stream.hpp"
#include "derange/word.hpp"

namespace derange {

/// A permutation of [n] in one-line notation.
class Permutation {
 public:
  /// Throws domain_error unless `word` uses every value of [n] exactly once.
  explicit Permutation(Word word) : word_(std::move(word)) {
    const int n = size();
    if (n < 1) throw domain_error("permutation must have n >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
      if (v < 1 || v > n || seen[v]) {
        throw domain_error("not a permutation: " + format_word(word_));
      }
      seen[v] = true;
    }
  }

  static Permutation parse(std::string_view text) { return Permutation(parse_word(text)); }

  static Permutation identity(int n) {
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }

  /// Value at 1-based position i.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

  const Word& word() const { return word_; }

  Permutation inverse() const {
    Word inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
    return Permutation(std::move(inv));
  }

  /// Exchanges the entries at 1-based positions i and j.
  Permutation swap_positions(int i, int j) const {
    Word w = word_;
    std::swap(w[i - 1], w[j - 1]);
    return Permutation(std::move(w));
  }

  std::string to_string() const { return format_word(word_); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Word word_;
};

/// Every statistic of a permutation at once.
struct StatReport {
  std::int64_t inv = 0;
  int sign = 1;
  IntSet exc_idx;
  IntSet exc_val;
  IntSet rlm_idx;
  IntSet rlm_val;
  IntSet fix;
  std::vector<int> cycle_type;  // decreasing

  friend bool operator==(const StatReport&, const StatReport&) = default;
};

/// Cycle lengths in decreasing order.
inline std::vector<int> cycle_type(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

inline std::int64_t inversions(const Permutation& p) { return stat::inversions(p.word()); }
inline int sign(const Permutation& p) { return inversions(p) % 2 == 0 ? 1 : -1; }

inline StatReport stats(const Permutation& p) {
  StatReport r;
  const auto& w = p.word();
  r.inv = stat::inversions(w);
  r.sign = r.inv % 2 == 0 ? 1 : -1;
  r.exc_idx = stat::exc_indices(w);
  r.exc_val = stat::exc_values(w);
  r.rlm_idx = stat::rlm_indices(w);
  r.rlm_val = stat::rlm_values(w);
  r.fix = stat::fixed_points(w);
  r.cycle_type = cycle_type(p);
  return r;
}

inline bool is_derangement(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) return false;
  }
  return true;
}

using PermutationStream = WordStream<Permutation>;

inline PermutationStream enumerate_sn(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_perm_n, "enumerate_sn");
  return PermutationStream(Permutation::identity(n).word(), detail::next_permutation_word);
}

inline PermutationStream enumerate_derangements(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_perm_n, "enumerate_derangements");
  return PermutationStream(Permutation::identity(n).word(), detail::next_permutation_word, [](const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == static_cast<int>(i) + 1) return false;
    }
    return true;
  });
}

/// Permutations whose fixed-point set contains `fixed` (supersets allowed).
inline PermutationStream enumerate_with_fixed(int n, IntSet fixed, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_perm_n, "enumerate_with_fixed");
  for (int t : fixed) {
    if (t < 1 || t > n) throw domain_error("fixed position " + std::to_string(t) + " outside [n]");
  }
  return PermutationStream(Permutation::identity(n).word(), detail::next_permutation_word,
                           [fixed = std::move(fixed)](const Word& w) {
                             return std::all_of(fixed.begin(), fixed.end(),
                                                [&](int t) { return w[t - 1] == t; });
                           });
}

// ---------------------------------------------------------------------------
// Biderangements of B_n = 1 1 2 2 ... n n

/// B_n(j) for 1-based position j.
inline int doubled_identity_at(int j) { return (j + 1) / 2; }

/// A rearrangement of B_n that differs from B_n at every position.
class Biderangement {
 public:
  explicit Biderangement(Word word) : word_(std::move(word)) {
    if (word_.empty() || word_.size() % 2 != 0) {
      throw domain_error("biderangement must have even positive length");
    }
    const int n = order();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < word_.size(); ++k) {
      const int v = word_[k];
      if (v < 1 || v > n || ++seen[v] > 2) {
        throw domain_error("not a rearrangement of B_n: " + format_word(word_));
      }
      if (v == doubled_identity_at(static_cast<int>(k) + 1)) {
        throw domain_error("agrees with B_n at position " + std::to_string(k + 1) + ": " +
                           format_word(word_));
      }
    }
  }

  static Biderangement parse(std::string_view text) { return Biderangement(parse_word(text)); }

  /// n, half the word length.
  int order() const { return static_cast<int>(word_.size() / 2); }
  int operator()(int j) const { return word_[static_cast<std::size_t>(j) - 1]; }
  const Word& word() const { return word_; }
  std::string to_string() const { return format_word(word_); }

  friend bool operator==(const Biderangement&, const Biderangement&) = default;
  friend auto operator<=>(const Biderangement&, const Biderangement&) = default;

 private:
  Word word_;
};

struct BiderangementStats {
  std::int64_t inv = 0;
  std::vector<int> exc_val;  // multiset, ascending
  IntSet rlm_val;

  friend bool operator==(const BiderangementStats&, const BiderangementStats&) = default;
};

/// rlm_val compares each position against positions strictly to its right,
/// so only the final copy of a value can be a right-to-left minimum.
inline BiderangementStats word_stats(const Biderangement& w) {
  BiderangementStats s;
  const auto& word = w.word();
  s.inv = stat::inversions(word);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] > doubled_identity_at(static_cast<int>(k) + 1)) s.exc_val.push_back(word[k]);
  }
  std::sort(s.exc_val.begin(), s.exc_val.end());
  s.rlm_val = stat::rlm_values(word);
  return s;
}

using BiderangementStream = WordStream<Biderangement>;

inline BiderangementStream enumerate_biderangements(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_bider_n, "enumerate_biderangements");
  Word first;
  for (int v = 1; v <= n; ++v) first.insert(first.end(), {v, v});
  return BiderangementStream(std::move(first), detail::next_permutation_word, [](const Word& w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == doubled_identity_at(static_cast<int>(k) + 1)) return false;
    }
    return true;
  });
}

}  // namespace derange
