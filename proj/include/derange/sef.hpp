#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derange/error.hpp"
#include "derange/permutation.hpp"
#include "derange/stream.hpp"
#include "derange/word.hpp"

namespace derange {

/// A word f(1)...f(n) with 1 <= f(i) <= i.
class SubexcedantFunction {
 public:
  explicit SubexcedantFunction(Word word) : word_(std::move(word)) {
    if (word_.empty()) throw domain_error("subexcedant function must have n >= 1");
    for (std::size_t k = 0; k < word_.size(); ++k) {
      if (word_[k] < 1 || word_[k] > static_cast<int>(k) + 1) {
        throw domain_error("not subexcedant at position " + std::to_string(k + 1) + ": " +
                           format_word(word_));
      }
    }
  }

  static SubexcedantFunction parse(std::string_view text) { return SubexcedantFunction(parse_word(text)); }

  static SubexcedantFunction identity(int n) { return SubexcedantFunction(Permutation::identity(n).word()); }

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
  const Word& word() const { return word_; }

  /// Copy with f(i) replaced by `value`; throws if the result is not subexcedant.
  SubexcedantFunction with(int i, int value) const {
    Word w = word_;
    w[static_cast<std::size_t>(i) - 1] = value;
    return SubexcedantFunction(std::move(w));
  }

  std::string to_string() const { return format_word(word_); }

  friend bool operator==(const SubexcedantFunction&, const SubexcedantFunction&) = default;
  friend auto operator<=>(const SubexcedantFunction&, const SubexcedantFunction&) = default;

 private:
  Word word_;
};

struct SefProfile {
  IntSet support;
  int aexc = 0;
  IntSet fixed_points;
  IntSet multiple_fixed_points;
  IntSet rlm_idx;
  IntSet rlm_val;

  friend bool operator==(const SefProfile&, const SefProfile&) = default;
};

/// The image {f(i)} in increasing order.
inline IntSet support(const SubexcedantFunction& f) {
  IntSet s = f.word();
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Number of strict anti-excedances, i.e. positions with f(i) < i.
inline int aexc(const SubexcedantFunction& f) {
  int count = 0;
  for (int i = 1; i <= f.size(); ++i) count += f(i) < i ? 1 : 0;
  return count;
}

inline SefProfile profile(const SubexcedantFunction& f) {
  SefProfile p;
  const int n = f.size();
  p.support = support(f);
  p.aexc = aexc(f);
  // f(j) <= j, so f(j) = i with j > i is a strict anti-excedance hitting i.
  std::vector<bool> hit_later(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) {
    if (f(j) < j) hit_later[f(j)] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (f(i) != i) continue;
    p.fixed_points.push_back(i);
    if (hit_later[i]) p.multiple_fixed_points.push_back(i);
  }
  p.rlm_idx = stat::rlm_indices(f.word());
  p.rlm_val = stat::rlm_values(f.word());
  return p;
}

/// True iff every fixed point of f is multiple, i.e. f encodes a derangement.
inline bool is_derangement_sef(const SubexcedantFunction& f) {
  const int n = f.size();
  std::vector<bool> hit_later(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) {
    if (f(j) < j) hit_later[f(j)] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (f(i) == i && !hit_later[i]) return false;
  }
  return true;
}

/// The product of transpositions (n f(n)) ... (2 f(2)) (1 f(1)), with (1 f(1))
/// applied first.
inline Permutation sef_to_perm(const SubexcedantFunction& f) {
  const int n = f.size();
  // sigma as a map, built by post-composing one transposition at a time:
  // (k f(k)) o sigma exchanges the values k and f(k) in the one-line word.
  Word sigma(static_cast<std::size_t>(n));
  Word where(static_cast<std::size_t>(n) + 1);  // where[v] = sigma^{-1}(v)
  for (int i = 1; i <= n; ++i) {
    sigma[i - 1] = i;
    where[i] = i;
  }
  for (int k = 1; k <= n; ++k) {
    const int a = k;
    const int b = f(k);
    if (a == b) continue;
    std::swap(sigma[where[a] - 1], sigma[where[b] - 1]);
    std::swap(where[a], where[b]);
  }
  return Permutation(std::move(sigma));
}

/// Inverse of sef_to_perm. Peels position n: f(n) = sigma(n), then continues
/// with (n sigma(n)) o sigma restricted to [n - 1].
inline SubexcedantFunction perm_to_sef(const Permutation& p) {
  const int n = p.size();
  Word sigma = p.word();
  Word where(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) where[sigma[i - 1]] = i;
  Word f(static_cast<std::size_t>(n));
  for (int j = n; j >= 1; --j) {
    const int v = sigma[j - 1];
    f[j - 1] = v;
    if (v == j) continue;
    // exchange the values j and v; afterwards sigma(j) = j
    const int pos = where[j];
    sigma[pos - 1] = v;
    sigma[j - 1] = j;
    where[v] = pos;
    where[j] = j;
  }
  return SubexcedantFunction(std::move(f));
}

using SefStream = WordStream<SubexcedantFunction>;

inline SefStream enumerate_sef(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_perm_n, "enumerate_sef");
  return SefStream(Word(static_cast<std::size_t>(n), 1), detail::next_subexcedant_word);
}

/// The derangement encodings DF_n, filtered from the full SEF stream.
inline SefStream enumerate_derangement_sef(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_perm_n, "enumerate_derangement_sef");
  return SefStream(Word(static_cast<std::size_t>(n), 1), detail::next_subexcedant_word,
                   [](const Word& w) { return is_derangement_sef(SubexcedantFunction(w)); });
}

}  // namespace derange
