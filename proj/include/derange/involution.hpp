#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derange/error.hpp"
#include "derange/permutation.hpp"
#include "derange/sef.hpp"
#include "derange/word.hpp"

namespace derange {

// ---------------------------------------------------------------------------
// Psi on derangement encodings

/// Which branch of psi applies to a subexcedant function.
struct CaseLabel {
  enum class Kind { matchless, c1, c2, c3, c4 };

  Kind kind = Kind::matchless;
  int index = 0;  // support index i >= 2; 0 for matchless

  static CaseLabel matchless() { return {}; }

  /// "matchless", "C1_2", "C4_3", ...
  std::string to_string() const {
    if (kind == Kind::matchless) return "matchless";
    return "C" + std::to_string(static_cast<int>(kind)) + "_" + std::to_string(index);
  }

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
  friend auto operator<=>(const CaseLabel&, const CaseLabel&) = default;
};

struct PsiTrace {
  SubexcedantFunction input;
  SubexcedantFunction output;
  CaseLabel case_label;
  CaseLabel image_case;
  std::optional<int> touched_position;
};

/// f = 1 1 2 3 ... k-1 k k ... k for some 1 <= k <= n - 1.
inline bool is_matchless(const SubexcedantFunction& f) {
  const int n = f.size();
  if (n < 2 || f(1) != 1) return false;
  // entry i is min(max(1, i - 1), k) where k = f(n)
  const int k = f(n);
  if (k > n - 1) return false;
  for (int i = 2; i <= n; ++i) {
    if (f(i) != std::min(std::max(1, i - 1), k)) return false;
  }
  return true;
}

/// The k-th matchless word of length n.
inline SubexcedantFunction matchless_sef(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw domain_error("matchless_sef: need 1 <= k <= n - 1");
  Word w(static_cast<std::size_t>(n));
  w[0] = 1;
  for (int i = 2; i <= n; ++i) w[i - 1] = std::min(i - 1, k);
  return SubexcedantFunction(std::move(w));
}

/// The n-cycle (1 k+1 k+2 ... n k k-1 ... 2) encoded by the k-th matchless word.
inline Permutation matchless_perm(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw domain_error("matchless_perm: need 1 <= k <= n - 1");
  std::vector<int> cycle{1};
  for (int v = k + 1; v <= n; ++v) cycle.push_back(v);
  for (int v = k; v >= 2; --v) cycle.push_back(v);
  Word w(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < cycle.size(); ++s) w[cycle[s] - 1] = cycle[(s + 1) % cycle.size()];
  return Permutation(std::move(w));
}

namespace detail {

struct PsiStep {
  CaseLabel label;
  int position = 0;  // 0 when matchless
  int value = 0;
};

/// Finds the smallest support index i at which one of C1..C4 holds.
/// Within one i the cases are mutually exclusive; they are tested in order.
inline std::optional<PsiStep> find_psi_case(const SubexcedantFunction& f) {
  using Kind = CaseLabel::Kind;
  const int n = f.size();
  const IntSet m = support(f);  // m[0] = m_1 = 1
  const int ell = static_cast<int>(m.size());
  std::vector<int> preimage_size(static_cast<std::size_t>(n) + 1, 0);
  for (int v : f.word()) ++preimage_size[v];
  const int ones = preimage_size[1];
  // f^{-1}(1) = {1, 2}
  const bool ones_are_first_two = ones == 2 && n >= 2 && f(2) == 1;

  auto mi = [&](int i) { return m[static_cast<std::size_t>(i) - 1]; };

  for (int i = 2; i <= ell; ++i) {
    const int mv = mi(i);
    if (f(mv) == mv) return PsiStep{{Kind::c1, i}, mv, mi(i - 1)};
    // from here f(m_i) < m_i
    if (ones >= 3) return PsiStep{{Kind::c2, i}, mv, mv};
    const bool star = mv < mi(ell) && ones_are_first_two && f(mv + 1) == mv && preimage_size[mv] >= 2;
    if (!star) continue;
    const int next = mi(i + 1);
    if (f(next) == next) return PsiStep{{Kind::c3, i}, next, mv};
    return PsiStep{{Kind::c4, i}, next, next};
  }
  return std::nullopt;
}

inline CaseLabel classify(const SubexcedantFunction& f) {
  if (is_matchless(f)) return CaseLabel::matchless();
  auto step = find_psi_case(f);
  if (!step) throw internal_error("psi: no case applies to non-matchless " + f.to_string());
  return step->label;
}

}  // namespace detail

/// The case psi applies to a derangement encoding.
inline CaseLabel psi_case(const SubexcedantFunction& f) {
  if (!is_derangement_sef(f)) throw domain_error("psi: not a derangement encoding: " + f.to_string());
  return detail::classify(f);
}

/// Sign-reversing involution on DF_n fixing exactly the matchless words.
///
/// Outside the matchless words, exactly one entry changes: either a fixed
/// support element m_r is unfixed to m_{r-1}, or an entry at m_r is fixed.
inline PsiTrace psi(const SubexcedantFunction& f) {
  if (!is_derangement_sef(f)) throw domain_error("psi: not a derangement encoding: " + f.to_string());
  if (is_matchless(f)) return PsiTrace{f, f, CaseLabel::matchless(), CaseLabel::matchless(), std::nullopt};
  auto step = detail::find_psi_case(f);
  if (!step) throw internal_error("psi: no case applies to non-matchless " + f.to_string());
  SubexcedantFunction out = f.with(step->position, step->value);
  CaseLabel image = detail::classify(out);
  return PsiTrace{f, std::move(out), step->label, image, step->position};
}

/// psi conjugated through the subexcedant encoding.
inline Permutation psi_hat(const Permutation& p) {
  if (!is_derangement(p)) throw domain_error("psi_hat: not a derangement: " + p.to_string());
  return sef_to_perm(psi(perm_to_sef(p)).output);
}

/// The case pairs (case of f, case of psi(f)) that psi can realize.
inline bool permitted_transition(const CaseLabel& from, const CaseLabel& to) {
  using Kind = CaseLabel::Kind;
  switch (from.kind) {
    case Kind::matchless: return to.kind == Kind::matchless;
    case Kind::c1:
      return (to.kind == Kind::c2 && to.index == from.index) || (to.kind == Kind::c4 && to.index == from.index - 1);
    case Kind::c2: return to.kind == Kind::c1 && to.index == from.index;
    case Kind::c3: return to.kind == Kind::c4 && to.index == from.index;
    case Kind::c4:
      return (to.kind == Kind::c3 && to.index == from.index) || (to.kind == Kind::c1 && to.index == from.index + 1);
  }
  return false;
}

// ---------------------------------------------------------------------------
// iota: excedance-set preserving involution on S_n

/// Swaps the entries at the lexicographically largest pair of positions
/// 2 <= l < m <= n whose exchange keeps the excedance set; identity when no
/// such pair exists.
inline Permutation iota(const Permutation& p) {
  const int n = p.size();
  auto is_exc = [&](int i) { return p(i) > i; };
  for (int l = n - 1; l >= 2; --l) {
    for (int m = n; m > l; --m) {
      if (is_exc(l) != is_exc(m)) continue;
      // after the exchange position l holds p(m) and m holds p(l)
      if ((p(m) > l) == is_exc(l) && (p(l) > m) == is_exc(m)) return p.swap_positions(l, m);
    }
  }
  return p;
}

/// Interleaving chain test: with excedances j_1 < ... < j_k and
/// anti-excedances i_1 < ... < i_{n-k},
///   j_1 < p(j_1) <= j_2 < p(j_2) <= ... <= j_k < p(j_k)
///   p(i_1) <= i_1 < p(i_2) <= i_2 < ... < p(i_{n-k}) <= i_{n-k} = n.
inline bool is_critical_by_chains(const Permutation& p) {
  const int n = p.size();
  IntSet exc;
  IntSet anti;
  for (int i = 1; i <= n; ++i) (p(i) > i ? exc : anti).push_back(i);
  for (std::size_t s = 0; s + 1 < exc.size(); ++s) {
    if (p(exc[s]) > exc[s + 1]) return false;
  }
  for (std::size_t r = 0; r + 1 < anti.size(); ++r) {
    if (anti[r] >= p(anti[r + 1])) return false;
  }
  return true;
}

/// Fixed point of iota. Cross-checked against the chain characterization.
inline bool is_critical(const Permutation& p) {
  const bool fixed = iota(p) == p;
  if (fixed != is_critical_by_chains(p)) {
    throw internal_error("critical characterizations disagree on " + p.to_string());
  }
  return fixed;
}

/// The unique critical permutation of [n] with excedance set `exc` (a subset of [n-1]).
inline Permutation pi_e(int n, const IntSet& exc) {
  if (n < 1) throw domain_error("pi_e: n must be >= 1");
  std::vector<bool> in_e(static_cast<std::size_t>(n) + 1, false);
  for (int j : exc) {
    if (j < 1 || j > n - 1) throw domain_error("pi_e: excedance set must lie in [n-1]");
    in_e[j] = true;
  }
  Word w(static_cast<std::size_t>(n));
  int previous_anti = 0;
  for (int i = 1; i <= n; ++i) {
    if (in_e[i]) {
      w[i - 1] = i + 1;
    } else {
      w[i - 1] = previous_anti + 1;
      previous_anti = i;
    }
  }
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------
// zeta and kappa

/// zeta(p)(k) = n + 1 - p^{-1}(n + 1 - k).
inline Permutation zeta(const Permutation& p) {
  const int n = p.size();
  const Permutation inv = p.inverse();
  Word w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[k - 1] = n + 1 - inv(n + 1 - k);
  return Permutation(std::move(w));
}

/// Swaps positions (i, i+1) for the smallest odd i whose swap keeps the set of
/// right-to-left minimum values; identity when none does.
inline Permutation kappa(const Permutation& p) {
  const IntSet rlm = stat::rlm_values(p.word());
  for (int i = 1; i + 1 <= p.size(); i += 2) {
    Permutation q = p.swap_positions(i, i + 1);
    if (stat::rlm_values(q.word()) == rlm) return q;
  }
  return p;
}

inline bool is_decisive(const Permutation& p) { return kappa(p) == p; }

/// The decisive permutation whose right-to-left minimum values are the odd
/// integers of [n] together with the even set `evens`.
inline Permutation decisive_from_t(int n, const IntSet& evens) {
  if (n < 1) throw domain_error("decisive_from_t: n must be >= 1");
  std::vector<bool> in_t(static_cast<std::size_t>(n) + 1, false);
  for (int v : evens) {
    if (v < 1 || v > n || v % 2 != 0) throw domain_error("decisive_from_t: T must hold even values of [n]");
    in_t[v] = true;
  }
  Word w(static_cast<std::size_t>(n));
  for (int j = 1; j < n; j += 2) {
    if (in_t[j + 1]) {
      w[j - 1] = j;
      w[j] = j + 1;
    } else {
      w[j - 1] = j + 1;
      w[j] = j;
    }
  }
  if (n % 2 == 1) w[n - 1] = n;
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------
// beta on biderangements

/// Swaps w(j), w(j+1) at the smallest odd j with unequal entries.
inline Biderangement beta(const Biderangement& w) {
  Word word = w.word();
  for (std::size_t j = 0; j + 1 < word.size(); j += 2) {
    if (word[j] != word[j + 1]) {
      std::swap(word[j], word[j + 1]);
      return Biderangement(std::move(word));
    }
  }
  return w;
}

/// pi(1) pi(1) pi(2) pi(2) ... pi(n) pi(n).
inline Biderangement double_up(const Permutation& p) {
  Word w;
  for (int v : p.word()) w.insert(w.end(), {v, v});
  return Biderangement(std::move(w));
}

}  // namespace derange
