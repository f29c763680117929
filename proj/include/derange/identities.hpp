#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "derange/error.hpp"
#include "derange/permutation.hpp"
#include "derange/polynomial.hpp"
#include "derange/word.hpp"

namespace derange {

struct VerificationResult {
  std::string identity;
  int n = 0;
  Polynomial lhs;
  Polynomial rhs;
  bool equal = false;
  std::optional<Discrepancy> first_discrepancy;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline VerificationResult finish(std::string identity, int n, Polynomial lhs, Polynomial rhs,
                                 Clock::time_point started) {
  VerificationResult r;
  r.identity = std::move(identity);
  r.n = n;
  r.first_discrepancy = derange::first_discrepancy(lhs, rhs);
  r.equal = !r.first_discrepancy.has_value();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
  return r;
}

inline Monomial xs(const IntSet& s) { return Monomial::product(Family::x, s); }
inline Monomial ys(const IntSet& s) { return Monomial::product(Family::y, s); }
inline Monomial t_power(int e) { return Monomial::of(Variable::t(), e); }

inline IntSet range_set(int lo, int hi) {
  IntSet s;
  for (int i = lo; i <= hi; ++i) s.push_back(i);
  return s;
}

inline void require_n_at_least(int n, int lo, const char* what) {
  if (n < lo) throw domain_error(std::string(what) + ": n must be >= " + std::to_string(lo));
}

inline void check_fixed_set(int n, const IntSet& fixed) {
  for (int t : fixed) {
    if (t < 1 || t > n) throw domain_error("fixed set must lie in [n]");
  }
}

/// (-1)^e as a coefficient.
inline Integer sign_power(std::int64_t e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

}  // namespace detail

/// Signed sum of x_{RLMv} y_{EXCv} over D_n against the sum of the n-1
/// prefix/suffix products.
inline VerificationResult main_theorem_values(int n, const Limits& limits = {}) {
  detail::require_n_at_least(n, 2, "main_theorem_values");
  detail::check_budget(n, limits.max_verify_n, "main_theorem_values");
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Permutation& p : enumerate_derangements(n, limits)) {
    const auto& w = p.word();
    lhs.add_term(detail::xs(stat::rlm_values(w)) * detail::ys(stat::exc_values(w)),
                 detail::sign_power(stat::inversions(w)));
  }
  Polynomial rhs;
  for (int j = 1; j <= n - 1; ++j) {
    rhs.add_term(detail::xs(detail::range_set(1, j)) * detail::ys(detail::range_set(j + 1, n)),
                 detail::sign_power(n - 1));
  }
  return detail::finish("main-values", n, std::move(lhs), std::move(rhs), started);
}

/// Index variant: x_{RLMi} y_{EXCi} against y_1..y_j x_{j+1}..x_n.
inline VerificationResult main_theorem_indices(int n, const Limits& limits = {}) {
  detail::require_n_at_least(n, 2, "main_theorem_indices");
  detail::check_budget(n, limits.max_verify_n, "main_theorem_indices");
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Permutation& p : enumerate_derangements(n, limits)) {
    const auto& w = p.word();
    lhs.add_term(detail::xs(stat::rlm_indices(w)) * detail::ys(stat::exc_indices(w)),
                 detail::sign_power(stat::inversions(w)));
  }
  Polynomial rhs;
  for (int j = 1; j <= n - 1; ++j) {
    rhs.add_term(detail::ys(detail::range_set(1, j)) * detail::xs(detail::range_set(j + 1, n)),
                 detail::sign_power(n - 1));
  }
  return detail::finish("main-indices", n, std::move(lhs), std::move(rhs), started);
}

/// |{even derangements with exc = k}| - |{odd derangements with exc = k}|.
inline Integer mr_counting(int n, int k, const Limits& limits = {}) {
  if (n < 1 || k < 1 || k > n - 1) throw domain_error("mr_counting: need 1 <= k <= n - 1");
  detail::check_budget(n, limits.max_verify_n, "mr_counting");
  Integer total = 0;
  for (const Permutation& p : enumerate_derangements(n, limits)) {
    const auto& w = p.word();
    if (static_cast<int>(stat::exc_indices(w).size()) == k) total += detail::sign_power(stat::inversions(w));
  }
  return total;
}

/// Signed sum of x_{EXCi} over S_n against prod_{j < n} (1 - x_j).
inline VerificationResult exc_sum_sn(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "exc_sum_sn");
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Permutation& p : enumerate_sn(n, limits)) {
    const auto& w = p.word();
    lhs.add_term(detail::xs(stat::exc_indices(w)), detail::sign_power(stat::inversions(w)));
  }
  Polynomial rhs(1);
  for (int j = 1; j <= n - 1; ++j) rhs *= Polynomial(1) - Polynomial::var(Variable::x(j));
  return detail::finish("exc-sn", n, std::move(lhs), std::move(rhs), started);
}

/// Restriction of exc_sum_sn to permutations fixing every point of `fixed`:
/// the right side is prod_{j in E} (1 - x_j), m = max([n] \ T), E = [m-1] \ T.
inline VerificationResult exc_sum_fixed(int n, const IntSet& fixed, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "exc_sum_fixed");
  detail::check_fixed_set(n, fixed);
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Permutation& p : enumerate_with_fixed(n, fixed, limits)) {
    const auto& w = p.word();
    lhs.add_term(detail::xs(stat::exc_indices(w)), detail::sign_power(stat::inversions(w)));
  }
  auto in_t = [&](int v) { return std::find(fixed.begin(), fixed.end(), v) != fixed.end(); };
  int m = 0;
  for (int v = n; v >= 1; --v) {
    if (!in_t(v)) {
      m = v;
      break;
    }
  }
  Polynomial rhs(1);
  for (int j = 1; j <= m - 1; ++j) {
    if (!in_t(j)) rhs *= Polynomial(1) - Polynomial::var(Variable::x(j));
  }
  return detail::finish("exc-fixed", n, std::move(lhs), std::move(rhs), started);
}

/// Signed sum of x_{EXCi} over D_n against (-1)^{n-1} sum_j x_1 ... x_j.
inline VerificationResult derangement_exc_mono(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "derangement_exc_mono");
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Permutation& p : enumerate_derangements(n, limits)) {
    const auto& w = p.word();
    lhs.add_term(detail::xs(stat::exc_indices(w)), detail::sign_power(stat::inversions(w)));
  }
  Polynomial rhs;
  for (int j = 1; j <= n - 1; ++j) rhs.add_term(detail::xs(detail::range_set(1, j)), detail::sign_power(n - 1));
  return detail::finish("der-exc", n, std::move(lhs), std::move(rhs), started);
}

/// Signed sum of x_{RLMv} over S_n against (prod_{odd i} x_i)(prod_{even j} (x_j - 1)).
inline VerificationResult rlm_sum_sn(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "rlm_sum_sn");
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Permutation& p : enumerate_sn(n, limits)) {
    const auto& w = p.word();
    lhs.add_term(detail::xs(stat::rlm_values(w)), detail::sign_power(stat::inversions(w)));
  }
  Polynomial rhs(1);
  for (int i = 1; i <= n; ++i) {
    const Polynomial xi = Polynomial::var(Variable::x(i));
    rhs *= i % 2 == 1 ? xi : xi - Polynomial(1);
  }
  return detail::finish("rlm-sn", n, std::move(lhs), std::move(rhs), started);
}

/// Binomial coefficient with C(a, b) = 0 outside 0 <= b <= a.
inline Integer binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Integer out = 1;
  for (int i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

struct SignedCount {
  int k = 0;
  Integer observed;
  Integer expected;
};

/// Even-minus-odd counts of permutations with k right-to-left minima, next to
/// (-1)^{n-k} C(floor(n/2), k - ceil(n/2)).
inline std::vector<SignedCount> rlm_signed_counts(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "rlm_signed_counts");
  std::vector<SignedCount> out(static_cast<std::size_t>(n));
  for (const Permutation& p : enumerate_sn(n, limits)) {
    const auto& w = p.word();
    out[stat::rlm_indices(w).size() - 1].observed += detail::sign_power(stat::inversions(w));
  }
  for (int k = 1; k <= n; ++k) {
    out[k - 1].k = k;
    out[k - 1].expected = detail::sign_power(n - k) * binomial(n / 2, k - (n + 1) / 2);
  }
  return out;
}

/// Signed sum of t^{rlm} over D_n against (-1)^{n-1}(t + ... + t^{n-1}).
inline VerificationResult rlm_derangement_sum(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "rlm_derangement_sum");
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Permutation& p : enumerate_derangements(n, limits)) {
    const auto& w = p.word();
    lhs.add_term(detail::t_power(static_cast<int>(stat::rlm_indices(w).size())),
                 detail::sign_power(stat::inversions(w)));
  }
  Polynomial rhs;
  for (int j = 1; j <= n - 1; ++j) rhs.add_term(detail::t_power(j), detail::sign_power(n - 1));
  return detail::finish("rlm-der", n, std::move(lhs), std::move(rhs), started);
}

/// Signed sum of x_{EXCv(w)} y_{RLMv(w)} over biderangements against the
/// unsigned sum of x_{EXCv(pi)}^2 y_{RLMv(pi)} over derangements.
inline VerificationResult biderangement_identity(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_bider_n, "biderangement_identity");
  const auto started = detail::Clock::now();
  Polynomial lhs;
  for (const Biderangement& w : enumerate_biderangements(n, limits)) {
    const BiderangementStats s = word_stats(w);
    lhs.add_term(detail::xs(s.exc_val) * detail::ys(s.rlm_val), detail::sign_power(s.inv));
  }
  Polynomial rhs;
  for (const Permutation& p : enumerate_derangements(n, limits)) {
    const auto& w = p.word();
    const Monomial x = detail::xs(stat::exc_values(w));
    rhs.add_term(x * x * detail::ys(stat::rlm_values(w)), 1);
  }
  return detail::finish("bider", n, std::move(lhs), std::move(rhs), started);
}

struct ConjectureReport {
  int n = 0;
  int k = 0;
  Polynomial sum;
  /// Every coefficient of (-1)^{n-1} * sum is >= 0.
  bool all_coeffs_nonneg = false;
  /// Every coefficient of the sum as printed is >= 0.
  bool raw_nonneg = false;
};

/// Signed sum of x_{RLMv} y_{EXCv} over permutations whose cycles all have
/// length >= k. Reports positivity; asserts nothing.
inline ConjectureReport type_restricted_sum(int n, int k, const Limits& limits = {}) {
  if (k < 1 || k > n) throw domain_error("type_restricted_sum: need 1 <= k <= n");
  detail::check_budget(n, limits.max_verify_n, "type_restricted_sum");
  ConjectureReport r{n, k, {}, true, true};
  for (const Permutation& p : enumerate_sn(n, limits)) {
    if (cycle_type(p).back() < k) continue;
    const auto& w = p.word();
    r.sum.add_term(detail::xs(stat::rlm_values(w)) * detail::ys(stat::exc_values(w)),
                   detail::sign_power(stat::inversions(w)));
  }
  const Integer normalizer = detail::sign_power(n - 1);
  for (const auto& [m, c] : r.sum.terms()) {
    if (c < 0) r.raw_nonneg = false;
    if (c * normalizer < 0) r.all_coeffs_nonneg = false;
  }
  return r;
}

struct SingleCycleCensus {
  int n = 0;
  Polynomial sum;
  std::size_t distinct_terms = 0;
};

/// Unsigned sum of x_{RLMv} y_{EXCv} over the n-cycles of [n].
inline SingleCycleCensus single_cycle_census(int n, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "single_cycle_census");
  SingleCycleCensus c{n, {}, 0};
  for (const Permutation& p : enumerate_sn(n, limits)) {
    if (cycle_type(p).front() != n) continue;
    const auto& w = p.word();
    c.sum.add_term(detail::xs(stat::rlm_values(w)) * detail::ys(stat::exc_values(w)), 1);
  }
  c.distinct_terms = c.sum.size();
  return c;
}

struct PatternCheck {
  int n = 0;
  Integer observed;
  Integer predicted;
  bool holds() const { return observed == predicted; }
};

struct RlmDerangementTable {
  int max_n = 0;
  /// rows[n][k] = a_{n,k} for 1 <= k <= n; rows[0] and rows[1] are padding.
  std::vector<std::vector<Integer>> rows;
  /// a_{n,1} against (n-2) a_{n-1,1} + (n-3) a_{n-2,1}, seeded with a_{1,1} = a_{2,1} = 1.
  std::vector<PatternCheck> first_column_recursion;
  /// a_{n,n-1} against (n-2) + (n-1)^2.
  std::vector<PatternCheck> subdiagonal_formula;
  /// a_{n,n-2} against (n-3) + (n-2)^2.
  std::vector<PatternCheck> shifted_subdiagonal_formula;

  const Integer& at(int n, int k) const { return rows[n][k]; }
};

/// a_{n,k} = number of derangements of [n] with exactly k right-to-left
/// minima, for 2 <= n <= max_n, with the observed patterns checked per n.
inline RlmDerangementTable rlm_derangement_table(int max_n, const Limits& limits = {}) {
  detail::check_budget(max_n, limits.max_verify_n, "rlm_derangement_table");
  RlmDerangementTable t;
  t.max_n = max_n;
  t.rows.assign(static_cast<std::size_t>(max_n) + 1, {});
  for (int n = 1; n <= max_n; ++n) {
    t.rows[n].assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Permutation& p : enumerate_derangements(n, limits)) {
      ++t.rows[n][stat::rlm_indices(p.word()).size()];
    }
  }
  std::vector<Integer> a1(static_cast<std::size_t>(max_n) + 1, 0);
  a1[1] = 1;
  if (max_n >= 2) a1[2] = 1;
  for (int n = 3; n <= max_n; ++n) {
    a1[n] = Integer(n - 2) * a1[n - 1] + Integer(n - 3) * a1[n - 2];
    t.first_column_recursion.push_back({n, t.rows[n][1], a1[n]});
  }
  for (int n = 3; n <= max_n; ++n) {
    t.subdiagonal_formula.push_back({n, t.rows[n][n - 1], Integer((n - 2) + (n - 1) * (n - 1))});
  }
  for (int n = 4; n <= max_n; ++n) {
    t.shifted_subdiagonal_formula.push_back({n, t.rows[n][n - 2], Integer((n - 3) + (n - 2) * (n - 2))});
  }
  return t;
}

/// sign * t^a * (t + 1)^b * (t - 1)^c
struct Factorization {
  int sign = 1;
  int a = 0;
  int b = 0;
  int c = 0;

  Polynomial expand() const {
    const Polynomial t = Polynomial::var(Variable::t());
    return Polynomial(sign) * t.pow(a) * (t + Polynomial(1)).pow(b) * (t - Polynomial(1)).pow(c);
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Strips t^a, then (t - 1) and (t + 1) factors by exact division; succeeds
/// when a unit +-1 remains.
inline std::optional<Factorization> factor_t_shape(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  std::vector<Integer> coeffs = dense_in_t(p);
  Factorization f;
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  f.a = static_cast<int>(low);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
  while (coeffs.size() > 1) {
    if (auto q = divide_by_linear(coeffs, 1)) {
      coeffs = std::move(*q);
      ++f.c;
    } else if (auto q2 = divide_by_linear(coeffs, -1)) {
      coeffs = std::move(*q2);
      ++f.b;
    } else {
      return std::nullopt;
    }
  }
  if (coeffs[0] != 1 && coeffs[0] != -1) return std::nullopt;
  f.sign = coeffs[0] == 1 ? 1 : -1;
  return f;
}

struct FixedRlmProbe {
  int n = 0;
  IntSet fixed;
  Polynomial sum;
  std::optional<Factorization> factored_form;
};

/// Signed sum of t^{rlm} over permutations fixing every point of `fixed`,
/// with the +-t^a (t+1)^b (t-1)^c shape extracted when it exists.
inline FixedRlmProbe fixed_rlm_probe(int n, const IntSet& fixed, const Limits& limits = {}) {
  detail::check_budget(n, limits.max_verify_n, "fixed_rlm_probe");
  detail::check_fixed_set(n, fixed);
  FixedRlmProbe r{n, fixed, {}, std::nullopt};
  for (const Permutation& p : enumerate_with_fixed(n, fixed, limits)) {
    const auto& w = p.word();
    r.sum.add_term(detail::t_power(static_cast<int>(stat::rlm_indices(w).size())),
                   detail::sign_power(stat::inversions(w)));
  }
  r.factored_form = factor_t_shape(r.sum);
  return r;
}

/// All subsets of [n] in lexicographic order of their ascending element lists.
inline std::vector<IntSet> subsets_lex(int n) {
  std::vector<IntSet> all;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IntSet s;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1u << (i - 1))) s.push_back(i);
    }
    all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace derange
