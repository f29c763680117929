#include <gtest/gtest.h>

#include <vector>

#include "derange/identities.hpp"
#include "derange/involution.hpp"
#include "oracles.hpp"

namespace derange {
namespace {

Polynomial x(int i) { return Polynomial::var(Variable::x(i)); }
Polynomial y(int i) { return Polynomial::var(Variable::y(i)); }
Polynomial t() { return Polynomial::var(Variable::t()); }

Polynomial all_x_to_t(const Polynomial& p) {
  return p.substitute([](Variable v) { return v.family == Family::x ? t() : Polynomial::var(v); });
}

TEST(MainTheorem, SmallCases) {
  const auto r2 = main_theorem_values(2);
  EXPECT_TRUE(r2.equal);
  EXPECT_EQ(r2.lhs, -(x(1) * y(2)));
  const auto r3 = main_theorem_values(3);
  EXPECT_TRUE(r3.equal);
  EXPECT_EQ(r3.rhs.size(), 2u);
  const auto i2 = main_theorem_indices(2);
  EXPECT_TRUE(i2.equal);
  EXPECT_EQ(i2.lhs, -(y(1) * x(2)));
  EXPECT_THROW(main_theorem_values(1), domain_error);
  EXPECT_THROW(main_theorem_values(9), budget_error);
}

TEST(MainTheorem, HoldsThroughEight) {
  for (int n = 2; n <= 8; ++n) {
    const auto v = main_theorem_values(n);
    EXPECT_TRUE(v.equal) << n;
    EXPECT_EQ(v.rhs.size(), static_cast<std::size_t>(n - 1));
    EXPECT_TRUE(main_theorem_indices(n).equal) << n;
  }
}

TEST(MainTheorem, SpecializationGivesExcedancePolynomial) {
  for (int n = 2; n <= 7; ++n) {
    const Polynomial specialized = main_theorem_values(n).lhs.substitute(
        [](Variable v) { return v.family == Family::x ? Polynomial(1) : t(); });
    Polynomial direct;
    for (const Permutation& p : enumerate_derangements(n)) {
      direct.add_term(Monomial::of(Variable::t(), static_cast<int>(stats(p).exc_idx.size())), sign(p));
    }
    EXPECT_EQ(specialized, direct) << n;
    Polynomial closed;
    for (int j = 1; j <= n - 1; ++j) closed.add_term(Monomial::of(Variable::t(), j), n % 2 == 0 ? -1 : 1);
    EXPECT_EQ(specialized, closed) << n;
  }
}

TEST(MrCounting, CensusValues) {
  EXPECT_EQ(mr_counting(4, 2), -1);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(mr_counting(5, k), 1);
  EXPECT_EQ(mr_counting(2, 1), -1);
  EXPECT_THROW(mr_counting(4, 4), domain_error);
  EXPECT_THROW(mr_counting(4, 0), domain_error);
}

TEST(MrCounting, CensusAgreesWithCycleSignOracle) {
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> even(n, 0), odd(n, 0);
    for (const Permutation& p : enumerate_derangements(n)) {
      const int k = static_cast<int>(stats(p).exc_idx.size());
      ((n - oracle::cycles(p.word())) % 2 == 0 ? even : odd)[k] += 1;
    }
    for (int k = 1; k <= n - 1; ++k) EXPECT_EQ(mr_counting(n, k), even[k] - odd[k]) << n << "," << k;
  }
}

TEST(MrCounting, MatchesDerangementSumCoefficients) {
  for (int n = 2; n <= 7; ++n) {
    const Polynomial s = all_x_to_t(derangement_exc_mono(n).lhs);
    for (int k = 1; k <= n - 1; ++k) {
      EXPECT_EQ(s.coefficient(Monomial::of(Variable::t(), k)), mr_counting(n, k));
    }
  }
}

TEST(ExcSum, SymmetricGroup) {
  const auto r1 = exc_sum_sn(1);
  EXPECT_TRUE(r1.equal);
  EXPECT_EQ(r1.lhs, Polynomial(1));
  EXPECT_EQ(all_x_to_t(exc_sum_sn(4).lhs), (Polynomial(1) - t()).pow(3));
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(exc_sum_sn(n).equal) << n;
}

TEST(ExcSum, FixedPoints) {
  EXPECT_EQ(exc_sum_fixed(5, {1, 2, 3, 4, 5}).lhs, Polynomial(1));
  EXPECT_TRUE(exc_sum_fixed(5, {1, 2, 3, 4, 5}).equal);
  EXPECT_EQ(exc_sum_fixed(5, {}).lhs, exc_sum_sn(5).lhs);
  const auto r = exc_sum_fixed(5, {2, 5});
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.rhs, (Polynomial(1) - x(1)) * (Polynomial(1) - x(3)));
  for (int n = 1; n <= 6; ++n) {
    for (const IntSet& fixed : subsets_lex(n)) ASSERT_TRUE(exc_sum_fixed(n, fixed).equal) << n;
  }
}

TEST(ExcSum, Derangements) {
  EXPECT_EQ(derangement_exc_mono(2).lhs, -x(1));
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(derangement_exc_mono(n).equal) << n;
  Polynomial expected;
  for (int j = 1; j <= 5; ++j) expected += t().pow(j);
  EXPECT_EQ(all_x_to_t(derangement_exc_mono(6).lhs), -expected);
}

TEST(RlmSum, SymmetricGroup) {
  EXPECT_EQ(rlm_sum_sn(1).lhs, x(1));
  EXPECT_EQ(rlm_sum_sn(7).rhs.size(), 8u);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(rlm_sum_sn(n).equal) << n;
    for (const SignedCount& c : rlm_signed_counts(n)) EXPECT_EQ(c.observed, c.expected) << n << "," << c.k;
  }
}

TEST(RlmSum, Derangements) {
  EXPECT_EQ(rlm_derangement_sum(2).lhs, -t());
  EXPECT_EQ(rlm_derangement_sum(3).lhs, t() + t() * t());
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(rlm_derangement_sum(n).equal) << n;
}

TEST(Biderangements, Identity) {
  const auto r2 = biderangement_identity(2);
  EXPECT_TRUE(r2.equal);
  EXPECT_EQ(r2.lhs, x(2) * x(2) * y(1));
  const auto r3 = biderangement_identity(3);
  EXPECT_TRUE(r3.equal);
  EXPECT_EQ(r3.rhs, x(2) * x(2) * x(3) * x(3) * y(1) + x(3) * x(3) * y(1) * y(2));
  EXPECT_TRUE(biderangement_identity(4).equal);
}

TEST(Conjecture, ReportsWithoutAsserting) {
  for (int n = 2; n <= 7; ++n) {
    const auto k2 = type_restricted_sum(n, 2);
    EXPECT_EQ(k2.sum, main_theorem_values(n).lhs);
    EXPECT_TRUE(k2.all_coeffs_nonneg);
    EXPECT_TRUE(type_restricted_sum(n, n).all_coeffs_nonneg);
  }
  const auto r = type_restricted_sum(5, 3);
  EXPECT_FALSE(r.sum.is_zero());
  EXPECT_THROW(type_restricted_sum(5, 6), domain_error);
}

TEST(SingleCycle, TermCountsMatchA124302Prefix) {
  // A124302: 1, 1, 2, 5, 14, 41, 122, 365
  const std::vector<std::size_t> prefix{1, 1, 2, 5, 14, 41, 122, 365};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(single_cycle_census(n).distinct_terms, prefix[n - 1]) << n;
  EXPECT_EQ(single_cycle_census(2).sum, x(1) * y(2));
}

TEST(SingleCycle, FourCyclePolynomial) {
  const Polynomial expected = x(1) * x(2) * x(3) * y(4) + x(1) * x(3) * y(2) * y(4) + x(1) * y(3) * y(4) +
                              Polynomial(2) * x(1) * x(2) * y(3) * y(4) + x(1) * y(2) * y(3) * y(4);
  EXPECT_EQ(single_cycle_census(4).sum, expected);
}

TEST(RlmTable, MatchesPublishedRows) {
  const auto table = rlm_derangement_table(8);
  const std::vector<std::vector<int>> published{
      {},
      {},
      {1},
      {1, 1},
      {3, 5, 1},
      {11, 21, 11, 1},
      {53, 113, 79, 19, 1},
      {309, 715, 589, 211, 29, 1},
      {2119, 5235, 4835, 2141, 461, 41, 1},
  };
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) EXPECT_EQ(table.at(n, k), published[n][k - 1]) << n << "," << k;
    EXPECT_EQ(table.at(n, n), 0);
  }
}

TEST(RlmTable, PatternReports) {
  const auto table = rlm_derangement_table(8);
  for (const auto& c : table.first_column_recursion) EXPECT_TRUE(c.holds()) << c.n;
  // the last column is identically 1, so the stated formula misses every n >= 3
  for (const auto& c : table.subdiagonal_formula) EXPECT_FALSE(c.holds()) << c.n;
  EXPECT_EQ(table.subdiagonal_formula.back().observed, 1);
  EXPECT_EQ(table.subdiagonal_formula.back().predicted, 55);
  for (const auto& c : table.shifted_subdiagonal_formula) EXPECT_TRUE(c.holds()) << c.n;
}

TEST(FixedRlmProbe, Extremes) {
  for (int n = 1; n <= 6; ++n) {
    IntSet all = detail::range_set(1, n);
    const auto full = fixed_rlm_probe(n, all);
    EXPECT_EQ(full.sum, t().pow(n));
    ASSERT_TRUE(full.factored_form.has_value());
    EXPECT_EQ(*full.factored_form, (Factorization{1, n, 0, 0}));

    const auto none = fixed_rlm_probe(n, {});
    ASSERT_TRUE(none.factored_form.has_value());
    EXPECT_EQ(*none.factored_form, (Factorization{1, (n + 1) / 2, 0, n / 2}));
    EXPECT_EQ(none.factored_form->expand(), none.sum);
  }
}

TEST(FixedRlmProbe, FactorizationsExpandBack) {
  for (int n = 1; n <= 6; ++n) {
    for (const IntSet& fixed : subsets_lex(n)) {
      const auto r = fixed_rlm_probe(n, fixed);
      if (r.factored_form) {
        ASSERT_EQ(r.factored_form->expand(), r.sum);
      }
    }
  }
}

TEST(FactorShape, RecognizesAndRejects) {
  const Polynomial p = -(t().pow(2) * (t() + Polynomial(1)) * (t() - Polynomial(1)).pow(3));
  const auto f = factor_t_shape(p);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, (Factorization{-1, 2, 1, 3}));
  EXPECT_FALSE(factor_t_shape(t() * t() + Polynomial(1)).has_value());
  EXPECT_FALSE(factor_t_shape(Polynomial(2) * t()).has_value());
  EXPECT_FALSE(factor_t_shape(Polynomial()).has_value());
}

TEST(Subsets, LexicographicOrder) {
  const auto s = subsets_lex(3);
  const std::vector<IntSet> expected{{}, {1}, {1, 2}, {1, 2, 3}, {1, 3}, {2}, {2, 3}, {3}};
  EXPECT_EQ(s, expected);
}

}  // namespace
}  // namespace derange
