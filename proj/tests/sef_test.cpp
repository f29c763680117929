#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "derange/sef.hpp"
#include "oracles.hpp"

namespace derange {
namespace {

SubexcedantFunction sef(const char* text) { return SubexcedantFunction::parse(text); }

TEST(SefToPerm, WorkedExample) {
  EXPECT_EQ(sef_to_perm(sef("112435487")).to_string(), "612935487");
}

TEST(SefToPerm, IdentityWordGivesIdentity) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(sef_to_perm(SubexcedantFunction::identity(n)), Permutation::identity(n));
}

TEST(SefToPerm, TwoLetters) { EXPECT_EQ(sef_to_perm(sef("11")).to_string(), "21"); }

TEST(SefToPerm, AgreesWithExplicitComposition) {
  for (int n = 1; n <= 7; ++n) {
    for (const SubexcedantFunction& f : enumerate_sef(n)) {
      ASSERT_EQ(sef_to_perm(f).word(), oracle::compose_transpositions(f.word())) << f.to_string();
    }
  }
}

TEST(PermToSef, WorkedExample) {
  EXPECT_EQ(perm_to_sef(Permutation::parse("612935487")).to_string(), "112435487");
  EXPECT_EQ(perm_to_sef(Permutation::parse("21")).to_string(), "11");
  EXPECT_EQ(perm_to_sef(Permutation::identity(6)), SubexcedantFunction::identity(6));
}

TEST(PermToSef, IterativeMatchesLiteralRecursion) {
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& p : enumerate_sn(n)) {
      ASSERT_EQ(perm_to_sef(p).word(), oracle::perm_to_sef_recursive(p.word())) << p.to_string();
    }
  }
}

TEST(Sef, RejectsNonSubexcedantWords) {
  EXPECT_THROW(sef("131"), domain_error);
  EXPECT_THROW(sef("2"), domain_error);
  EXPECT_NO_THROW(sef("121"));
}

TEST(Profile, SupportExample) { EXPECT_EQ(profile(sef("112352")).support, (IntSet{1, 2, 3, 5})); }

TEST(Profile, FixedAndMultipleFixedPoints) {
  const SefProfile p = profile(sef("112435487"));
  EXPECT_EQ(p.fixed_points, (IntSet{1, 4, 8}));
  EXPECT_EQ(p.multiple_fixed_points, (IntSet{1, 4}));
}

TEST(Profile, ConstantOneWord) {
  for (int n = 1; n <= 8; ++n) {
    const SefProfile p = profile(SubexcedantFunction(Word(n, 1)));
    EXPECT_EQ(p.support, (IntSet{1}));
    EXPECT_EQ(p.aexc, n - 1);
    EXPECT_EQ(p.fixed_points, (IntSet{1}));
  }
}

TEST(Profile, InvariantsHold) {
  for (int n = 1; n <= 6; ++n) {
    for (const SubexcedantFunction& f : enumerate_sef(n)) {
      const SefProfile p = profile(f);
      ASSERT_TRUE(std::includes(p.fixed_points.begin(), p.fixed_points.end(), p.multiple_fixed_points.begin(),
                                p.multiple_fixed_points.end()));
      ASSERT_TRUE(std::includes(p.support.begin(), p.support.end(), p.fixed_points.begin(), p.fixed_points.end()));
    }
  }
}

TEST(DerangementSef, Examples) {
  EXPECT_FALSE(is_derangement_sef(sef("112435487")));
  EXPECT_TRUE(is_derangement_sef(sef("11")));
  EXPECT_TRUE(is_derangement_sef(sef("1123456789")));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_sef(4).count(), 24u);
  EXPECT_EQ(static_cast<std::int64_t>(enumerate_derangement_sef(4).count()), oracle::derangement_count(4));
  std::vector<std::string> two;
  for (const SubexcedantFunction& f : enumerate_derangement_sef(2)) two.push_back(f.to_string());
  EXPECT_EQ(two, (std::vector<std::string>{"11"}));
}

TEST(Enumerate, SefStreamIsLexicographic) {
  std::vector<Word> words;
  for (auto it = enumerate_sef(5).begin(); it != std::default_sentinel; ++it) words.push_back(it.word());
  EXPECT_EQ(words.size(), 120u);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
}

// Exhaustive structural properties of the encoding, n <= 8.
class EncodingProperties : public ::testing::TestWithParam<int> {};

TEST_P(EncodingProperties, RoundTripBothWays) {
  const int n = GetParam();
  for (const SubexcedantFunction& f : enumerate_sef(n)) ASSERT_EQ(perm_to_sef(sef_to_perm(f)), f);
  for (const Permutation& p : enumerate_sn(n)) ASSERT_EQ(sef_to_perm(perm_to_sef(p)), p);
}

TEST_P(EncodingProperties, StatisticsTransfer) {
  const int n = GetParam();
  for (const Permutation& sigma : enumerate_sn(n)) {
    const SubexcedantFunction f = perm_to_sef(sigma);
    const SefProfile prof = profile(f);
    const StatReport st = stats(sigma);
    // excedance values are the complement of the support
    IntSet complement;
    for (int v = 1; v <= n; ++v) {
      if (!std::binary_search(prof.support.begin(), prof.support.end(), v)) complement.push_back(v);
    }
    ASSERT_EQ(st.exc_val, complement) << sigma.to_string();
    // right-to-left minima agree in index and value
    ASSERT_EQ(st.rlm_val, prof.rlm_val) << sigma.to_string();
    ASSERT_EQ(st.rlm_idx, prof.rlm_idx) << sigma.to_string();
    for (int i : st.rlm_idx) ASSERT_EQ(sigma(i), f(i));
    // parity
    ASSERT_EQ(st.sign == 1, prof.aexc % 2 == 0) << sigma.to_string();
    // derangements are the words whose fixed points are all multiple
    ASSERT_EQ(is_derangement(sigma), is_derangement_sef(f)) << sigma.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(UpToEight, EncodingProperties, ::testing::Range(1, 9));

}  // namespace
}  // namespace derange
