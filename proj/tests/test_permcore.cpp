#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "flatperm/errors.hpp"
#include "flatperm/permcore.hpp"

namespace flatperm {
namespace {

Integer factorial_of(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 1}));
}

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(parse_permutation("71564328"), Permutation({7, 1, 5, 6, 4, 3, 2, 8}));
  EXPECT_EQ(parse_permutation("2,1"), Permutation({2, 1}));
  const Permutation long_one = Permutation::identity(11);
  EXPECT_EQ(to_string(long_one), "1,2,3,4,5,6,7,8,9,10,11");
  EXPECT_EQ(parse_permutation(to_string(long_one)), long_one);
  EXPECT_THROW(parse_permutation("1a"), std::invalid_argument);
}

TEST(CycleForm, RejectsNonStandardForms) {
  EXPECT_THROW(CycleForm({{2, 1}}), std::invalid_argument);
  EXPECT_THROW(CycleForm({{2}, {1}}), std::invalid_argument);
  EXPECT_THROW(CycleForm({{1}, {3}}), std::invalid_argument);
  EXPECT_THROW(CycleForm({{1}, {}}), std::invalid_argument);
}

TEST(StandardCycleForm, Examples) {
  EXPECT_EQ(to_string(standard_cycle_form(parse_permutation("71564328"))), "(172)(3546)(8)");
  EXPECT_EQ(to_string(standard_cycle_form(parse_permutation("1"))), "(1)");
  EXPECT_EQ(to_string(standard_cycle_form(parse_permutation("21"))), "(12)");
}

TEST(StandardCycleForm, ReconstitutesEveryPermutationOfSix) {
  std::vector<int> letters(6);
  std::iota(letters.begin(), letters.end(), 1);
  do {
    const Permutation p(letters);
    EXPECT_EQ(standard_cycle_form(p).to_permutation(), p);
  } while (std::next_permutation(letters.begin(), letters.end()));
}

TEST(Flatten, Examples) {
  EXPECT_EQ(flatten(parse_permutation("71564328")), parse_permutation("17235468"));
  EXPECT_EQ(flatten(Permutation::identity(7)), Permutation::identity(7));
  EXPECT_EQ(flatten(parse_permutation("312")), parse_permutation("132"));
}

TEST(Count132, Examples) {
  EXPECT_EQ(count_13_2(parse_permutation("132")), 1);
  EXPECT_EQ(count_13_2(Permutation::identity(9)), 0);
  EXPECT_EQ(count_13_2(parse_permutation("17235468")), 6);
  EXPECT_EQ(count_13_2(parse_permutation("1")), 0);
}

TEST(Distribution, SmallTables) {
  const auto d3 = distribution(3);
  EXPECT_EQ(d3.counts, (std::map<long, Integer>{{0, 4}, {1, 2}}));
  const std::vector<int> p13{1, 3};
  EXPECT_EQ(distribution(3, p13).counts, (std::map<long, Integer>{{1, 2}}));
  EXPECT_EQ(distribution(4, p13).counts, (std::map<long, Integer>{{1, 6}}));
  EXPECT_EQ(distribution(1).counts, (std::map<long, Integer>{{0, 1}}));
  EXPECT_EQ(distribution(5).counts, (std::map<long, Integer>{{0, 16}, {1, 34}, {2, 42}, {3, 24}, {4, 4}}));
  EXPECT_EQ(distribution(7).counts,
            (std::map<long, Integer>{{0, 64}, {1, 258}, {2, 648}, {3, 1084}, {4, 1224},
                                     {5, 946}, {6, 528}, {7, 220}, {8, 60}, {9, 8}}));
}

TEST(Distribution, TableInvariants) {
  for (int n = 1; n <= 8; ++n) {
    const auto t = distribution(n);
    EXPECT_EQ(t.total(), factorial_of(n)) << n;
    EXPECT_LE(t.max_r(), max_occurrences(n)) << n;
    for (const auto& [r, c] : t.counts) EXPECT_GT(c, 0);
  }
}

TEST(Distribution, ParallelMatchesSerial) {
  EnumerationOptions parallel;
  parallel.parallel = true;
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(distribution(n, {}, parallel).counts, distribution(n).counts);
  EXPECT_EQ(distributions_by_second_letter(7, parallel).size(), 6u);
}

TEST(Distribution, SecondLetterTablesPartitionTheWhole) {
  for (int n = 2; n <= 7; ++n) {
    std::map<long, Integer> sum;
    for (const auto& [k, t] : distributions_by_second_letter(n)) {
      EXPECT_EQ(t.prefix, (std::vector<int>{1, k}));
      for (const auto& [r, c] : t.counts) sum[r] += c;
    }
    EXPECT_EQ(sum, distribution(n).counts);
  }
}

TEST(Distribution, Errors) {
  EXPECT_THROW(distribution(11), LimitExceeded);
  EnumerationOptions options;
  options.limit = 3;
  EXPECT_THROW(distribution(4, {}, options), LimitExceeded);
  EXPECT_THROW(distribution(0), std::invalid_argument);
  const std::vector<int> bad{1, 4};
  EXPECT_THROW(distribution(3, bad), std::invalid_argument);
  options.limit = kMaxEnumerationLimit + 1;
  EXPECT_THROW(distribution(3, {}, options), std::invalid_argument);
}

TEST(Distribution, PrefixesThatCannotOccurGiveEmptyTables) {
  const std::vector<int> p12{1, 2, 2};
  EXPECT_THROW(distribution(4, p12), std::invalid_argument);
  const std::vector<int> p2{2};
  EXPECT_TRUE(distribution(3, p2).counts.empty());
}

TEST(OneToTwoMap, Examples) {
  const auto [pi, pi2] = lemma21_pair(parse_permutation("1"));
  EXPECT_EQ(pi, parse_permutation("12"));
  EXPECT_EQ(pi2, parse_permutation("21"));
  const auto [a, b] = lemma21_pair(parse_permutation("21"));
  EXPECT_EQ(a, parse_permutation("132"));
  EXPECT_EQ(b, parse_permutation("231"));
  EXPECT_EQ(flatten(a), parse_permutation("123"));
  EXPECT_EQ(flatten(b), parse_permutation("123"));
}

TEST(OneToTwoMap, DoublesTheDistributionFromFiveToSix) {
  std::map<long, Integer> image;
  std::vector<int> letters{1, 2, 3, 4, 5};
  do {
    const auto [pi, pi2] = lemma21_pair(Permutation(letters));
    image[count_13_2(flatten(pi))] += 1;
    image[count_13_2(flatten(pi2))] += 1;
  } while (std::next_permutation(letters.begin(), letters.end()));
  const std::vector<int> p12{1, 2};
  EXPECT_EQ(image, distribution(6, p12).counts);
  std::map<long, Integer> doubled;
  for (const auto& [r, c] : distribution(5).counts) doubled[r] = 2 * c;
  EXPECT_EQ(image, doubled);
}

TEST(MaxPatternPerm, Examples) {
  EXPECT_EQ(max_pattern_perm(4), parse_permutation("1423"));
  EXPECT_EQ(count_13_2(max_pattern_perm(4)), 2);
  EXPECT_EQ(max_pattern_perm(5), parse_permutation("15243"));
  EXPECT_EQ(count_13_2(max_pattern_perm(5)), 4);
  EXPECT_EQ(max_pattern_perm(1), parse_permutation("1"));
  EXPECT_EQ(count_13_2(max_pattern_perm(1)), 0);
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(flatten(max_pattern_perm(n)).letters()[0], 1);
    EXPECT_EQ(count_13_2(max_pattern_perm(n)), max_occurrences(n));
  }
}

TEST(MinLengthFor, Examples) {
  const std::vector<int> expected{3, 4, 5, 5, 6, 6, 7, 7, 7};
  for (long r = 1; r <= 9; ++r) EXPECT_EQ(min_length_for(r), expected[static_cast<std::size_t>(r - 1)]) << r;
  EXPECT_THROW(min_length_for(0), std::invalid_argument);
}

TEST(Witness, Examples) {
  EXPECT_EQ(appendix_c_witness(4, 0), parse_permutation("126354"));
  EXPECT_EQ(appendix_c_witness(4, 4), parse_permutation("165432"));
  const Permutation w = appendix_c_witness(5, 2);
  EXPECT_EQ(w, parse_permutation("1476253"));
  EXPECT_EQ(count_13_2(w), 5);
  EXPECT_THROW(appendix_c_witness(3, 0), std::invalid_argument);
  EXPECT_THROW(appendix_c_witness(4, 5), std::invalid_argument);
  EXPECT_THROW(appendix_c_witness(4, -1), std::invalid_argument);
}

TEST(Witness, CountsForLargerR) {
  for (int r = 4; r <= 14; ++r) {
    for (int i = 0; i <= r; ++i) {
      const Permutation w = appendix_c_witness(r, i);
      EXPECT_EQ(count_13_2(w), r);
      EXPECT_EQ(flatten(single_cycle_preimage(w)), w);
    }
  }
}

}  // namespace
}  // namespace flatperm
