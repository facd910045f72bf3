#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "pdtree/brute_oracle.hpp"
#include "pdtree/combinatorics.hpp"

namespace pdtree {
namespace {

// Height-1 binary tables
const CountPoly kExit21{0, 1, 3, 1};
const CountPoly kHelp21{0, 2, 0, 0};

CountPoly random_poly(std::mt19937_64& rng, std::size_t max_len, long long max_value) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<long long> val(0, max_value);
  std::bernoulli_distribution zero(0.3);
  std::vector<BigCount> c(len(rng));
  for (auto& v : c) v = zero(rng) ? 0 : val(rng);
  return CountPoly(std::move(c));
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(7, 4), 35);
  for (int m = 0; m < 10; ++m) EXPECT_EQ(binomial(m, m), 1);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(10, 3), factorial(10) / (factorial(3) * factorial(7)));
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(-2, 1), 0);
  EXPECT_EQ(binomial(100, 50), BigCount("100891344545564193334812497256"));
}

TEST(Multinomial, Values) {
  EXPECT_EQ(multinomial(2, {1, 0, 0, 0, 1}), 2);
  EXPECT_EQ(multinomial(2, {0, 0, 2, 0, 0}), 1);
  for (long long n = 0; n < 8; ++n) EXPECT_EQ(multinomial(n, {n}), 1);
  EXPECT_THROW(multinomial(3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(multinomial(0, {1, -1}), std::invalid_argument);
}

TEST(Multinomial, TimesFactorialsIsFactorial) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> part(0, 6);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<long long> parts(1 + static_cast<std::size_t>(rep % 5));
    long long n = 0;
    for (auto& p : parts) n += (p = part(rng));
    BigCount prod = multinomial(n, parts);
    for (long long p : parts) prod *= factorial(p);
    EXPECT_EQ(prod, factorial(n));
  }
}

TEST(TwoBlockTuples, Examples) {
  auto sizes = [](const std::vector<TwoBlockTuple>& ts) {
    std::vector<std::vector<long long>> out;
    for (const auto& t : ts) out.push_back(t.sizes);
    return out;
  };
  EXPECT_EQ(sizes(two_block_tuples(2, 0, 4)),
            (std::vector<std::vector<long long>>{{0, 4}, {1, 3}, {2, 2}}));
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t l = 0; l <= m; ++l) {
      const auto ts = two_block_tuples(m, l, 0);
      ASSERT_EQ(ts.size(), 1u);
      EXPECT_EQ(ts[0].sizes, std::vector<long long>(m, 0));
    }
  EXPECT_EQ(sizes(two_block_tuples(2, 1, 3)),
            (std::vector<std::vector<long long>>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
  EXPECT_TRUE(two_block_tuples(2, 1, -1).empty());
  EXPECT_THROW(two_block_tuples(2, 3, 1), std::invalid_argument);
}

TEST(TwoBlockTuples, InvariantsAndCount) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t l = 0; l <= m; ++l) {
      for (long long k = 0; k <= 10; ++k) {
        const auto ts = two_block_tuples(m, l, k);
        std::set<std::vector<long long>> unique;
        for (const auto& t : ts) {
          ASSERT_EQ(t.sizes.size(), m);
          long long sum = 0;
          for (std::size_t j = 0; j < m; ++j) {
            sum += t.sizes[j];
            if (j > 0 && j != l) {
              EXPECT_LE(t.sizes[j - 1], t.sizes[j]);
            }
          }
          EXPECT_EQ(sum, k);
          unique.insert(t.sizes);
        }
        EXPECT_EQ(unique.size(), ts.size());
        BigCount expected = 0;
        for (long long s = 0; s <= k; ++s)
          expected += partition_count(s, static_cast<long long>(l)) *
                      partition_count(k - s, static_cast<long long>(m - l));
        EXPECT_EQ(BigCount(ts.size()), expected) << m << "," << l << "," << k;
      }
    }
  }
}

TEST(TwoBlockTuples, Multiplicities) {
  TwoBlockTuple t{{0, 2, 2, 1, 1, 3}, 3};
  EXPECT_EQ(t.head_multiplicities(3), (std::vector<long long>{1, 0, 2, 0}));
  EXPECT_EQ(t.tail_multiplicities(3), (std::vector<long long>{0, 2, 0, 1}));
}

TEST(Bracket, WorkedExampleLiteral) {
  EXPECT_EQ(bracket_literal(kHelp21, kExit21, 2, 0, 4), 11);
  EXPECT_EQ(bracket_literal(kHelp21, kExit21, 2, 1, 4), 4);
  EXPECT_EQ(bracket_literal(kHelp21, kExit21, 2, 0, 3), 6);
  EXPECT_EQ(bracket_literal(kHelp21, kExit21, 2, 1, 3), 12);
  EXPECT_EQ(bracket_literal(kHelp21, kExit21, 2, 2, 3), 0);
}

TEST(Bracket, WorkedExampleConvolution) {
  EXPECT_EQ(bracket_convolution(kHelp21, kExit21, 2, 0, 4), 11);
  EXPECT_EQ(bracket_convolution(kHelp21, kExit21, 2, 1, 4), 4);
  EXPECT_EQ(bracket_convolution(kHelp21, kExit21, 2, 0, 3), 6);
  EXPECT_EQ(bracket_convolution(kHelp21, kExit21, 2, 1, 3), 12);
  EXPECT_EQ(bracket_convolution(kHelp21, kExit21, 2, 2, 3), 0);
}

TEST(Bracket, NegativeSizeIsZero) {
  EXPECT_EQ(bracket_literal(kHelp21, kExit21, 2, 0, -1), 0);
  EXPECT_EQ(bracket_convolution(kHelp21, kExit21, 2, 0, -1), 0);
  EXPECT_THROW(bracket_literal(kHelp21, kExit21, 2, 3, 1), std::invalid_argument);
}

TEST(Bracket, RoutesAgreeOnOracleTables) {
  for (int m = 2; m <= 3; ++m) {
    for (int h = 0; h <= 2; ++h) {
      const auto eh = oracle_eh_table(m, h);
      const CountPoly help(eh.help), exit(eh.exit);
      for (std::size_t l = 0; l <= static_cast<std::size_t>(m); ++l)
        for (long long k = 0; k <= 12; ++k)
          EXPECT_EQ(bracket_literal(help, exit, m, l, k), bracket_convolution(help, exit, m, l, k))
              << m << "," << h << "," << l << "," << k;
    }
  }
}

TEST(Bracket, RoutesAgreeOnRandomTables) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 60; ++rep) {
    const CountPoly help = random_poly(rng, 6, 50);
    const CountPoly exit = random_poly(rng, 6, 50);
    const std::size_t m = 2 + static_cast<std::size_t>(rep % 3);
    for (std::size_t l = 0; l <= m; ++l)
      for (long long k = 0; k <= 10; ++k)
        ASSERT_EQ(bracket_literal(help, exit, m, l, k), bracket_convolution(help, exit, m, l, k));
  }
}

TEST(Bracket, SumOverSplitsIsBinomialExpansion) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const CountPoly help = random_poly(rng, 5, 20);
    const CountPoly exit = random_poly(rng, 5, 20);
    const std::size_t m = 2 + static_cast<std::size_t>(rep % 3);
    CountPoly both = help;
    both += exit;
    const CountPoly expanded = power(both, m, 12);
    for (long long k = 0; k <= 12; ++k) {
      BigCount sum = 0;
      for (std::size_t l = 0; l <= m; ++l) sum += bracket_literal(help, exit, m, l, k);
      EXPECT_EQ(sum, expanded.at(k));
    }
  }
}

TEST(PartitionCount, Values) {
  EXPECT_EQ(partition_count(4, 2), 3);
  for (long long m = 0; m < 5; ++m) EXPECT_EQ(partition_count(0, m), 1);
  for (long long k = 1; k < 10; ++k) EXPECT_EQ(partition_count(k, 1), 1);
  EXPECT_EQ(partition_count(3, 0), 0);
  EXPECT_EQ(partition_count(-1, 3), 0);
  EXPECT_EQ(partition_count(10, 10), 42);  // p(10)
  EXPECT_EQ(partition_count(100, 100), BigCount("190569292"));
}

TEST(CountPoly, ProductTruncationAndEquality) {
  const CountPoly a{1, 1};
  EXPECT_EQ(multiply(a, a, 10), (CountPoly{1, 2, 1}));
  EXPECT_EQ(multiply(a, a, 1), (CountPoly{1, 2}));
  EXPECT_EQ(power(a, 4, 10), (CountPoly{1, 4, 6, 4, 1}));
  EXPECT_EQ(power(a, 0, 10), (CountPoly{1}));
  EXPECT_EQ((CountPoly{1, 2, 0, 0}), (CountPoly{1, 2}));
  EXPECT_EQ((CountPoly{1, 2, 0}).trimmed().size(), 2u);
  EXPECT_EQ(a.shifted(), (CountPoly{0, 1, 1}));
  EXPECT_EQ(a.at(-1), 0);
  EXPECT_EQ(a.at(5), 0);
}

}  // namespace
}  // namespace pdtree
