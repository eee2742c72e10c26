#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "posettop/oracles.hpp"

using namespace posettop;

namespace {

// Standard Young tableaux by removing corners.
Integer count_tableaux(IntegerPartition lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  Integer total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    bool corner = i + 1 == lambda.size() || lambda[i + 1] < lambda[i];
    if (!corner) continue;
    auto mu = lambda;
    --mu[i];
    total += count_tableaux(mu);
  }
  return total;
}

long content_sum(const IntegerPartition& lambda) {
  long s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) s += j - static_cast<long>(i);
  return s;
}

std::set<int> descents(const std::vector<int>& w) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

}  // namespace

TEST(Partitions, HookLengthsAndDimensions) {
  EXPECT_EQ(partition_tools({2, 1}).dim_specht, 2);
  EXPECT_EQ(partition_tools({4}).dim_specht, 1);
  auto info = partition_tools({3, 1, 1});
  EXPECT_TRUE(info.self_conjugate);
  EXPECT_EQ(info.durfee_rank, 1);
  EXPECT_EQ(info.dim_specht, 6);
  EXPECT_EQ(info.hook_lengths, (std::vector<std::vector<int>>{{5, 2, 1}, {2}, {1}}));
  EXPECT_EQ(conjugate({4, 2, 1}), (IntegerPartition{3, 2, 1, 1}));
  EXPECT_FALSE(is_partition({1, 2}));
}

TEST(Partitions, DimensionsMatchTableauCounts) {
  for (int n = 1; n <= 8; ++n) {
    Integer sum_sq = 0;
    for (const auto& lambda : partitions_of(n)) {
      auto f = partition_tools(lambda).dim_specht;
      EXPECT_EQ(f, count_tableaux(lambda));
      sum_sq += f * f;
    }
    EXPECT_EQ(sum_sq, factorial(n));
  }
}

TEST(Partitions, CountsArePartitionNumbers) {
  std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
}

TEST(Bouc, FrozenValues) {
  EXPECT_EQ(bouc_betti(5, 2), 6);
  EXPECT_EQ(bouc_betti(3, 1), 2);
  EXPECT_EQ(bouc_betti(4, 2), 0);
}

TEST(Bouc, AlternatingSumIsEulerCharacteristicOfMatchingComplex) {
  // Matchings of size j in K_n: n! / (j! 2^j (n - 2j)!).
  for (int n = 2; n <= 10; ++n) {
    Integer chi = 0;
    for (int j = 0; 2 * j <= n; ++j) {
      Integer m = factorial(n) / (factorial(j) * (Integer(1) << j) * factorial(n - 2 * j));
      chi += (j % 2 ? m : Integer(-m));
    }
    Integer from_bouc = 0;
    for (int k = 1; k <= n; ++k) from_bouc += ((k - 1) % 2 ? Integer(-bouc_betti(n, k)) : bouc_betti(n, k));
    EXPECT_EQ(from_bouc, chi) << "n=" << n;
  }
}

TEST(Laplacian, EigenvalueIsContentSum) {
  EXPECT_EQ(laplacian_eigenvalue({2}), 1);
  EXPECT_EQ(laplacian_eigenvalue({1, 1}), -1);
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(laplacian_eigenvalue(lambda), content_sum(lambda));
      EXPECT_EQ(laplacian_eigenvalue(lambda), -laplacian_eigenvalue(conjugate(lambda)));
      if (partition_tools(lambda).self_conjugate) EXPECT_EQ(laplacian_eigenvalue(lambda), 0);
    }
  EXPECT_TRUE(laplacian_eigenvalue_candidates(5).count(0));
}

TEST(Counting, Basics) {
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(multinomial({2, 2, 1}), 30);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(gaussian_binomial(3, 1, 2), 7);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(4, 5, 2), 0);
  EXPECT_THROW(gaussian_binomial(3, 1, 1), Error);
}

TEST(Counting, DerangementsAndCatalan) {
  EXPECT_EQ(derangements(4), 9);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(derangements(n), derangements_enumerated(n));
  std::vector<long> cat{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) {
    EXPECT_EQ(catalan(n), cat[static_cast<std::size_t>(n)]);
    EXPECT_EQ(catalan_recurrence(n), cat[static_cast<std::size_t>(n)]);
  }
}

TEST(Counting, EulerNumbers) {
  std::vector<long> e{1, 1, 1, 2, 5, 16, 61, 272, 1385};
  for (int m = 0; m <= 8; ++m) {
    EXPECT_EQ(euler_alternating(m), e[static_cast<std::size_t>(m)]);
    EXPECT_EQ(euler_from_series(m), e[static_cast<std::size_t>(m)]);
  }
  EXPECT_EQ(euler_d(2, 2), 2);
  EXPECT_EQ(euler_d(3, 2), 16);
}

TEST(Descents, ClassesAgreeWithEnumeration) {
  EXPECT_EQ(descent_class(4, {1, 3}), 5);
  for (int n = 1; n <= 6; ++n) {
    std::map<std::set<int>, Integer> counts;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do counts[descents(w)] += 1;
    while (std::next_permutation(w.begin(), w.end()));
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::set<int> r;
      for (int i = 0; i < n - 1; ++i)
        if (mask >> i & 1) r.insert(i + 1);
      EXPECT_EQ(descent_class(n, r), counts[r]);
      EXPECT_EQ(descent_class_formula(n, r), counts[r]);
      EXPECT_EQ(descent_class_q(n, r, 1), counts[r]);
    }
  }
}

TEST(Descents, SignedClassesSumToHyperoctahedralOrder) {
  for (int n = 1; n <= 5; ++n) {
    Integer total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::set<int> r;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) r.insert(i);
      total += signed_descent_class(n, r);
    }
    EXPECT_EQ(total, (Integer(1) << n) * factorial(n));
  }
}

TEST(KEqual, BrokenHookFormula) {
  EXPECT_EQ(kequal_betti(6, 3), (std::map<long, Integer>{{1, 10}, {2, 10}}));
  // k = 2 is the partition lattice.
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(kequal_betti(n, 2), (std::map<long, Integer>{{n - 3, factorial(n - 1)}}));
}
