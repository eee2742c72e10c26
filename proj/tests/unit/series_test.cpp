#include <gtest/gtest.h>

#include <functional>

#include "posettop/families.hpp"
#include "posettop/homology.hpp"
#include "posettop/identities.hpp"
#include "posettop/oracles.hpp"
#include "posettop/series.hpp"

using namespace posettop;

namespace {

Series egf(std::size_t order, const std::function<Rational(std::size_t)>& a) {
  std::vector<Rational> c;
  for (std::size_t n = 0; n <= order; ++n) c.push_back(a(n));
  return Series::from_egf(order, c);
}

Series sin_series(std::size_t order) {
  return egf(order, [](std::size_t n) -> Rational {
    if (n % 2 == 0) return 0;
    return (n / 2) % 2 ? -1 : 1;
  });
}

Series cos_series(std::size_t order) {
  return egf(order, [](std::size_t n) -> Rational {
    if (n % 2) return 0;
    return (n / 2) % 2 ? -1 : 1;
  });
}

}  // namespace

TEST(Series, ExpLogInverse) {
  auto e = egf(12, [](std::size_t) { return Rational(1); });
  auto l = log(e);
  EXPECT_EQ(l[1], 1);
  for (std::size_t i = 2; i <= 12; ++i) EXPECT_EQ(l[i], 0);
  auto u = Series(12);
  u[1] = 1;
  u[3] = Rational(1, 7);
  EXPECT_EQ(log(exp(u)), u);
}

TEST(Series, MinusLogCosIsIntegralOfTan) {
  auto f = log(cos_series(12)).scaled(-1);
  EXPECT_EQ(f.egf_coefficient(2), 1);
  EXPECT_EQ(f.egf_coefficient(4), 2);
  EXPECT_EQ(f.egf_coefficient(6), 16);
  auto tan = derivative(f);
  for (int m = 1; m <= 9; m += 2) EXPECT_EQ(tan.egf_coefficient(static_cast<std::size_t>(m)), euler_alternating(m));
}

TEST(Series, ArcsinCoefficients) {
  auto a = compositional_inverse(sin_series(9));
  std::vector<long> want{1, 1, 9, 225};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(a.egf_coefficient(2 * k + 1), want[k]);
  auto round = compose(sin_series(9), a);
  auto id = Series(9);
  id[1] = 1;
  EXPECT_EQ(round, id);
}

TEST(Series, ProductAndIntegral) {
  Series a(4, {1, 1, 0, 0, 0});
  auto sq = a * a;
  EXPECT_EQ(sq.coefficients(), (std::vector<Rational>{1, 2, 1, 0, 0}));
  EXPECT_EQ(derivative(integral(sq)), sq);
}

TEST(Series, PreconditionsAreChecked) {
  Series one(4, {1, 0, 0, 0, 0});
  EXPECT_THROW(exp(one), Error);
  Series zero(4);
  EXPECT_THROW(log(zero), Error);
  EXPECT_THROW(compositional_inverse(zero), Error);
}

TEST(BettiGf, FrozenValues) {
  BettiGfRequest even{BlockFamily::zero_mod_d, 2, 2, 0};
  EXPECT_EQ(betti_gf(even), (std::map<long, Integer>{{0, 2}}));
  EXPECT_EQ(betti_gf_ground_size(even), 4);
  BettiGfRequest even3{BlockFamily::zero_mod_d, 3, 2, 0};
  EXPECT_EQ(betti_gf(even3), (std::map<long, Integer>{{1, 16}}));
  BettiGfRequest odd{BlockFamily::one_mod_d, 2, 2, 0};
  EXPECT_EQ(betti_gf(odd), (std::map<long, Integer>{{0, 9}}));
  EXPECT_EQ(betti_gf_ground_size(odd), 5);
}

TEST(BettiGf, AtLeastKMatchesPosetHomology) {
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= 3; ++k) {
      BettiGfRequest r{BlockFamily::at_least_k, n, 1, k};
      BlockSizeSpec s;
      s.kind = BlockSizeSpec::Kind::at_least_k;
      s.k = k;
      auto f = block_restricted_partition_poset(n, s);
      auto h = betti_map(poset_homology(proper_part(f.poset).poset));
      EXPECT_EQ(betti_gf(r), h) << "n=" << n << " k=" << k;
    }
}

TEST(BettiGf, ModDFamiliesMatchPosetHomology) {
  struct Row {
    BlockFamily family;
    int n, d, k;
    BlockSizeSpec::Kind kind;
    int spec_k;
  };
  std::vector<Row> rows{{BlockFamily::zero_mod_d, 2, 3, 0, BlockSizeSpec::Kind::zero_mod_d, 0},
                        {BlockFamily::one_mod_d, 2, 3, 0, BlockSizeSpec::Kind::k_mod_d, 1},
                        {BlockFamily::one_mod_d, 3, 2, 0, BlockSizeSpec::Kind::k_mod_d, 1},
                        {BlockFamily::k_mod_d, 2, 2, 1, BlockSizeSpec::Kind::k_mod_d, 1}};
  for (const auto& row : rows) {
    BettiGfRequest r{row.family, row.n, row.d, row.k};
    BlockSizeSpec s;
    s.kind = row.kind;
    s.d = row.d;
    s.k = row.spec_k;
    auto f = block_restricted_partition_poset(betti_gf_ground_size(r), s);
    EXPECT_EQ(betti_gf(r), betti_map(poset_homology(proper_part(f.poset).poset)))
        << "ground " << betti_gf_ground_size(r) << " d=" << row.d;
  }
}
