#include <gtest/gtest.h>

#include <numeric>

#include "metabelian/linalg.hpp"
#include "support/random.hpp"

using namespace metab;
using namespace metab::linalg;
using metab::testing::Rng;

namespace {

std::vector<std::vector<Integer>> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int rank) {
  // Product of a rows x rank and a rank x cols matrix, so the rank is at most `rank`.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(rank)), b(rank, std::vector<Integer>(cols));
  for (auto& r : a)
    for (auto& v : r) v = metab::testing::uniform(rng, -3, 3);
  for (auto& r : b)
    for (auto& v : r) v = metab::testing::uniform(rng, -3, 3);
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int k = 0; k < rank; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}

IntegerRow sparse(const std::vector<Integer>& dense) {
  IntegerRow r;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (dense[j] != 0) r.emplace_back(j, dense[j]);
  return r;
}

std::vector<Rational> dense(const RationalRow& row, std::size_t cols) {
  std::vector<Rational> v(cols, 0);
  for (const auto& [j, c] : row) v.at(j) = c;
  return v;
}

}  // namespace

TEST(PrimitivePart, ClearsDenominatorsAndContent) {
  const RationalRow row{{0, Rational(2, 3)}, {3, Rational(-4, 9)}};
  const IntegerRow p = primitive_part(row);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].second, 3);
  EXPECT_EQ(p[1].second, -2);
}

TEST(Echelon, SmallExample) {
  FractionFreeEchelon e(3);
  EXPECT_TRUE(e.insert(IntegerRow{{0, 1}, {1, 2}}));
  EXPECT_TRUE(e.insert(IntegerRow{{1, 1}, {2, 1}}));
  EXPECT_FALSE(e.insert(IntegerRow{{0, 2}, {1, 5}, {2, 1}}));
  EXPECT_EQ(e.rank(), 2u);
  const auto ns = e.nullspace();
  ASSERT_EQ(ns.size(), 1u);
  // (2, -1, 1): the free column is normalised to 1.
  EXPECT_EQ(dense(ns[0], 3), (std::vector<Rational>{2, -1, 1}));
}

TEST(Echelon, RankAgreesWithBareissUnderReversedPivotOrder) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = metab::testing::uniform(rng, 1, 9);
    const std::size_t cols = metab::testing::uniform(rng, 1, 9);
    const int r = metab::testing::uniform(rng, 0, 6);
    const auto m = random_matrix(rng, rows, cols, r);
    FractionFreeEchelon e(cols);
    for (const auto& row : m) e.insert(sparse(row));
    std::vector<std::size_t> order(cols);
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    EXPECT_EQ(e.rank(), bareiss_rank(m));
    EXPECT_EQ(e.rank(), bareiss_rank(m, order));
    EXPECT_LE(e.rank(), static_cast<std::size_t>(r));

    const auto ns = e.nullspace();
    EXPECT_EQ(ns.size() + e.rank(), cols);
    for (const auto& sv : ns) {
      for (std::size_t k = 1; k < sv.size(); ++k) EXPECT_LT(sv[k - 1].first, sv[k].first);
      const auto v = dense(sv, cols);
      for (const auto& row : m) {
        Rational dot = 0;
        for (std::size_t j = 0; j < cols; ++j) dot += Rational(row[j]) * v[j];
        EXPECT_EQ(dot, 0);
      }
    }
  }
}

TEST(SpanSolver, RecoversCoordinates) {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 6;
    SpanSolver s(cols);
    std::vector<RationalRow> family;
    while (family.size() < 3) {
      RationalRow v;
      for (std::size_t j = 0; j < cols; ++j)
        if (metab::testing::uniform(rng, 0, 1)) v.emplace_back(j, metab::testing::small_rational(rng));
      if (s.add(v)) family.push_back(v);
    }
    std::vector<Rational> coeffs{metab::testing::small_rational(rng), 0, metab::testing::small_rational(rng)};
    std::vector<Rational> dense(cols, 0);
    for (std::size_t k = 0; k < family.size(); ++k)
      for (const auto& [j, c] : family[k]) dense[j] += coeffs[k] * c;
    RationalRow target;
    for (std::size_t j = 0; j < cols; ++j)
      if (dense[j] != 0) target.emplace_back(j, dense[j]);
    const auto got = s.coordinates(target);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, coeffs);
  }
  SpanSolver s(2);
  s.add(RationalRow{{0, 1}});
  EXPECT_FALSE(s.coordinates(RationalRow{{1, 1}}).has_value());
}
