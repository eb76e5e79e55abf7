#include <gtest/gtest.h>

#include <set>

#include "gorentest/field_matrix.hpp"
#include "support.hpp"

using namespace gorentest;
using testing_support::naive_rank;

namespace {

FieldMatrix random_matrix(PrimeField f, std::size_t r, std::size_t c, std::mt19937_64& rng,
                          int zero_bias = 0) {
  FieldMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (zero_bias == 0 || rng() % (zero_bias + 1) == 0)
        m.set(i, j, f.reduce(static_cast<std::int64_t>(rng() % f.characteristic())));
  return m;
}

// |column span| by enumerating every coefficient vector.
std::size_t span_size(const FieldMatrix& m) {
  const std::uint32_t p = m.field().characteristic();
  std::set<Vec> seen;
  std::vector<Elem> coef(m.cols(), 0);
  while (true) {
    Vec v(m.rows(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        v[r] = m.field().add(v[r], m.field().mul(coef[c], m.at(r, c)));
    seen.insert(v);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  return seen.size();
}

}  // namespace

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(91), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2147483647));
}

TEST(PrimeField, InverseAndSign) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 101u}) {
    const PrimeField f(p);
    for (Elem a = 1; a < p; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.sign(3), f.neg(1));
    EXPECT_EQ(f.sign(-2), 1u);
    EXPECT_EQ(f.reduce(-1), p - 1);
  }
}

TEST(FieldMatrix, RankMatchesSpanEnumeration) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int t = 0; t < 60; ++t) {
      const auto m = random_matrix(f, 1 + rng() % 4, 1 + rng() % 5, rng, t % 3);
      std::size_t expect = 0;
      for (std::size_t s = span_size(m); s > 1; s /= p) ++expect;
      EXPECT_EQ(rank(m), expect);
      EXPECT_EQ(rank_profile(m).rank, expect);
    }
  }
}

TEST(FieldMatrix, RankNullityAndKernel) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2u, 3u, 5u, 65521u}) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      // Wide enough to cross a 64-bit word on the packed F_2 path.
      const auto m = random_matrix(f, 1 + rng() % 70, 1 + rng() % 90, rng, t % 4);
      const RankProfile rp = rank_profile(m);
      EXPECT_EQ(rp.rank, naive_rank(m));
      EXPECT_EQ(rp.rank + rp.kernel_basis.cols(), m.cols());
      EXPECT_TRUE(compose(m, rp.kernel_basis).is_zero());
      EXPECT_EQ(naive_rank(rp.kernel_basis), rp.kernel_basis.cols());
      EXPECT_EQ(naive_rank(rp.image_basis), rp.rank);
      EXPECT_EQ(rank(m.transpose()), rp.rank);
    }
  }
}

TEST(FieldMatrix, SolveAndInverse) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2u, 3u, 7u}) {
    const PrimeField f(p);
    for (int t = 0; t < 30; ++t) {
      const auto a = random_matrix(f, 6, 6, rng);
      const auto inv = inverse(a);
      EXPECT_EQ(inv.has_value(), naive_rank(a) == 6);
      if (inv) { EXPECT_EQ(compose(a, *inv), FieldMatrix::identity(f, 6)); }
      const auto b = random_matrix(f, 6, 1, rng).column(0);
      const auto x = solve(a, b);
      if (x) { EXPECT_EQ(a.apply(*x), b); }
      if (inv) { EXPECT_TRUE(x.has_value()); }
    }
  }
}

TEST(FieldMatrix, LeftInverseAndComplement) {
  std::mt19937_64 rng(5);
  const PrimeField f(3);
  for (int t = 0; t < 20; ++t) {
    auto b = random_matrix(f, 7, 3, rng);
    if (naive_rank(b) < 3) continue;
    const auto l = left_inverse(b);
    EXPECT_EQ(compose(l, b), FieldMatrix::identity(f, 3));
    const auto units = complement_units(b);
    ASSERT_EQ(units.size(), 4u);
    FieldMatrix full(f, 7, 7);
    full.add_block(0, 0, b);
    for (std::size_t k = 0; k < units.size(); ++k) full.set(units[k], 3 + k, 1);
    EXPECT_EQ(naive_rank(full), 7u);
  }
  EXPECT_THROW(left_inverse(FieldMatrix(f, 3, 2)), std::invalid_argument);
}

TEST(FieldMatrix, KroneckerAndShapes) {
  const PrimeField f(5);
  const auto a = FieldMatrix::from_rows(f, {{1, 2}, {3, 4}});
  const auto b = FieldMatrix::from_rows(f, {{0, 1}, {1, 0}});
  const auto k = kronecker(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s)
          EXPECT_EQ(k.at(i * 2 + j, r * 2 + s), f.mul(a.at(i, r), b.at(j, s)));
  EXPECT_THROW(compose(a, FieldMatrix(f, 3, 1)), std::invalid_argument);
  EXPECT_EQ(repeat_diagonal(a, 3).rows(), 6u);
  EXPECT_EQ(direct_sum(a, b).block(2, 2, 2, 2), b);
  EXPECT_EQ((a - a).is_zero(), true);
}
