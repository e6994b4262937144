#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"

using namespace dynkin;
using fixtures::m;

namespace {

/// A symmetrizable GCM built from a chosen diagonal d and a symmetric B = D·A.
Gcm random_symmetrizable(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dd(1, 4), coin(0, 1), mult(1, 2);
  std::vector<int> d(n);
  for (auto& x : d) x = dd(rng);
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) continue;
      const int b = mult(rng) * std::lcm(d[i], d[j]);
      r[i][j] = -b / d[i];
      r[j][i] = -b / d[j];
    }
  }
  return Gcm::from_rows(r);
}

bool da_symmetric(const Gcm& a, const std::vector<std::int64_t>& d) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      if (d[i] * a(i, j) != d[j] * a(j, i)) return false;
  return true;
}

}  // namespace

TEST(Symmetrize, UnbalancedTriangleWitness) {
  const auto r = is_symmetrizable(fixtures::unbalanced_triangle());
  EXPECT_FALSE(r.symmetrizable);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->cycle, (std::vector<std::size_t>{0, 1, 2, 0}));
  EXPECT_EQ(r.witness->forward_product, -4);
  EXPECT_EQ(r.witness->reverse_product, -2);
  EXPECT_FALSE(kac_cycle_oracle(fixtures::unbalanced_triangle()));
}

TEST(Symmetrize, SmallCases) {
  EXPECT_TRUE(is_symmetrizable(fixtures::twisted_a2()).symmetrizable);
  EXPECT_TRUE(kac_cycle_oracle(fixtures::twisted_a2()));
  const auto triangle = m({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_TRUE(is_symmetrizable(triangle).symmetrizable);
  EXPECT_TRUE(kac_cycle_oracle(triangle));
}

TEST(Symmetrize, EveryRankTwoMatrixIsSymmetrizable) {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      if ((a == 0) == (b == 0)) {
        EXPECT_TRUE(is_symmetrizable(m({{2, -a}, {-b, 2}})).symmetrizable);
      }
}

TEST(Symmetrize, AcyclicDiagramsAreSymmetrizable) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 8;
    std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 2;
    for (std::size_t v = 1; v < n; ++v) {  // random tree
      const std::size_t u = rng() % v;
      r[u][v] = -e(rng);
      r[v][u] = -e(rng);
    }
    const auto a = Gcm::from_rows(r);
    EXPECT_TRUE(is_symmetrizable(a).symmetrizable);
    EXPECT_TRUE(da_symmetric(a, symmetrizer(a).d));
  }
}

TEST(Symmetrize, SymmetrizerExamples) {
  EXPECT_EQ(symmetrizer(fixtures::twisted_a2()).d, (std::vector<std::int64_t>{4, 1}));
  EXPECT_EQ(symmetrizer(fixtures::affine_a1()).d, (std::vector<std::int64_t>{1, 1}));
  // d_i a_ij = d_j a_ji on the chain forces d_3 = 2 d_2; (2,2,1) symmetrizes
  // the transpose instead
  const auto chain = m({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  EXPECT_EQ(symmetrizer(chain).d, (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(symmetrizer(dual(chain)).d, (std::vector<std::int64_t>{2, 2, 1}));
  EXPECT_THROW(symmetrizer(fixtures::unbalanced_triangle()), std::invalid_argument);
  EXPECT_THROW(symmetrizer(Gcm::identity(2)), std::invalid_argument);
}

TEST(Symmetrize, SymmetricAndRootLengths) {
  EXPECT_TRUE(is_symmetric(fixtures::affine_a1()));
  EXPECT_FALSE(is_symmetric(fixtures::twisted_a2()));
  EXPECT_TRUE(is_symmetric(fixtures::e10_by_hand()));
  EXPECT_EQ(root_length_count(fixtures::twisted_a2()), 2u);
  EXPECT_EQ(root_length_count(fixtures::e10_by_hand()), 1u);
}

TEST(Symmetrize, BilinearForm) {
  using B = std::vector<std::vector<std::int64_t>>;
  EXPECT_EQ(bilinear_form(fixtures::affine_a1()), (B{{2, -2}, {-2, 2}}));
  EXPECT_EQ(bilinear_form(fixtures::twisted_a2()), (B{{8, -4}, {-4, 2}}));
  EXPECT_EQ(bilinear_form(fixtures::a2()), (B{{2, -1}, {-1, 2}}));
}

TEST(Symmetrize, FiniteAndAffineRootLengthBounds) {
  for (const auto& f : fixtures::finite_fixtures()) {
    EXPECT_LE(root_length_count(f), 2u) << matrix_inline(f);
    EXPECT_LE(root_length_count(extend_finite_to_affine(f)), 3u) << matrix_inline(f);
  }
  for (std::size_t r = 2; r <= 7; ++r)
    for (const auto& a : connected_affine_classes(r)) EXPECT_LE(root_length_count(a), 3u) << matrix_inline(a);
}

TEST(SymmetrizeProperties, ExhaustiveRankThreeAgreesWithKac) {
  std::size_t total = 0, symmetrizable = 0;
  std::vector<int> vals{0, -1, -2, -3, -4};
  for (int a01 : vals) for (int a10 : vals) for (int a02 : vals) for (int a20 : vals) for (int a12 : vals) for (int a21 : vals) {
    if ((a01 == 0) != (a10 == 0) || (a02 == 0) != (a20 == 0) || (a12 == 0) != (a21 == 0)) continue;
    const auto a = m({{2, a01, a02}, {a10, 2, a12}, {a20, a21, 2}});
    const auto r = is_symmetrizable(a);
    ++total;
    symmetrizable += r.symmetrizable;
    ASSERT_EQ(r.symmetrizable, kac_cycle_oracle(a)) << matrix_inline(a);
    if (!r.symmetrizable) {
      EXPECT_NE(r.witness->forward_product, r.witness->reverse_product);
    }
  }
  EXPECT_EQ(total, 17u * 17u * 17u);
  EXPECT_GT(symmetrizable, 0u);
  EXPECT_LT(symmetrizable, total);
}

TEST(SymmetrizeProperties, RandomAgreesWithKac) {
  std::mt19937_64 rng(31337);
  std::size_t yes = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const auto a = trial % 2 ? fixtures::random_gcm(rng, n) : random_symmetrizable(rng, n);
    const bool ours = is_symmetrizable(a).symmetrizable;
    ASSERT_EQ(ours, kac_cycle_oracle(a)) << matrix_inline(a);
    yes += ours;
  }
  EXPECT_GT(yes, 5000u);
}

TEST(SymmetrizeProperties, SoundScaleFreeAndDual) {
  std::mt19937_64 rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto a = random_symmetrizable(rng, n);
    ASSERT_TRUE(is_symmetrizable(a).symmetrizable);
    if (!is_indecomposable(a)) continue;
    ++checked;
    const auto d = symmetrizer(a).d;
    ASSERT_TRUE(da_symmetric(a, d));
    std::int64_t g = 0;
    for (auto x : d) {
      EXPECT_GT(x, 0);
      g = std::gcd(g, x);
    }
    EXPECT_EQ(g, 1);

    // relabelling moves the spanning-tree root but not the normalized answer
    const auto p = fixtures::random_permutation(rng, n);
    const auto dp = symmetrizer(permuted(a, p)).d;
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(dp[i], d[p[i]]);

    // dual: d'_i proportional to 1/d_i
    const auto dd = symmetrizer(dual(a)).d;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(dd[i] * d[i], dd[j] * d[j]);

    // symmetric <=> all d equal <=> every edge has p == q
    bool all_equal = std::all_of(d.begin(), d.end(), [&](auto x) { return x == d[0]; });
    bool symmetric_edges = true;
    const auto diagram = matrix_to_diagram(a);
    for (const auto& e : diagram.edges()) symmetric_edges = symmetric_edges && e.label.symmetric();
    EXPECT_EQ(is_symmetric(a), all_equal);
    EXPECT_EQ(is_symmetric(a), symmetric_edges);
  }
  EXPECT_GT(checked, 300);
}

TEST(Symmetrize, OracleRankBound) {
  EXPECT_THROW(kac_cycle_oracle(Gcm::identity(9)), std::invalid_argument);
}
