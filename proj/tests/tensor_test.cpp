#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tqft2d/network.hpp"
#include "tqft2d/tensor.hpp"

using namespace tqft2d;
using tqft2d::testing::q;
using tqft2d::testing::qs;
using RT = LabeledTensor<Rational>;

namespace {

RT matrix(const std::string& a, Orientation sa, const std::string& b, Orientation sb,
          std::vector<Rational> e) {
  return RT(2, {{a, sa}, {b, sb}}, std::move(e));
}

}  // namespace

TEST(Tensor, ConstructionChecksShapeAndLabels) {
  EXPECT_THROW(RT(2, {{"i", Orientation::Plus}}, qs({1, 2, 3})), DimensionMismatch);
  EXPECT_THROW(RT(2, {{"i", Orientation::Plus}, {"i", Orientation::Minus}}, qs({1, 2, 3, 4})), LabelError);
  EXPECT_THROW(RT(0, {}, qs({1})), InvalidArgument);
}

TEST(Tensor, ProductWithScalarUnit) {
  RT d(2, {{"i", Orientation::Plus}}, qs({2, 3}));
  EXPECT_TRUE(equal(tensor_product(RT::scalar(q(1)), d), d));
  EXPECT_TRUE(equal(tensor_product(d, RT::scalar(q(1))), d));
}

TEST(Tensor, OuterProduct) {
  RT d(2, {{"i", Orientation::Plus}}, qs({2, 3}));
  RT e(2, {{"j", Orientation::Plus}}, qs({2, 3}));
  RT prod = tensor_product(d, e);
  EXPECT_EQ(prod.entries(), qs({4, 6, 6, 9}));
  EXPECT_EQ(prod.indices()[1].label, "j");
}

TEST(Tensor, ProductErrors) {
  RT a(2, {{"i", Orientation::Plus}}, qs({1, 2}));
  RT b(3, {{"j", Orientation::Plus}}, qs({1, 2, 3}));
  EXPECT_THROW(tensor_product(a, b), DimensionMismatch);
  EXPECT_THROW(tensor_product(a, a), LabelError);
}

TEST(Tensor, ContractIsTrace) {
  RT c = matrix("i", Orientation::Minus, "j", Orientation::Plus, qs({1, 2, 3, 4}));
  EXPECT_EQ(contract(c, "i", "j").value(), q(5));
  EXPECT_EQ(contract(c, "j", "i").value(), q(5));

  RT id = RT::zeros(3, {{"i", Orientation::Plus}, {"j", Orientation::Minus}});
  for (int k = 0; k < 3; ++k) id(k, k) = 1;
  EXPECT_EQ(contract(id, "i", "j").value(), q(3));
}

TEST(Tensor, ContractErrors) {
  RT c = matrix("i", Orientation::Plus, "j", Orientation::Plus, qs({1, 2, 3, 4}));
  EXPECT_THROW(contract(c, "i", "j"), OrientationMismatch);
  EXPECT_THROW(contract(c, "i", "x"), LabelError);
  EXPECT_THROW(contract(c, "i", "i"), LabelError);
}

TEST(Tensor, ContractPreservesRemainingOrder) {
  std::mt19937_64 rng(5);
  RT t = tqft2d::testing::random_tensor(
      rng, 2,
      {{"a", Orientation::Plus}, {"b", Orientation::Minus}, {"c", Orientation::Plus}, {"d", Orientation::Plus}});
  RT r = contract(t, "b", "c");
  ASSERT_EQ(r.rank(), 2u);
  EXPECT_EQ(r.indices()[0].label, "a");
  EXPECT_EQ(r.indices()[1].label, "d");
  for (int a = 0; a < 2; ++a)
    for (int d = 0; d < 2; ++d) EXPECT_EQ(r(a, d), Rational(t(a, 0, 0, d) + t(a, 1, 1, d)));
}

TEST(Tensor, PermuteIndices) {
  RT c = matrix("i", Orientation::Plus, "j", Orientation::Minus, qs({1, 2, 3, 4}));
  EXPECT_TRUE(equal(permute_indices(c, {0, 1}), c));
  RT swapped = permute_indices(c, {1, 0});
  EXPECT_EQ(swapped.entries(), qs({1, 3, 2, 4}));
  EXPECT_EQ(swapped.indices()[0].label, "j");
  EXPECT_THROW(permute_indices(c, {0, 0}), InvalidArgument);
  EXPECT_THROW(permute_indices(c, {0}), InvalidArgument);

  std::mt19937_64 rng(11);
  RT t = tqft2d::testing::random_tensor(
      rng, 3, {{"a", Orientation::Plus}, {"b", Orientation::Minus}, {"c", Orientation::Plus}});
  Permutation cycle{1, 2, 0};
  EXPECT_TRUE(equal(permute_indices(permute_indices(permute_indices(t, cycle), cycle), cycle), t));
}

TEST(Tensor, FlipAndConjugate) {
  RT s = RT::scalar(q(7));
  EXPECT_TRUE(equal(flip_signs(s), s));
  RT d(2, {{"i", Orientation::Plus}}, qs({2, 3}));
  RT fd = flip_signs(d);
  EXPECT_EQ(fd.indices()[0].sign, Orientation::Minus);
  EXPECT_EQ(fd.entries(), d.entries());
  EXPECT_TRUE(equal(flip_signs(fd), d));
  EXPECT_TRUE(equal(conjugate_entries(d), d));

  using CT = LabeledTensor<Complex>;
  CT z(1, {{"i", Orientation::Plus}}, {Complex(1, 2)});
  EXPECT_EQ(conjugate_entries(z).entries()[0], Complex(1, -2));
  EXPECT_TRUE(equal(conjugate_entries(conjugate_entries(z)), z));
}

TEST(Tensor, Equality) {
  using CT = LabeledTensor<Complex>;
  CT a(2, {{"i", Orientation::Plus}, {"j", Orientation::Plus}}, {1.0, 0.0, 0.0, 1.0});
  CT b(2, {{"i", Orientation::Plus}, {"j", Orientation::Plus}}, {1.0, 1e-12, 0.0, 1.0});
  EXPECT_TRUE(equal(a, a));
  EXPECT_TRUE(equal(a, b, 1e-9));
  EXPECT_FALSE(equal(a, b, 1e-15));
  CT swapped(2, {{"j", Orientation::Plus}, {"i", Orientation::Plus}}, {1.0, 0.0, 0.0, 1.0});
  EXPECT_FALSE(equal(a, swapped));
  CT flipped(2, {{"i", Orientation::Minus}, {"j", Orientation::Plus}}, {1.0, 0.0, 0.0, 1.0});
  EXPECT_FALSE(equal(a, flipped));
}

// contract(t1 ⊗ t2, a, b) agrees with a direct index-loop sum for every pair
// of positions on random tensors of rank ≤ 3 and dimension ≤ 3.
TEST(TensorProperty, ContractProductMatchesIndexLoopOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t dim = 1 + rng() % 3;
    std::size_t r1 = 1 + rng() % 3, r2 = 1 + rng() % 3;
    std::vector<SignedIndex> i1, i2;
    for (std::size_t k = 0; k < r1; ++k)
      i1.push_back({"x" + std::to_string(k), rng() % 2 ? Orientation::Plus : Orientation::Minus});
    for (std::size_t k = 0; k < r2; ++k)
      i2.push_back({"y" + std::to_string(k), rng() % 2 ? Orientation::Plus : Orientation::Minus});
    RT t1 = tqft2d::testing::random_tensor(rng, dim, i1);
    RT t2 = tqft2d::testing::random_tensor(rng, dim, i2);
    std::size_t a = rng() % r1, b = rng() % r2;
    t2 = with_signs(t2, [&] {
      std::vector<Orientation> s;
      for (std::size_t k = 0; k < r2; ++k) s.push_back(k == b ? -i1[a].sign : i2[k].sign);
      return s;
    }());
    RT got = contract(tensor_product(t1, t2), i1[a].label, t2.indices()[b].label);
    RT want = tqft2d::testing::oracle_pair_contract(t1, a, t2, b);
    ASSERT_TRUE(equal(got, want)) << "trial " << trial;

    // Same through the pairwise kernel and the network driver.
    std::pair<std::size_t, std::size_t> link{a, b};
    EXPECT_TRUE(equal(contract_between(t1, t2, std::span(&link, 1)), want));
    EXPECT_TRUE(equal(contract_network<Rational>({t1, t2}, {{i1[a].label, t2.indices()[b].label}}), want));
  }
}

TEST(TensorProperty, FlipAndConjugateCommuteAndAreInvolutions) {
  std::mt19937_64 rng(3);
  using CT = LabeledTensor<Complex>;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rank = rng() % 4;
    std::vector<SignedIndex> idx;
    for (std::size_t k = 0; k < rank; ++k)
      idx.push_back({"l" + std::to_string(k), rng() % 2 ? Orientation::Plus : Orientation::Minus});
    auto t = CT::zeros(2, idx);
    for (auto& e : t.entries()) e = Complex(static_cast<double>(rng() % 7) - 3, static_cast<double>(rng() % 7) - 3);
    EXPECT_TRUE(equal(flip_signs(conjugate_entries(t)), conjugate_entries(flip_signs(t))));
    EXPECT_TRUE(equal(flip_signs(flip_signs(t)), t));
    EXPECT_TRUE(equal(conjugate_entries(conjugate_entries(t)), t));
  }
}

// Applying perm1 then perm2 equals applying the composite k -> perm1[perm2[k]].
TEST(TensorProperty, PermutationIsGroupAction) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rank = 1 + rng() % 4;
    std::vector<SignedIndex> idx;
    for (std::size_t k = 0; k < rank; ++k) idx.push_back({"l" + std::to_string(k), Orientation::Plus});
    RT t = tqft2d::testing::random_tensor(rng, 2, idx);
    Permutation p1(rank), p2(rank), composite(rank);
    std::iota(p1.begin(), p1.end(), 0u);
    std::iota(p2.begin(), p2.end(), 0u);
    std::shuffle(p1.begin(), p1.end(), rng);
    std::shuffle(p2.begin(), p2.end(), rng);
    for (std::size_t k = 0; k < rank; ++k) composite[k] = p1[p2[k]];
    EXPECT_TRUE(equal(permute_indices(permute_indices(t, p1), p2), permute_indices(t, composite)));
  }
}

// Greedy network order versus contracting pair by pair on the full product.
TEST(TensorProperty, NetworkOrderDoesNotMatter) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    // A ring of three rank-3 tensors with one dangling leg each.
    std::vector<RT> ts;
    for (int k = 0; k < 3; ++k) {
      std::string s = std::to_string(k);
      ts.push_back(tqft2d::testing::random_tensor(
          rng, 2, {{"o" + s, Orientation::Plus}, {"l" + s, Orientation::Plus}, {"r" + s, Orientation::Minus}}));
    }
    std::vector<LabelPair> pairs{{"l0", "r1"}, {"l1", "r2"}, {"l2", "r0"}};
    RT greedy = contract_network(ts, pairs);
    RT full = tensor_product(tensor_product(ts[0], ts[1]), ts[2]);
    for (const auto& [a, b] : pairs) full = contract(full, a, b);
    EXPECT_TRUE(equal(canonical(greedy), canonical(full)));
  }
}
