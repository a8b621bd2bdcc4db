#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace tdtest;

TEST(Scalar, ParsesFractionsAndNormalizes) {
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(parse_scalar("-2"), Scalar(-2));
  EXPECT_EQ(to_string(parse_scalar("-10/5") * 0 + parse_scalar("4/2")), "2");
  EXPECT_THROW(parse_scalar("1.5"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar(""), ParseError);
}

TEST(Scalar, SumAgreesComputedTwoWays) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    Scalar a(num(rng), den(rng)), c(num(rng), den(rng));
    a.canonicalize();
    c.canonicalize();
    Scalar direct = a + c;
    Scalar cross(a.get_num() * c.get_den() + c.get_num() * a.get_den(), a.get_den() * c.get_den());
    cross.canonicalize();
    EXPECT_EQ(direct, cross);
  }
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), InvalidPermutation);
  EXPECT_THROW(Permutation({1, 2}), InvalidPermutation);
}

TEST(Permutation, CyclesAndSigns) {
  const auto c = Permutation::from_cycles(3, {{0, 1, 2}});
  EXPECT_EQ(c.images(), (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(c.sign(), 1);
  EXPECT_EQ(Permutation::from_cycles(4, {{0, 3}}).sign(), -1);
  EXPECT_TRUE(compose(c, compose(c, c)).is_identity());
  EXPECT_EQ(Permutation::all(4).size(), 24u);
}

TEST(Permutation, SignIsMultiplicative) {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto n = 1 + rng() % 6;
    const auto a = random_permutation(n, rng), b = random_permutation(n, rng);
    EXPECT_EQ(compose(a, b).sign(), a.sign() * b.sign());
    EXPECT_TRUE(compose(a, a.inverse()).is_identity());
  }
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(RationalMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(RationalMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(RationalMatrix::from_rows({{1, 2}, {2, 4}}, 2)), 1u);
}

TEST(Matrix, KernelExamples) {
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(RationalMatrix(2, 2)).size(), 2u);
  const auto k = kernel_basis(RationalMatrix::from_rows({{1, 1}}, 2));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
}

TEST(Matrix, RankPlusNullityOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(1 + rng() % 7, 1 + rng() % 7, rng);
    const auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), m.cols());
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(rank_of_vectors(k, m.cols()), k.size());
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Matrix, SolveFindsSolutionsOrReportsNone) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(4, 3, rng);
    Vector x{small(rng), small(rng), small(rng)};
    const auto b = m * x;
    const auto y = solve(m, b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m * *y, b);
  }
  EXPECT_FALSE(solve(RationalMatrix::from_rows({{1, 0}, {1, 0}}, 2), Vector{1, 2}).has_value());
}

TEST(DenseTensor, LegPermutationExamples) {
  DenseTensor t({2, 2});
  t.at({0, 1}) = 1;  // e1⊗e2
  const auto swapped = tensor_leg_permute(t, Permutation({1, 0}));
  EXPECT_EQ(swapped.at({1, 0}), 1);
  EXPECT_EQ(tensor_leg_permute(t, Permutation::identity(2)), t);

  std::mt19937 rng(1);
  DenseTensor u({2, 3, 2});
  u.for_each_index([&](const std::vector<std::size_t>& i) { u.at(i) = small(rng); });
  const auto cyc = Permutation::from_cycles(3, {{0, 1, 2}});
  EXPECT_NE(tensor_leg_permute(u, cyc), u);
  EXPECT_EQ(tensor_leg_permute(tensor_leg_permute(tensor_leg_permute(u, cyc), cyc), cyc), u);
  EXPECT_EQ(tensor_leg_permute(tensor_leg_permute(u, cyc), cyc.inverse()), u);
  EXPECT_THROW(tensor_leg_permute(u, Permutation::identity(2)), ShapeError);
}

TEST(DenseTensor, LegPermutationRespectsComposition) {
  std::mt19937 rng(2);
  DenseTensor u({2, 3, 2, 1});
  u.for_each_index([&](const std::vector<std::size_t>& i) { u.at(i) = small(rng); });
  for (int t = 0; t < 30; ++t) {
    const auto s = random_permutation(4, rng), r = random_permutation(4, rng);
    EXPECT_EQ(tensor_leg_permute(tensor_leg_permute(u, r), s), tensor_leg_permute(u, compose(r, s)));
  }
}

TEST(MultilinearMap, PermuteArgsFollowsPrecompositionConvention) {
  std::mt19937 rng(4);
  const BasedSpace x{"X", {"p", "q", "r"}}, y{"Y", {"s", "t"}};
  const auto h = random_map({x, x, x}, y, rng);
  const Permutation s({2, 0, 1});
  // (h∘σ)(x_0, x_1, x_2) = h(x_σ(0), x_σ(1), x_σ(2))
  const auto hs = h.permute_args(s);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        const std::vector<std::size_t> in{a, b, c};
        EXPECT_EQ(hs.value(in), h.value({in[s(0)], in[s(1)], in[s(2)]}));
      }
  for (int t = 0; t < 20; ++t) {
    const auto p = random_permutation(3, rng), q = random_permutation(3, rng);
    EXPECT_EQ(h.permute_args(p).permute_args(q), h.permute_args(compose(q, p)));
  }
  const auto mixed = random_map({x, y}, y, rng);
  EXPECT_EQ(mixed.permute_args(Permutation({1, 0})).domain()[0], y);
  EXPECT_THROW(h.permute_args(Permutation::identity(2)), ShapeError);
}

TEST(MultilinearMap, ComposeInsertsInnerMapAtSlot) {
  std::mt19937 rng(9);
  const BasedSpace x{"X", {"p", "q"}};
  const auto outer = random_map({x, x}, x, rng);
  const auto inner = random_map({x, x}, x, rng);
  const auto c = outer.compose(1, inner);
  ASSERT_EQ(c.arity(), 3u);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) {
        Vector ea(2), eb(2), ed(2);
        ea[a] = 1;
        eb[b] = 1;
        ed[d] = 1;
        EXPECT_EQ(c.value({a, b, d}), outer.apply({ea, inner.apply({eb, ed})}));
      }
}
