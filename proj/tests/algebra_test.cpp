#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace tdtest;

TEST(LieCheck, CorpusPasses) {
  for (const auto& l : lie_corpus()) EXPECT_TRUE(check_lie(l).passed()) << describe(check_lie(l));
}

TEST(LieCheck, SymmetricBracketFailsSkewSymmetry) {
  auto l = sl2();
  auto phi = l.bracket();
  phi.add({2, 1}, 0, 2);  // [f,e] = h instead of −h
  const auto r = check_lie(LieAlgebra("bad", phi));
  const auto* skew = r.find("skew symmetry");
  ASSERT_NE(skew, nullptr);
  EXPECT_FALSE(skew->passed);
  ASSERT_TRUE(skew->witness.has_value());
  EXPECT_EQ(skew->witness->tuple, (std::vector<std::string>{"e", "f"}));
}

TEST(LieCheck, PerturbedConstantFailsJacobiOnly) {
  const auto r = check_lie(sl2(3));
  EXPECT_TRUE(r.find("skew symmetry")->passed);
  const auto* j = r.find("jacobi");
  EXPECT_FALSE(j->passed);
  ASSERT_TRUE(j->witness.has_value());
  EXPECT_EQ(j->witness->tuple.size(), 3u);
}

TEST(LieCheck, ShapeMismatchIsRejected) {
  const BasedSpace l{"L", {"x"}}, m{"M", {"y", "z"}};
  EXPECT_THROW(LieAlgebra("bad", MultilinearMap({l, m}, l)), ShapeError);
}

TEST(ModuleCheck, TrivialAndAdjointPass) {
  for (const auto& l : lie_corpus()) {
    EXPECT_TRUE(check_module(trivial_module(l, BasedSpace::ground())).passed());
    EXPECT_TRUE(check_module(adjoint_module(l)).passed()) << l.name();
  }
}

TEST(ModuleCheck, NonzeroScalarActionOfSl2Fails) {
  const auto l = sl2();
  const auto k = BasedSpace::ground();
  MultilinearMap psi({l.space(), k}, k);
  psi.add({0, 0}, 0, 1);  // h·1 = 1
  const auto r = check_module(LieModule("bad", l, psi));
  EXPECT_FALSE(r.passed());
}

TEST(ModuleCheck, AdjointOfNonJacobiBracketFails) { EXPECT_FALSE(check_module(adjoint_module(sl2(3))).passed()); }

namespace {

// k[x]/(x^2) with the truncated product.
MultilinearMap dual_product() {
  const BasedSpace b{"B", {"1", "x"}};
  MultilinearMap mu({b, b}, b);
  mu.add({0, 0}, 0, 1);
  mu.add({0, 1}, 1, 1);
  mu.add({1, 0}, 1, 1);
  return mu;
}

}  // namespace

TEST(PoissonCheck, ZeroBracketWithDualNumbersPasses) {
  const auto mu = dual_product();
  const PoissonAlgebra p("dual", MultilinearMap(mu.domain(), mu.codomain()), mu);
  EXPECT_TRUE(check_poisson(p).passed());
}

TEST(PoissonCheck, CorpusFixturePassesAndPerturbationFails) {
  const auto c = load({"poisson"});
  for (const auto& [name, p] : c.poisson) EXPECT_TRUE(check_poisson(p).passed()) << name;
  auto broken = load({"poisson-broken"}, false).poisson.at("poisson-broken");
  const auto r = check_poisson(broken);
  EXPECT_TRUE(r.find("jacobi")->passed);
  EXPECT_TRUE(r.find("commutativity")->passed);
  EXPECT_FALSE(r.find("derivation")->passed);
  EXPECT_TRUE(r.find("derivation")->witness.has_value());
}

TEST(PoissonCheck, NonCommutativeProductFails) {
  auto mu = dual_product();
  mu.add({1, 1}, 1, 1);
  mu.add({0, 1}, 0, 1);
  const PoissonAlgebra p("nc", MultilinearMap(mu.domain(), mu.codomain()), mu);
  EXPECT_FALSE(check_poisson(p).find("commutativity")->passed);
}

TEST(AssociativeCheck, DualNumbersPassAndPerturbationFails) {
  EXPECT_TRUE(check_associative(AssociativeAlgebra("dual", dual_product())).passed());
  auto mu = dual_product();
  mu.add({1, 1}, 0, 1);  // x·x = 1
  mu.add({0, 0}, 1, 1);  // 1·1 = 1 + x
  EXPECT_FALSE(check_associative(AssociativeAlgebra("bad", mu)).passed());
}

TEST(AdjointModule, IsEquivalentToJacobiOnRandomSkewBrackets) {
  std::mt19937 rng(21);
  const BasedSpace l{"R", {"p", "q", "r"}};
  int lie = 0;
  for (int t = 0; t < 40; ++t) {
    auto phi = random_skew(l, 2, l, rng);
    if (t % 4 == 0) phi = skew_bracket(l, {{0, 1, 1, t % 8 ? 1 : 2}, {0, 2, 2, -1}});
    const LieAlgebra a("r", phi);
    const bool is_lie = check_lie(a).passed();
    lie += is_lie;
    EXPECT_EQ(check_module(adjoint_module(a)).passed(), is_lie);
  }
  EXPECT_GT(lie, 0);
}
