#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "toricd/primitive.hpp"

namespace toricd {
namespace {

RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

class PlanePrim : public ::testing::Test {
 protected:
  SemigroupEngine S{build_toric(testing::plane_fixture())};
  ParameterClassifier C{S};
};

class PrismPrim : public ::testing::Test {
 protected:
  SemigroupEngine S{build_toric(testing::prism_fixture())};
  ParameterClassifier C{S};
  std::size_t facet(const char* n) { return *S.toric().facet_by_name(n); }
};

TEST_F(PlanePrim, AnnZero) {
  EXPECT_TRUE(ann_is_zero(C, rv({1, 1})));
  EXPECT_FALSE(ann_is_zero(C, rv({0, 0})));
  EXPECT_TRUE(rpos_nonempty(S, rv({0, 0})));
}

TEST_F(PrismPrim, AnnNonzeroAtGapParameter) {
  RatVector a = rv({0, 1, 0});
  EXPECT_FALSE(rpos_nonempty(S, a));
  EXPECT_FALSE(ann_is_zero(C, a));
  EXPECT_TRUE(rpos_nonempty(S, rv({Rational(1, 7), Rational(1, 5), Rational(1, 3)})));
}

TEST_F(PlanePrim, GradedComponents) {
  Window W{Integer(12)};
  auto r0 = ann_graded_component(C, rv({0, 0}), IntVector{0, 0}, W);
  EXPECT_FALSE(r0.zero);
  ASSERT_EQ(r0.components.size(), 1u);
  EXPECT_EQ(r0.components[0].flat.to_string(), "s2=0");
  auto ext = ann_graded_component(C, rv({1, 1}), IntVector{1, 0}, W);
  EXPECT_TRUE(ext.zero);
  auto r1 = ann_graded_component(C, rv({0, 0}), IntVector{1, 0}, W);
  EXPECT_EQ(r1.lambda_points, 0u);
  auto omega_only = omega_closure(S, IntVector{1, 0}, W);
  EXPECT_EQ(r1.components.size(), omega_only.size());
}

TEST_F(PlanePrim, PrimHasTwoEntries) {
  PrimResult p = enumerate_prim(C, default_window(S.toric()));
  ASSERT_EQ(p.entries.size(), 2u);
  int zero = 0;
  bool has_origin = false;
  for (const auto& e : p.entries) {
    zero += e.zero;
    if (!e.zero)
      for (const auto& m : e.merged) has_origin = has_origin || is_zero(m);
  }
  EXPECT_EQ(zero, 1);
  EXPECT_TRUE(has_origin);
}

TEST_F(PrismPrim, PrimIncludesGapParameter) {
  PrimResult p = enumerate_prim(C, default_window(S.toric()));
  EXPECT_EQ(p.entries.size(), 2u);
  bool found = false;
  for (const auto& e : p.entries)
    if (!e.zero)
      for (const auto& m : e.merged) found = found || C.equivalent(m, rv({0, 1, 0}));
  EXPECT_TRUE(found);
}

TEST_F(PlanePrim, StructuralChecks) {
  Window W = default_window(S.toric());
  auto c1 = check_C1(C, W);
  EXPECT_FALSE(c1.holds);
  ASSERT_TRUE(c1.counterexample);
  EXPECT_TRUE(is_zero(*c1.counterexample));
  EXPECT_EQ(check_C2(S).status, C2Status::Holds);
  auto simple = is_simple(S, W);
  EXPECT_FALSE(simple.simple);
  EXPECT_EQ(simple.reason, SimplicityReason::NotScored);
  ASSERT_TRUE(simple.scored_witness);
  EXPECT_EQ(*simple.scored_witness, (IntVector{1, 0}));
  EXPECT_EQ(simple.certification, "exact");
}

TEST_F(PrismPrim, StructuralChecks) {
  Window W{Integer(20)};
  EXPECT_TRUE(check_C1(C, default_window(S.toric())).holds);
  auto c2 = check_C2(S);
  ASSERT_EQ(c2.status, C2Status::Fails);
  std::vector<std::size_t> plus{facet("sigma123"), facet("sigma456")};
  std::vector<std::size_t> minus{facet("sigma14"), facet("sigma36")};
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  EXPECT_EQ(c2.pattern.plus, plus);
  EXPECT_EQ(c2.pattern.minus, minus);
  ASSERT_TRUE(c2.witness);
  EXPECT_EQ(*c2.witness, rv({0, 1, 0}));
  auto simple = is_simple(S, W);
  EXPECT_FALSE(simple.simple);
  EXPECT_EQ(simple.reason, SimplicityReason::C2Fails);
}

TEST(SaturatedPrim, SimpleWithOneEntry) {
  SemigroupEngine S(build_toric(IntMatrix{{1, 0, 1}, {0, 1, 1}}));
  ParameterClassifier C(S);
  Window W = default_window(S.toric());
  EXPECT_EQ(enumerate_prim(C, W).entries.size(), 1u);
  EXPECT_TRUE(check_C1(C, W).holds);
  auto simple = is_simple(S, W);
  EXPECT_TRUE(simple.simple);
  EXPECT_EQ(simple.certification, "window");
}

TEST(SquarePrim, EverySignPatternRealizable) {
  SemigroupEngine S(build_toric(testing::square_fixture()));
  EXPECT_EQ(check_C2(S).status, C2Status::Holds);
}

}  // namespace
}  // namespace toricd
