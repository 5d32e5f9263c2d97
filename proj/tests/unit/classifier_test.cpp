#include <gtest/gtest.h>

#include <algorithm>

#include "support/fixtures.hpp"
#include "toricd/classifier.hpp"
#include "toricd/errors.hpp"

namespace toricd {
namespace {

RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

class PlaneClassifier : public ::testing::Test {
 protected:
  SemigroupEngine S{build_toric(testing::plane_fixture())};
  ParameterClassifier C{S};
  std::size_t face(const char* name) { return *S.toric().face_by_name(name); }
  std::vector<RatVector> members(const RatVector& a, const char* f) { return C.e_tau(a, face(f)).members; }
};

TEST_F(PlaneClassifier, ETauExamples) {
  for (const auto& f : S.toric().faces()) {
    ESet e = C.e_tau(rv({0, 0}), f.id);
    ASSERT_EQ(e.members.size(), 1u);
    EXPECT_TRUE(is_zero(e.members[0]));
  }
  ESet full = C.e_tau(rv({1, 1}), face("sigma3"));
  EXPECT_TRUE(full.full());
  EXPECT_EQ(full.members, (std::vector<RatVector>{rv({0, 0}), rv({1, 0})}));
  EXPECT_EQ(members(rv({1, 0}), "sigma3"), (std::vector<RatVector>{rv({1, 0})}));
}

TEST_F(PlaneClassifier, SignatureExamples) {
  auto zero = std::vector<RatVector>{rv({0, 0})};
  EXPECT_EQ(members(rv({0, 0}), "sigma2"), zero);
  EXPECT_EQ(members(rv({0, 0}), "sigma3"), zero);
  EXPECT_EQ(members(rv({0, 0}), "origin"), zero);
  EXPECT_EQ(members(rv({0, -1}), "sigma2"), zero);
  EXPECT_TRUE(members(rv({0, -1}), "sigma3").empty());
  EXPECT_TRUE(members(rv({0, -1}), "origin").empty());
  RatVector half = rv({Rational(1, 2), 0});
  EXPECT_TRUE(C.e_tau(half, face("sigma3")).defined);
  EXPECT_TRUE(C.e_tau(half, face("sigma2")).defined);
  EXPECT_FALSE(C.e_tau(half, face("origin")).defined);
  EXPECT_TRUE(C.e_tau(half, face("cone")).defined);
}

TEST_F(PlaneClassifier, OrderAndEquivalence) {
  EXPECT_TRUE(C.preceq(rv({0, 0}), rv({0, 0})));
  EXPECT_TRUE(C.preceq(rv({0, 0}), rv({1, 1})));
  EXPECT_FALSE(C.preceq(rv({0, 0}), rv({Rational(1, 2), 0})));
  EXPECT_TRUE(C.equivalent(rv({1, 1}), rv({3, 1})));
  EXPECT_FALSE(C.equivalent(rv({0, 0}), rv({1, 0})));
  EXPECT_FALSE(C.equivalent(rv({2, 0}), rv({Rational(5, 2), 0})));
}

TEST_F(PlaneClassifier, FaceSetAndExtreme) {
  EXPECT_EQ(C.face_set(rv({0, 0})).size(), S.toric().faces().size());
  for (auto f : C.face_set(rv({0, -1}))) {
    const auto& cf = S.toric().faces()[f].containing_facets;
    EXPECT_EQ(std::find(cf.begin(), cf.end(), *S.toric().facet_by_name("sigma3")), cf.end());
  }
  EXPECT_TRUE(C.is_extreme(rv({1, 1})));
  EXPECT_FALSE(C.is_extreme(rv({0, 0})));
}

TEST_F(PlaneClassifier, ClassifyCosets) {
  auto zero = C.classify_coset(rv({0, 0}), Window{Integer(24)});
  EXPECT_TRUE(zero.stable);
  EXPECT_EQ(zero.classes.size(), 8u);
  auto half = C.classify_coset(rv({Rational(1, 2), 0}), Window{Integer(24)});
  EXPECT_EQ(half.classes.size(), 8u);
  for (const auto& k : zero.classes)
    for (const auto& m : k.members) EXPECT_EQ(C.signature(m), k.signature);
}

TEST_F(PlaneClassifier, LambdaSets) {
  Window W{Integer(12)};
  auto even = C.lambda_set(rv({0, 0}), IntVector{2, 0}, W);
  ASSERT_FALSE(even.empty());
  for (const auto& p : even) {
    EXPECT_EQ(p[1], 0);
    EXPECT_GE(p[0], 0);
    EXPECT_TRUE(p[0].get_den() == 1 && mpz_even_p(p[0].get_num_mpz_t()));
  }
  EXPECT_TRUE(C.lambda_set(rv({0, 0}), IntVector{1, 0}, W).empty());
  auto cls = C.lambda_set(rv({0, 0}), IntVector{0, 0}, W);
  for (const auto& p : cls) EXPECT_TRUE(C.equivalent(p, rv({0, 0})));
}

TEST(PrismClassifier, FaceSetAndExtreme) {
  SemigroupEngine S(build_toric(testing::prism_fixture()));
  ParameterClassifier C(S);
  RatVector a = rv({0, 1, 0});
  EXPECT_TRUE(C.is_extreme(a));
  auto fs = C.face_set(a);
  const ToricData& T = S.toric();
  auto has = [&](const char* n) { return std::find(fs.begin(), fs.end(), *T.face_by_name(n)) != fs.end(); };
  EXPECT_TRUE(has("sigma123"));
  EXPECT_TRUE(has("sigma456"));
  EXPECT_TRUE(has("cone"));
  EXPECT_FALSE(has("sigma14"));
  EXPECT_FALSE(has("sigma36"));
}

TEST(SquareClassifier, Translation) {
  SemigroupEngine S(build_toric(testing::square_fixture()));
  ParameterClassifier C(S);
  RatVector alpha = rv({Rational(1, 3), 0, Rational(-1, 3)});
  EXPECT_TRUE(C.translate_check(alpha, rv({0, 0, 0})));
  EXPECT_TRUE(C.translate_check(alpha, rv({1, 0, -1})));
  EXPECT_THROW(C.translate_check(alpha, rv({1, 0, 0})), ToricError);
}

TEST(SimplicialClassifier, SaturatedClassesFollowSignPatterns) {
  // Saturated, simplicial: E-sets are decided by facet signs alone.
  SemigroupEngine S(build_toric(IntMatrix{{1, 0, 1}, {0, 1, 1}}));
  ParameterClassifier C(S);
  auto cc = C.classify_coset(rv({0, 0}), Window{Integer(8)});
  EXPECT_EQ(cc.classes.size(), 4u);
  for (const auto& k : cc.classes)
    for (const auto& m : k.members) {
      const auto& r = k.representative;
      for (std::size_t s = 0; s < 2; ++s)
        EXPECT_EQ(S.toric().facet_value(s, m) >= 0, S.toric().facet_value(s, r) >= 0);
    }
}

}  // namespace
}  // namespace toricd
