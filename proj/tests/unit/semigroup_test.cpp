#include <gtest/gtest.h>

#include <random>

#include "oracles/bfs_membership.hpp"
#include "support/fixtures.hpp"
#include "toricd/errors.hpp"
#include "toricd/numerical_semigroup.hpp"
#include "toricd/semigroup.hpp"

namespace toricd {
namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

class PlaneEngine : public ::testing::Test {
 protected:
  SemigroupEngine S{build_toric(testing::plane_fixture())};
  std::size_t face(const char* name) { return *S.toric().face_by_name(name); }
};

class PrismEngine : public ::testing::Test {
 protected:
  SemigroupEngine S{build_toric(testing::prism_fixture())};
};

TEST_F(PlaneEngine, MembershipExamples) {
  auto c = S.member(iv({1, 0}));
  EXPECT_FALSE(c.member);
  EXPECT_EQ(c.obstruction, Obstruction::NoRepresentation);
  for (std::size_t j = 0; j < 4; ++j) {
    auto m = S.member(S.toric().column(j));
    ASSERT_TRUE(m.member);
    EXPECT_EQ(S.toric().matrix() * m.u, S.toric().column(j));
  }
  EXPECT_EQ(S.member(iv({0, -1})).obstruction, Obstruction::NegativeFacetValue);
  EXPECT_TRUE(S.member(iv({0, 0})).member);
}

TEST_F(PrismEngine, GapObstruction) {
  auto c = S.member(iv({1, 1, 0}));
  EXPECT_FALSE(c.member);
  EXPECT_EQ(c.obstruction, Obstruction::FacetGap);
  ASSERT_TRUE(c.facet);
  EXPECT_EQ(S.toric().facets()[*c.facet].name, "sigma14");
}

TEST_F(PlaneEngine, MembershipModFace) {
  EXPECT_FALSE(S.in_semigroup_mod_face(iv({-1, 0}), face("sigma3")));
  EXPECT_FALSE(S.in_semigroup_mod_face(iv({1, 0}), face("sigma3")));
  EXPECT_TRUE(S.in_semigroup_mod_face(iv({2, 0}), face("sigma3")));
  for (const auto& f : S.toric().faces()) EXPECT_TRUE(S.in_semigroup_mod_face(iv({0, 0}), f.id));
  auto c = S.member_mod_face(iv({2, 0}), face("sigma3"));
  ASSERT_TRUE(c.member);
  EXPECT_EQ(add(S.toric().matrix() * c.u, S.toric().matrix() * c.c), iv({2, 0}));
}

TEST(NumericalSemigroup, FacetSemigroups) {
  SemigroupEngine P(build_toric(testing::prism_fixture()));
  const auto& s14 = P.facet_semigroup(*P.toric().facet_by_name("sigma14"));
  EXPECT_EQ(s14.gaps(), ints({1}));
  EXPECT_EQ(s14.frobenius(), 1);
  SemigroupEngine Q(build_toric(testing::plane_fixture()));
  EXPECT_TRUE(Q.facet_semigroup(0).gaps().empty());
  EXPECT_TRUE(Q.facet_semigroup(1).gaps().empty());
}

TEST(NumericalSemigroup, Classic) {
  NumericalSemigroup s(ints({0, 6, 9, 20}));
  EXPECT_EQ(s.frobenius(), 43);
  EXPECT_EQ(s.gaps().size(), 22u);
  EXPECT_TRUE(s.contains(Integer(44)));
  EXPECT_FALSE(s.contains(Rational(1, 2)));
  EXPECT_THROW(NumericalSemigroup(ints({2, 4})), ToricError);
}

TEST_F(PlaneEngine, OmegaExamples) {
  Window W{Integer(8)};
  EXPECT_TRUE(omega(S, S.toric().column(0), W).empty());
  auto pts = omega(S, iv({1, 0}), W);
  ASSERT_FALSE(pts.empty());
  EXPECT_EQ(pts.front(), iv({0, 0}));
  auto far = omega(S, iv({0, -100}), W);
  std::size_t members = 0;
  for (const auto& p : saturation_window(S.toric(), W.bound)) members += S.in_semigroup(p);
  EXPECT_EQ(far.size(), members);
}

TEST_F(PlaneEngine, HolesAndStructure) {
  auto h = holes(S, Window{Integer(16)});
  ASSERT_EQ(h.components.size(), 1u);
  EXPECT_EQ(h.components[0].base, iv({1, 0}));
  EXPECT_EQ(S.toric().faces()[h.components[0].face].name, "sigma3");
  for (const auto& p : h.points) {
    EXPECT_EQ(p[1], 0);
    EXPECT_EQ(p[0] % 2, 1);
  }
  auto sc = is_scored(S, default_window(S.toric()));
  EXPECT_FALSE(sc.scored_on_window);
  ASSERT_TRUE(sc.witness);
  EXPECT_EQ(*sc.witness, iv({1, 0}));
  EXPECT_TRUE(satisfies_S2(S, default_window(S.toric())).holds_on_window);
  auto c0 = check_C0(S);
  EXPECT_FALSE(c0.holds);
  ASSERT_TRUE(c0.face);
  EXPECT_EQ(S.toric().faces()[*c0.face].name, "sigma3");
  EXPECT_EQ(c0.index, 2);
}

TEST_F(PrismEngine, HolesAndStructure) {
  Window W{Integer(20)};
  auto h = holes(S, W);
  ASSERT_EQ(h.components.size(), 1u);
  EXPECT_EQ(h.components[0].base, iv({0, 1, 0}));
  EXPECT_EQ(S.toric().faces()[h.components[0].face].name, "sigma14");
  EXPECT_TRUE(is_scored(S, W).scored_on_window);
  EXPECT_TRUE(satisfies_S2(S, W).holds_on_window);
  EXPECT_TRUE(check_C0(S).holds);
}

TEST(Structure, SaturatedHasNoHoles) {
  SemigroupEngine S(build_toric(testing::square_fixture()));
  Window W = default_window(S.toric());
  EXPECT_TRUE(holes(S, W).points.empty());
  EXPECT_TRUE(is_scored(S, W).scored_on_window);
  EXPECT_TRUE(check_C0(S).holds);
}

TEST(Structure, IsolatedHoleFailsS2) {
  SemigroupEngine S(build_toric(IntMatrix{{2, 3, 0, 1}, {0, 0, 1, 1}}));
  Window W = default_window(S.toric());
  auto h = holes(S, W);
  ASSERT_FALSE(h.points.empty());
  auto s2 = satisfies_S2(S, W);
  EXPECT_FALSE(s2.holds_on_window);
  ASSERT_TRUE(s2.witness);
  EXPECT_FALSE(S.in_semigroup(*s2.witness));
}

TEST_F(PlaneEngine, OmegaClosureIsLowerDimensional) {
  Window W{Integer(12)};
  EXPECT_TRUE(omega_closure(S, S.toric().column(2), W).empty());
  auto comps = omega_closure(S, iv({-2, 0}), W);
  ASSERT_FALSE(comps.empty());
  for (const auto& c : comps) EXPECT_LE(c.flat.dim(), 1u);
}

TEST_F(PrismEngine, OmegaClosureContainsShiftedSlab) {
  Window W{Integer(12)};
  auto comps = omega_closure(S, iv({0, -2, 0}), W);
  ASSERT_FALSE(comps.empty());
  bool slab = false;
  for (const auto& c : comps) {
    EXPECT_LT(c.flat.dim(), 3u);
    for (const auto& [n, k] : c.flat.equations())
      if (c.flat.dim() == 2 && n == iv({0, 1, 0})) slab = true;
  }
  EXPECT_TRUE(slab);
}

TEST(SemigroupOracle, FixturesAgreeWithBfs) {
  for (const IntMatrix& A : {testing::plane_fixture(), testing::prism_fixture(), testing::square_fixture()}) {
    SemigroupEngine S(build_toric(A));
    Integer bound(15);
    auto box = oracle::semigroup_box(S.toric(), bound);
    for (const auto& p : saturation_window(S.toric(), bound)) EXPECT_EQ(S.in_semigroup(p), box.count(p) > 0) << format_point(p);
  }
}

class SemigroupProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{99173};
};

TEST_F(SemigroupProperties, AdditivityAndFacetValues) {
  SemigroupEngine S(build_toric(testing::prism_fixture()));
  auto pts = saturation_window(S.toric(), Integer(8));
  std::vector<IntVector> members;
  for (const auto& p : pts)
    if (S.in_semigroup(p)) members.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const IntVector& a = members[pick(rng)];
    const IntVector& b = members[pick(rng)];
    EXPECT_TRUE(S.in_semigroup(add(a, b)));
    for (std::size_t s = 0; s < S.toric().facets().size(); ++s)
      EXPECT_TRUE(S.facet_semigroup(s).contains(S.toric().facet_value(s, a)));
  }
}

TEST_F(SemigroupProperties, MembershipImpliesModFace) {
  for (const IntMatrix& A : {testing::plane_fixture(), testing::prism_fixture()}) {
    SemigroupEngine S(build_toric(A));
    for (const auto& p : saturation_window(S.toric(), Integer(6))) {
      bool m = S.in_semigroup(p);
      for (const auto& f : S.toric().faces()) {
        if (m) EXPECT_TRUE(S.in_semigroup_mod_face(p, f.id));
        if (f.id == S.toric().full_face()) EXPECT_TRUE(S.in_semigroup_mod_face(p, f.id));
      }
    }
  }
}

TEST_F(SemigroupProperties, OmegaInvariants) {
  SemigroupEngine S(build_toric(testing::plane_fixture()));
  Window W{Integer(8)};
  std::uniform_int_distribution<long> c(-4, 4);
  for (int t = 0; t < 200; ++t) {
    IntVector a = iv({c(rng), c(rng)});
    auto pts = omega(S, a, W);
    for (const auto& b : pts) {
      EXPECT_TRUE(S.in_semigroup(b));
      EXPECT_FALSE(S.in_semigroup(add(a, b)));
      for (std::size_t s = 0; s < 2; ++s) EXPECT_LE(S.toric().facet_value(s, b), W.bound);
    }
    if (S.in_semigroup(a)) EXPECT_TRUE(pts.empty());
  }
}

TEST_F(SemigroupProperties, ScoredWitnessIsRechecked) {
  int refuted = 0;
  for (int t = 0; t < 40; ++t) {
    auto T = testing::random_toric(rng, 2, 4, 0, 3);
    if (!T) continue;
    SemigroupEngine S(*T);
    auto r = is_scored(S, default_window(S.toric()));
    if (r.scored_on_window) continue;
    ++refuted;
    ASSERT_TRUE(r.witness);
    EXPECT_FALSE(S.in_semigroup(*r.witness));
    for (std::size_t s = 0; s < S.toric().facets().size(); ++s)
      EXPECT_TRUE(S.facet_semigroup(s).contains(S.toric().facet_value(s, *r.witness)));
  }
  EXPECT_GT(refuted, 0);
}

}  // namespace
}  // namespace toricd
