#include <gtest/gtest.h>

#include "property/properties.hpp"

namespace toricd::testing {
namespace {

TEST(Properties, ETauOfZero) {
  std::mt19937 rng(11);
  auto r = prop_etau_zero(rng, 200);
  EXPECT_TRUE(r.passed(200)) << r.first_failure;
}

TEST(Properties, MembershipThroughETau) {
  auto insts = fixture_instances();
  auto r = prop_membership_via_etau(insts, Integer(8));
  EXPECT_TRUE(r.passed(200)) << r.cases << " " << r.first_failure;
}

TEST(Properties, ETauBoundsAndMonotonicity) {
  std::mt19937 rng(12);
  auto insts = fixture_instances();
  auto r = prop_etau_bounds(rng, insts, 80);
  EXPECT_TRUE(r.passed(200)) << r.first_failure;
}

TEST(Properties, OrderAxioms) {
  std::mt19937 rng(13);
  auto insts = fixture_instances();
  auto r = prop_order(rng, insts, 80);
  EXPECT_TRUE(r.passed(200)) << r.first_failure;
}

TEST(Properties, FourierMotzkinMatchesVertices) {
  std::mt19937 rng(14);
  auto r = prop_fourier_motzkin(rng, 300);
  EXPECT_TRUE(r.passed(200)) << r.first_failure;
}

TEST(Properties, MembershipMatchesBfsOnRandomMatrices) {
  std::mt19937 rng(15);
  auto insts = random_instances(rng, 20);
  auto r = prop_membership_oracle(insts, Integer(12));
  EXPECT_TRUE(r.passed(1)) << r.first_failure;
}

TEST(Properties, AnnZeroMatchesCriterion) {
  std::mt19937 rng(16);
  PropertyOutcome out;
  for (const auto& I : fixture_instances()) {
    for (int t = 0; t < 70; ++t) {
      RatVector a = t % 2 ? random_rational(rng, I.T().dim(), 4, 3) : random_integral(rng, I.T().dim(), 4);
      bool z = ann_is_zero(*I.classifier, a);
      bool rpos = rpos_nonempty(*I.engine, a);
      bool ok = z == (I.classifier->is_extreme(a) && rpos);
      if (I.T().simplicial()) ok = ok && rpos;
      out.check(ok, format_point(a));
    }
  }
  EXPECT_TRUE(out.passed(200)) << out.first_failure;
}

TEST(Properties, PreceqAvoidsOmegaClosure) {
  std::mt19937 rng(17);
  Instance I(plane_fixture());
  Window W{Integer(10)};
  std::size_t checked = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    RatVector a = random_integral(rng, 2, 3);
    RatVector b = random_integral(rng, 2, 3);
    if (!I.classifier->preceq(a, b)) continue;
    ++checked;
    IntVector diff = to_integer(sub(b, a));
    for (const auto& c : omega_closure(*I.engine, diff, W))
      EXPECT_FALSE(c.flat.contains(a)) << format_point(a) << " " << format_point(b);
  }
  EXPECT_GT(checked, 10u);
}

TEST(Properties, DeepShiftMakesSetsFull) {
  for (const auto& I : fixture_instances()) {
    const ToricData& T = I.T();
    IntVector total(T.dim(), Integer(0));
    for (const auto& c : T.columns()) total = add(total, c);
    std::mt19937 rng(18);
    for (int t = 0; t < 10; ++t) {
      RatVector a = random_integral(rng, T.dim(), 3);
      for (const auto& f : T.faces()) {
        if (!I.classifier->e_tau(a, f.id).defined) continue;
        bool full = false;
        RatVector shifted = a;
        for (int k = 0; k < 12 && !full; ++k) {
          full = I.classifier->e_tau(shifted, f.id).full();
          shifted = add(shifted, to_rat(total));
        }
        EXPECT_TRUE(full) << format_point(a) << " on " << f.name;
      }
    }
  }
}

}  // namespace
}  // namespace toricd::testing
