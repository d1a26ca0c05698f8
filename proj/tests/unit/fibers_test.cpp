#include "helpers.hpp"
#include "reembed/errors.hpp"
#include "reembed/fibers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace reembed;
using reembed::testing::load;
using reembed::testing::P;
using reembed::testing::Ps;
using reembed::testing::vars;

namespace {

FiberPoint random_point(std::mt19937& rng, std::size_t m) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 3);
  FiberPoint p;
  for (std::size_t i = 0; i < m; ++i) p.emplace_back(num(rng), den(rng));
  return p;
}

}  // namespace

TEST(SpecialFiber, LineAtTwoPoints) {
  const auto pf = load("fiber_line.problem");
  const auto I = pf.presentation();
  const auto at1 = special_fiber_ideal(I, pf.points[0]);
  EXPECT_EQ(at1.ring().names(), (std::vector<std::string>{"z"}));
  EXPECT_TRUE(ideal_equal(at1.ideal(), Ideal(Ps(at1.ring(), {"z^2"}), 1)));
  const auto at2 = special_fiber_ideal(I, pf.points[1]);
  EXPECT_TRUE(ideal_equal(at2.ideal(), Ideal(Ps(at2.ring(), {"z"}), 1)));
  EXPECT_THROW(special_fiber_ideal(I, {}), MathError);
}

TEST(SpecialFiber, ZeroPointStripsParameters) {
  const auto pf = load("two_degree_blocks.problem");
  const auto f = special_fiber_ideal(pf.presentation(), {Rational(0)});
  EXPECT_EQ(f.generators(), Ps(f.ring(), {"x", "y", "z", "v", "v - w"}));
}

TEST(GenericFiber, LineIsReduced) {
  const auto pf = load("fiber_line.problem");
  const auto g = generic_fiber_ideal(pf.presentation());
  EXPECT_EQ(g.ring().to_string(), "Q(a)[z]");
  const auto gb = g.ideal().groebner();
  ASSERT_EQ(gb.size(), 1U);
  EXPECT_EQ(gb[0], GenericPolynomial::variable(0));
  const auto r = GradedRing::standard({"x"});
  EXPECT_THROW(generic_fiber_ideal(IdealPresentation(r, Ps(r, {"x"}))), MathError);
}

TEST(GenericFiber, MembershipPersists) {
  const auto pf = load("cvec_abxyz.problem");
  const auto I = pf.presentation();
  SeparatingTuple t;
  t.z = vars(pf.ring, "x,y");
  t.f = pf.tuples.at("F");
  const auto g = fiber_coherent_tuple(I, t);
  EXPECT_EQ(g.z, (std::vector<std::size_t>{0, 1}));
  const auto L = generic_fiber_ideal(I);
  for (const auto& f : g.f) EXPECT_TRUE(L.contains(f));
}

TEST(FiberTuple, TransferAtOne) {
  const auto pf = load("two_degree_blocks.problem");
  const auto I = pf.presentation();
  SeparatingTuple t;
  t.z = vars(pf.ring, "x,y,v,w");
  t.f = pf.tuples.at("Ftilde");
  const auto f1 = fiber_coherent_tuple(I, t, {Rational(1)});
  const auto fr = special_fiber_ideal(I, {Rational(1)}).ring();
  EXPECT_EQ(f1.f, Ps(fr, {"x - z", "y - z", "v - 3*z^2", "w - 2*z^2"}));
  const auto f0 = fiber_coherent_tuple(I, t, {Rational(0)});
  EXPECT_EQ(f0.f, Ps(fr, {"x", "y", "v", "w"}));
  const auto gen = fiber_coherent_tuple(I, t);
  EXPECT_EQ(gen.z, (std::vector<std::size_t>{0, 1, 3, 4}));
  t.f = pf.tuples.at("F");
  EXPECT_THROW(fiber_coherent_tuple(I, t, {Rational(1)}), MathError);
}

TEST(FiberTuple, TransferAtRandomPoints) {
  std::mt19937 rng(7);
  for (const char* name : {"two_degree_blocks.problem", "cvec_abxyz.problem"}) {
    const auto pf = load(name);
    const auto I = pf.presentation();
    SeparatingTuple t;
    if (pf.tuples.count("Ftilde") != 0) {
      t.z = vars(pf.ring, "x,y,v,w");
      t.f = pf.tuples.at("Ftilde");
    } else {
      t.z = vars(pf.ring, "x,y");
      t.f = pf.tuples.at("F");
    }
    const auto m = pf.ring.degree_zero_indices().size();
    for (int k = 0; k < 10; ++k) {
      const auto gamma = random_point(rng, m);
      EXPECT_NO_THROW(fiber_coherent_tuple(I, t, gamma)) << name;
      EXPECT_FALSE(special_fiber_ideal(I, gamma).ideal().is_unit()) << name;
    }
  }
}

TEST(FiberReembedding, SpecialAndGeneric) {
  const auto pf = load("two_degree_blocks.problem");
  const auto I = pf.presentation();
  const auto at1 = fiber_optimal_reembedding(I, {Rational(1)});
  EXPECT_EQ(at1.status, Optimality::OptimalByLinpart);
  ASSERT_EQ(at1.target.ring().size(), 1U);
  EXPECT_TRUE(ideal_equal(at1.target.ideal(), Ideal(Ps(at1.target.ring(), {"z^2"}), 1)));
  const auto gen = fiber_optimal_reembedding(I);
  EXPECT_EQ(gen.target.ring().size(), 0U);
  EXPECT_TRUE(gen.target.generators().empty());
  EXPECT_EQ(gen.z.size(), 5U);

  const auto line = load("fiber_line.problem");
  const auto lg = fiber_optimal_reembedding(line.presentation());
  EXPECT_EQ(lg.target.ring().size(), 0U);
  const auto l1 = fiber_optimal_reembedding(line.presentation(), line.points[0]);
  EXPECT_TRUE(ideal_equal(l1.target.ideal(), Ideal(Ps(l1.target.ring(), {"z^2"}), 1)));
}

TEST(FiberReembedding, ZeroFiberIsIdentity) {
  const GradedRing ring({"a", "x"}, {0, 1});
  const auto r = fiber_optimal_reembedding(IdealPresentation(ring, Ps(ring, {"a*x"})), {Rational(0)});
  EXPECT_TRUE(r.z.empty());
  EXPECT_EQ(r.target.ring().names(), (std::vector<std::string>{"x"}));
}

TEST(Cotangent, LineAtOne) {
  const auto pf = load("fiber_line.problem");
  const auto r = cotangent_report(pf.presentation(), pf.points[0]);
  EXPECT_EQ(r.fiber_cotangent, 1U);
  EXPECT_EQ(r.ambient_cotangent, 2U);
  EXPECT_EQ(r.fiber_dimension, 0U);
  EXPECT_EQ(r.regularity, Regularity::SingularAtPoint);
  EXPECT_EQ(r.fiber_free, false);
  const auto r2 = cotangent_report(pf.presentation(), pf.points[1]);
  EXPECT_EQ(r2.fiber_cotangent, 0U);
  EXPECT_EQ(r2.fiber_free, true);
}

TEST(Cotangent, HyperplaneTrivialIdentity) {
  const GradedRing ring({"a", "x"}, {0, 1});
  const auto r = cotangent_report(IdealPresentation(ring, Ps(ring, {"x"})), {Rational(3)});
  EXPECT_EQ(r.fiber_cotangent, 0U);
  EXPECT_EQ(r.ambient_cotangent, 1U);
  EXPECT_EQ(r.regularity, Regularity::Regular);
}

TEST(Cotangent, RegularFreeFiber) {
  const auto pf = load("free_regular.problem");
  const auto r = cotangent_report(pf.presentation(), pf.points[0]);
  EXPECT_EQ(r.jacobian_rank, 2U);
  EXPECT_EQ(r.regularity, Regularity::Regular);
  EXPECT_EQ(r.fiber_dimension, 3U);
  EXPECT_EQ(r.ambient_dimension, 5U);
  EXPECT_EQ(r.fiber_free, true);
}

TEST(Cotangent, FiberDimensionConstantWhenRegular) {
  std::mt19937 rng(11);
  for (const char* name : {"free_regular.problem", "free_cubic.problem"}) {
    const auto pf = load(name);
    const auto I = pf.presentation();
    const auto m = pf.ring.degree_zero_indices().size();
    const auto dim = krull_dimension(I.ideal());
    ASSERT_TRUE(dim.has_value());
    for (int k = 0; k < 10; ++k) {
      const auto r = cotangent_report(I, random_point(rng, m));
      EXPECT_EQ(r.ambient_cotangent, r.fiber_cotangent + r.parameters);
      if (r.regularity == Regularity::Regular) EXPECT_EQ(*r.fiber_dimension + m, *dim) << name;
    }
  }
}

TEST(FiberReembedding, OriginFiberAgreesWithPositiveOptimal) {
  const auto pf = load("three_best.problem");
  const auto I = pf.presentation();
  const FiberPoint origin{Rational(0), Rational(0)};
  const auto fiber = special_fiber_ideal(I, origin);
  const auto via_fiber = fiber_optimal_reembedding(I, origin);
  const auto direct = positively_graded_optimal(fiber);
  EXPECT_EQ(via_fiber.z.size(), lin_part_space(fiber).dimension);
  EXPECT_EQ(via_fiber.z, direct.z);
  EXPECT_EQ(via_fiber.status, Optimality::OptimalByLinpart);
  // J against the elimination oracle, moved back into K[X+].
  std::vector<long> back(via_fiber.target.ring().size());
  for (std::size_t i = 0, t = 0; i < fiber.ring().size(); ++i) {
    if (std::find(via_fiber.z.begin(), via_fiber.z.end(), i) == via_fiber.z.end()) back[t++] = static_cast<long>(i);
  }
  std::vector<Polynomial> lifted;
  for (const auto& g : via_fiber.target.generators()) lifted.push_back(g.remap(back));
  EXPECT_TRUE(ideal_equal(Ideal(lifted, fiber.ring().size()), eliminate_oracle(fiber.ideal(), via_fiber.z)));
}
