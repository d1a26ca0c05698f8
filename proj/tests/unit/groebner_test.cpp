#include "helpers.hpp"
#include "reembed/ideal.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace reembed;
using reembed::testing::P;
using reembed::testing::Ps;

namespace {

GradedRing ring_awxy() { return GradedRing({"a", "w", "x", "y"}, {0, 1, 2, 2}); }

Ideal ideal_awxy() {
  const auto r = ring_awxy();
  return Ideal(Ps(r, {"3*x - a*y", "y - a^3*y", "a*x - a^2*w^2"}), r.size());
}

GradedRing ring_45() { return GradedRing({"a", "x", "y", "z", "v", "w"}, {0, 1, 1, 1, 2, 2}); }

Ideal ideal_45() {
  const auto r = ring_45();
  return Ideal(Ps(r, {"x - a*y", "y - a*z", "z - a*x", "v - a^3*w - a*x*z", "v - w - a*w + a*y*z", "a^4*w"}),
               r.size());
}

}  // namespace

TEST(Groebner, LexEliminatesToQuadratic) {
  const auto r = GradedRing::standard({"x", "y"});
  const auto gb = groebner_basis(Ps(r, {"x - y^2", "y - x"}), TermOrder::lex(2));
  ASSERT_EQ(gb.size(), 2U);
  EXPECT_EQ(gb[0], P(r, "y^2 - y"));
  EXPECT_EQ(gb[1], P(r, "x - y"));
}

TEST(Groebner, PrincipalIsMonic) {
  const auto r = GradedRing::standard({"x", "y"});
  const auto gb = groebner_basis(Ps(r, {"3*x*y - 6*y^2"}), TermOrder::degrevlex(2));
  ASSERT_EQ(gb.size(), 1U);
  EXPECT_EQ(gb[0], P(r, "x*y - 2*y^2"));
  EXPECT_TRUE(groebner_basis(std::vector<Polynomial>{}, TermOrder::degrevlex(2)).empty());
}

TEST(Groebner, NormalFormMembership) {
  const auto r = ring_awxy();
  const auto I = ideal_awxy();
  EXPECT_TRUE(I.contains(P(r, "a^5*w^2 - a^2*w^2")));
  for (const auto& g : I.generators()) EXPECT_TRUE(I.contains(g));
  EXPECT_FALSE(I.contains(P(r, "1")));
  EXPECT_FALSE(I.contains(P(r, "w")));
}

TEST(Groebner, HomogeneousInputGivesHomogeneousBasis) {
  const auto r = ring_45();
  for (const auto& g : ideal_45().groebner()) EXPECT_TRUE(r.is_homogeneous(g));
}

TEST(Groebner, ModuleContainsUnitVectors) {
  const auto r = GradedRing::standard({"a", "b"});
  const std::vector<PolyVector<Rational>> cols = {
      {P(r, "1"), P(r, "-a^3")}, {P(r, "1"), P(r, "-a*b - 1")}, {P(r, "0"), P(r, "a^2")}};
  const ModuleLifter<Rational> lifter(cols, 2, TermOrder::degrevlex(2));
  for (const auto& e : {PolyVector<Rational>{P(r, "1"), P(r, "0")}, PolyVector<Rational>{P(r, "0"), P(r, "1")}}) {
    const auto c = lifter.lift(e);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(lifter.combine(*c), e);
  }
  // printed combinations are alternative valid answers
  EXPECT_EQ(lifter.combine({P(r, "1"), P(r, "0"), P(r, "a")}), (PolyVector<Rational>{P(r, "1"), P(r, "0")}));
  EXPECT_EQ(lifter.combine({P(r, "-a*b + 1"), P(r, "a*b - 1"), P(r, "-a^2*b + b^2 + a")}),
            (PolyVector<Rational>{P(r, "0"), P(r, "1")}));
}

TEST(Groebner, LiftOfGeneratorAndNonMember) {
  const auto r = GradedRing::standard({"x", "y"});
  const std::vector<PolyVector<Rational>> gens = {{P(r, "x"), P(r, "y")}, {P(r, "y"), P(r, "x")}};
  const ModuleLifter<Rational> lifter(gens, 2, TermOrder::degrevlex(2));
  const auto c = lifter.lift(gens[0]);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(lifter.combine(*c), gens[0]);
  EXPECT_FALSE(lifter.lift({P(r, "1"), P(r, "0")}).has_value());
}

TEST(Groebner, RandomLiftsReexpand) {
  std::mt19937 rng(3);
  const auto r = GradedRing::standard({"a", "b", "c"});
  const std::vector<std::string> pool = {"a", "b", "c", "a*b - 1", "a^2 + c", "b*c", "1 + a", "c^2 - a", "0"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<PolyVector<Rational>> gens;
    for (int j = 0; j < 3; ++j) gens.push_back({P(r, pool[pick(rng)]), P(r, pool[pick(rng)])});
    std::vector<Polynomial> coeffs;
    for (int j = 0; j < 3; ++j) coeffs.push_back(P(r, pool[pick(rng)]));
    const ModuleLifter<Rational> lifter(gens, 2, TermOrder::degrevlex(3));
    const auto v = lifter.combine(coeffs);
    const auto c = lifter.lift(v);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(lifter.combine(*c), v);
  }
}

TEST(Groebner, SyzygiesOfUnimodularRow) {
  const auto r = GradedRing::standard({"x"});
  const auto syz = syzygies<Rational>({{P(r, "1 + x^2")}, {P(r, "x")}}, 1, TermOrder::degrevlex(1));
  ASSERT_EQ(syz.size(), 1U);
  const auto& s = syz[0];
  // proportional to (-x, 1 + x^2)
  EXPECT_EQ(s[0] * P(r, "1 + x^2") + s[1] * P(r, "x"), Polynomial());
  EXPECT_TRUE(s[1] == P(r, "1 + x^2") || s[1] == P(r, "-1 - x^2"));
}

TEST(Groebner, SyzygiesTrivialAndRepeated) {
  const auto r = GradedRing::standard({"x", "y"});
  EXPECT_TRUE(syzygies<Rational>({{P(r, "1"), P(r, "0")}, {P(r, "0"), P(r, "1")}}, 2, TermOrder::degrevlex(2)).empty());
  const PolyVector<Rational> v{P(r, "x"), P(r, "y^2")};
  const auto syz = syzygies<Rational>({v, v}, 2, TermOrder::degrevlex(2));
  ASSERT_EQ(syz.size(), 1U);
  EXPECT_EQ(syz[0][0], -syz[0][1]);
  EXPECT_TRUE(syz[0][0].is_constant());
}

TEST(Groebner, EliminationOracle) {
  const auto r = ring_awxy();
  const auto I = ideal_awxy();
  const auto E = eliminate_oracle(I, {2, 3});
  EXPECT_TRUE(ideal_equal(E, Ideal({P(r, "a^5*w^2 - a^2*w^2")}, r.size())));
  EXPECT_TRUE(ideal_equal(eliminate_oracle(I, {}), I));

  const auto r5 = ring_45();
  const auto E5 = eliminate_oracle(ideal_45(), {1, 2, 4, 5});
  EXPECT_TRUE(ideal_equal(E5, Ideal(Ps(r5, {"a^3*z - z", "z^2"}), r5.size())));
}

TEST(Groebner, EliminationIndependentOfGeneratorOrder) {
  const auto r5 = ring_45();
  auto gens = ideal_45().generators();
  const auto reference = eliminate_oracle(ideal_45(), {1, 2, 4, 5});
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
  int perms = 0;
  do {
    if (perms++ % 97 != 0) continue;
    const auto E = eliminate_oracle(Ideal(gens, r5.size()), {1, 2, 4, 5});
    EXPECT_EQ(E.generators(), reference.generators());
  } while (std::next_permutation(gens.begin(), gens.end(),
                                 [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); }) &&
           perms < 720);
}

TEST(Groebner, KrullDimension) {
  EXPECT_EQ(krull_dimension(Ideal({}, 4)), 4U);
  EXPECT_EQ(krull_dimension(ideal_45()), 1U);
  const auto r = GradedRing::standard({"a", "z"});
  EXPECT_EQ(krull_dimension(Ideal(Ps(r, {"a^3*z - z", "z^2"}), 2)), 1U);
  EXPECT_FALSE(krull_dimension(Ideal(Ps(r, {"a*z - 1", "z"}), 2)).has_value());
}
