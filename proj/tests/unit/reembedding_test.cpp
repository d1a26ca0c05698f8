#include "helpers.hpp"
#include "reembed/errors.hpp"
#include "reembed/reembedding.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace reembed;
using reembed::testing::load;
using reembed::testing::P;
using reembed::testing::Ps;
using reembed::testing::vars;

namespace {

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

void expect_eliminates_like_oracle(const IdealPresentation& I, const ReembeddingResult& r) {
  const auto oracle = eliminate_oracle(I.ideal(), r.z);
  std::vector<Polynomial> back;
  for (const auto& g : r.target.generators()) back.push_back(g.substitute(*r.phi.inverse));
  EXPECT_TRUE(ideal_equal(Ideal(back, I.ring().size()), oracle));
}

}  // namespace

TEST(BestTupleInDegree, FirstHitInDegreeTwo) {
  const auto pf = load("three_best.problem");
  const auto I = pf.presentation();
  const auto t = best_tuple_in_degree(I, 2);
  EXPECT_EQ(as_set(t.z), as_set(vars(pf.ring, "x,y")));
  EXPECT_FALSE(separating_violation(I, t.z, t.f).has_value());
  EXPECT_FALSE(separating_violation(I, vars(pf.ring, "y,x"), pf.tuples.at("Fyx")).has_value());
}

TEST(BestTupleInDegree, DegreeOneBlock) {
  const auto pf = load("two_degree_blocks.problem");
  const auto t = best_tuple_in_degree(pf.presentation(), 1);
  EXPECT_EQ(t.z, vars(pf.ring, "x,y"));
  EXPECT_EQ(t.f, Ps(pf.ring, {"x - a^2*z", "y - a*z"}));
}

TEST(BestTupleInDegree, TrivialAndRefusal) {
  const auto r = GradedRing::standard({"x", "y"});
  const IdealPresentation I(r, Ps(r, {"x"}));
  const auto t = best_tuple_in_degree(I, 1);
  EXPECT_EQ(t.z, (std::vector<std::size_t>{0}));
  EXPECT_EQ(t.f, Ps(r, {"x"}));
  try {
    best_tuple_in_degree(I, 3);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSeparatingInDegree);
    EXPECT_EQ(std::string(e.what()), "No separating indeterminates in degree 3");
  }
}

TEST(AllBestTuples, ThreeChoices) {
  const auto pf = load("three_best.problem");
  const auto I = pf.presentation();
  const auto all = all_best_tuples_in_degree(I, 2);
  std::set<std::set<std::size_t>> got;
  for (const auto& t : all) {
    got.insert(as_set(t.z));
    EXPECT_FALSE(separating_violation(I, t.z, t.f).has_value());
  }
  const std::set<std::set<std::size_t>> want = {as_set(vars(pf.ring, "y,x")), as_set(vars(pf.ring, "y,z")),
                                               as_set(vars(pf.ring, "y,w"))};
  EXPECT_EQ(got, want);
  for (const char* name : {"y,z", "y,w"}) {
    const std::string key = std::string("Fy") + name[2];
    EXPECT_FALSE(separating_violation(I, vars(pf.ring, name), pf.tuples.at(key)).has_value()) << key;
  }
}

TEST(AllBestTuples, SymmetricAndSingleton) {
  const auto r = GradedRing::standard({"x", "y"});
  const IdealPresentation sym(r, Ps(r, {"x + y"}));
  const auto all = all_best_tuples_in_degree(sym, 1);
  ASSERT_EQ(all.size(), 2U);
  EXPECT_EQ(all[0].z, (std::vector<std::size_t>{0}));
  EXPECT_EQ(all[1].z, (std::vector<std::size_t>{1}));
  const IdealPresentation one(r, Ps(r, {"x"}));
  const auto single = all_best_tuples_in_degree(one, 1);
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single[0].f, best_tuple_in_degree(one, 1).f);
}

TEST(BestReembedding, TwoDegreeBlocks) {
  const auto pf = load("two_degree_blocks.problem");
  const auto I = pf.presentation();
  const auto r = best_separating_reembedding(I);
  EXPECT_EQ(r.z, vars(pf.ring, "x,y,v,w"));
  EXPECT_EQ(r.tuple.kind, TupleKind::Coherent);
  EXPECT_EQ(r.target.ring().names(), (std::vector<std::string>{"a", "z"}));
  EXPECT_TRUE(ideal_equal(r.target.ideal(), Ideal(Ps(r.target.ring(), {"(a^3-1)*z", "z^2"}), 2)));
  EXPECT_EQ(r.status, Optimality::Inconclusive);
  EXPECT_TRUE(r.phi.preserves_degrees());
  expect_eliminates_like_oracle(I, r);
  // Φ maps every generator of I into J.
  for (const auto& g : I.generators()) EXPECT_TRUE(r.target.contains(r.phi.apply(g)));
}

TEST(BestReembedding, MaximalAmongSupersets) {
  for (const char* name : {"two_degree_blocks.problem", "three_best.problem", "substitution_awxy.problem"}) {
    const auto pf = load(name);
    const auto I = pf.presentation();
    const auto r = best_separating_reembedding(I);
    const auto s = separating_indeterminates(I);
    for (auto extra : s) {
      if (std::find(r.z.begin(), r.z.end(), extra) != r.z.end()) continue;
      auto bigger = r.z;
      bigger.push_back(extra);
      EXPECT_FALSE(try_find_separating_tuple(I, bigger).has_value()) << name;
    }
    // each degree block separates on its own
    for (const auto& d : I.generator_degrees()) {
      std::vector<std::size_t> zd;
      for (auto i : r.z) {
        if (pf.ring.weight(i) == d) zd.push_back(i);
      }
      if (zd.empty()) continue;
      EXPECT_TRUE(try_find_separating_tuple(I, zd).has_value()) << name << " degree " << d;
    }
  }
}

TEST(BestReembedding, DetectedGradingThenEliminate) {
  const auto r0 = GradedRing::standard({"a", "w", "x", "y"});
  const auto gens = Ps(r0, {"3*x - a*y", "y - a^3*y", "a*x - a^2*w^2"});
  const auto w = detect_grading(gens, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<std::int64_t>{0, 1, 2, 2}));
  const GradedRing ring({"a", "w", "x", "y"}, *w);
  const IdealPresentation I(ring, gens);
  const auto r = best_separating_reembedding(I);
  EXPECT_EQ(r.z, vars(ring, "x,y"));
  EXPECT_TRUE(ideal_equal(r.target.ideal(), Ideal(Ps(r.target.ring(), {"a^5*w^2 - a^2*w^2"}), 2)));
}

TEST(BestReembedding, ZeroIdealIsIdentity) {
  const auto r = GradedRing::standard({"x", "y"});
  const auto out = best_separating_reembedding(IdealPresentation(r, {}));
  EXPECT_TRUE(out.z.empty());
  EXPECT_EQ(out.target.ring(), r);
  EXPECT_FALSE(out.note.empty());
  EXPECT_EQ(out.phi.images, Ps(r, {"x", "y"}));
}

TEST(PositivelyGraded, WeightedChain) {
  const GradedRing ring({"x", "y", "z"}, {4, 2, 1});
  const IdealPresentation I(ring, Ps(ring, {"x - y^2", "y - z^2"}));
  const auto r = positively_graded_optimal(I);
  EXPECT_EQ(as_set(r.z), as_set(vars(ring, "x,y")));
  EXPECT_EQ(r.status, Optimality::OptimalByLinpart);
  EXPECT_TRUE(r.target.generators().empty());
  EXPECT_EQ(r.target.ring().names(), (std::vector<std::string>{"z"}));
  EXPECT_EQ(r.phi.images[0], P(r.target.ring(), "z^4"));
  expect_eliminates_like_oracle(I, r);
}

TEST(PositivelyGraded, TieTakesLowestIndex) {
  const auto ring = GradedRing::standard({"x", "y"});
  const auto r = positively_graded_optimal(IdealPresentation(ring, Ps(ring, {"x + y"})));
  EXPECT_EQ(r.z, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.target.ring().names(), (std::vector<std::string>{"y"}));
}

TEST(PositivelyGraded, MatchesLinDimensionAndOracle) {
  const auto ring = GradedRing::standard({"x", "y", "z", "w"});
  const IdealPresentation I(ring, Ps(ring, {"x + y - z", "2*x - y + w", "x*y - z^2", "x*z - w^2 + y*z"}));
  const auto r = positively_graded_optimal(I);
  EXPECT_EQ(r.z.size(), lin_part_space(I).dimension);
  expect_eliminates_like_oracle(I, r);
}

TEST(PositivelyGraded, Preconditions) {
  const auto pf = load("two_degree_blocks.problem");
  EXPECT_THROW(positively_graded_optimal(pf.presentation()), MathError);
  const auto ring = GradedRing::standard({"x", "y"});
  EXPECT_THROW(positively_graded_optimal(IdealPresentation(ring, Ps(ring, {"x - y^2"}))), MathError);
}

TEST(DetectGrading, OnlyTrivialAndSingleTerm) {
  const auto ring = GradedRing::standard({"x", "y"});
  EXPECT_FALSE(detect_grading(Ps(ring, {"x^2 + y^2 - 2*x"}), 2).has_value());
  const auto w = detect_grading(Ps(ring, {"x*y^3"}), 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(*w, (std::vector<std::int64_t>{0, 0}));
}

TEST(DetectGrading, OutputMakesGeneratorsHomogeneous) {
  const auto ring = GradedRing::standard({"a", "b", "x", "y", "z"});
  const auto gens = Ps(ring, {"x - a^3*y + z", "x - (a*b+1)*y", "a^2*y + a*z", "x^2 - y*z"});
  const auto w = detect_grading(gens, 5);
  ASSERT_TRUE(w.has_value());
  const GradedRing graded(ring.names(), *w);
  for (const auto& g : gens) EXPECT_TRUE(graded.is_homogeneous(g));
  EXPECT_EQ((*w)[0], 0);
  EXPECT_EQ((*w)[1], 0);
}
