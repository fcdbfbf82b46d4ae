#include <gtest/gtest.h>

#include <sscreen/covers.hpp>
#include <sscreen/sampling.hpp>

#include "oracles.hpp"

using namespace sscreen;

namespace {

Cover C(const char* target, std::initializer_list<const char*> members) {
  std::vector<RSet> m;
  for (const char* s : members) m.push_back(RSet::parse(s));
  return Cover(RSet::parse(target), m);
}

const Interval kUnit = Interval::closed(0, 1);

}  // namespace

TEST(Lebesgue, TwoIntervalCover) {
  Cover c = C("[0,1]", {"(-1/8,1/2)", "(1/4,9/8)"});
  EXPECT_EQ(lebesgue_supremum(c), Rational(1, 4));
  EXPECT_EQ(lebesgue_number(c), Rational(1, 8));
}

TEST(Lebesgue, SingleMemberCappedByTargetLength) {
  Cover c = C("[0,1]", {"(-1,2)"});
  EXPECT_EQ(lebesgue_supremum(c), Rational(1));
  EXPECT_EQ(lebesgue_number(c), Rational(1, 2));
}

TEST(Lebesgue, ThreeIntervalCoverPassesCheck) {
  Cover c = C("[0,1]", {"(-1/8,3/8)", "(1/4,5/8)", "(1/2,9/8)"});
  Rational d = lebesgue_number(c);
  EXPECT_GT(d, Rational(0));
  EXPECT_TRUE(verify_lebesgue(c, d).ok);
  EXPECT_TRUE(oracle::lebesgue_holds(c.members(), kUnit, d));
}

TEST(VerifyLebesgue, CounterexampleWindow) {
  Cover c = C("[0,1]", {"(-1/8,1/2)", "(1/4,9/8)"});
  auto bad = verify_lebesgue(c, Rational(1, 4));
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.counterexample);
  EXPECT_EQ(*bad.counterexample, Interval::closed(Rational(1, 4), Rational(1, 2)));
  EXPECT_TRUE(verify_lebesgue(c, Rational(1, 8)).ok);
  EXPECT_TRUE(verify_lebesgue(C("[0,1]", {"(-1,2)"}), Rational(1)).ok);
}

TEST(Lebesgue, SupremumMatchesBruteForceOnRandomCovers) {
  Sampler rng(2024);
  for (int i = 0; i < 300; ++i) {
    Interval t = rng.subinterval();
    Cover c = rng.cover_of(t);
    Rational sup = lebesgue_supremum(c);
    ASSERT_GT(sup, Rational(0));
    EXPECT_TRUE(oracle::lebesgue_holds(c.members(), t, lebesgue_number(c)));
    EXPECT_TRUE(oracle::lebesgue_holds(c.members(), t, sup * Rational(999, 1000)));
    if (sup < t.length()) EXPECT_FALSE(oracle::lebesgue_holds(c.members(), t, sup)) << c.target() << " " << sup;
  }
}

TEST(VerifyLebesgue, AgreesWithBruteForce) {
  Sampler rng(77);
  for (int i = 0; i < 300; ++i) {
    Interval t = rng.subinterval();
    Cover c = rng.cover_of(t);
    Rational d = rng.rational(Rational(1, 64), t.length(), 32);
    auto r = verify_lebesgue(c, d);
    EXPECT_EQ(r.ok, oracle::lebesgue_holds(c.members(), t, d));
    if (!r.ok) {
      ASSERT_TRUE(r.counterexample);
      EXPECT_EQ(r.counterexample->length(), d);
      for (const auto& m : c.members()) EXPECT_FALSE(oracle::interval_inside(*r.counterexample, m));
    }
  }
}

TEST(BallCover, SizesAndDiameters) {
  for (int n : {1, 2, 3, 6}) {
    Cover b = ball_cover({n});
    EXPECT_EQ(b.size(), (std::size_t{1} << (n + 2)) + 1);
    for (const auto& m : b.members()) {
      EXPECT_LT(diameter(m), Rational::pow2(-n));
      EXPECT_TRUE(is_open_in(m, RSet(kUnit)));
    }
    EXPECT_EQ(b.union_set(), RSet(kUnit));
    EXPECT_TRUE(verify_lebesgue(b, lebesgue_number(b)).ok);
  }
  EXPECT_EQ(ball_cover({1}).size(), 9u);
  EXPECT_EQ(ball_cover({2}).size(), 17u);
  EXPECT_EQ(diameter(ball_cover({2}).members()[5]), Rational(1, 8));
  EXPECT_THROW(ball_cover({0}), DomainError);
}

TEST(Cover, RejectsNonCovering) { EXPECT_THROW(C("[0,1]", {"(0,1)"}), Error); }

TEST(ChainSubcover, SpecExamples) {
  auto ids = [](const Cover& c) {
    std::vector<std::size_t> out;
    for (const auto& l : chain_subcover(c)) out.push_back(l.member);
    return out;
  };
  EXPECT_EQ(ids(C("[0,1]", {"(-1/8,1/2)", "(1/4,9/8)", "(1/3,2/3)"})), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(ids(C("[0,1]", {"(-1,2)"})), (std::vector<std::size_t>{0}));
  EXPECT_EQ(ids(C("[0,1]", {"(-1/8,3/8)", "(1/4,5/8)", "(1/2,9/8)"})), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ChainSubcover, ChainPropertyOnRandomCovers) {
  Sampler rng(99);
  for (int i = 0; i < 300; ++i) {
    Interval t = rng.subinterval();
    Cover c = rng.cover_of(t);
    auto chain = chain_subcover(c);
    ASSERT_FALSE(chain.empty());
    RSet u;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      u = set_union(u, RSet(chain[k].piece));
      EXPECT_TRUE(oracle::interval_inside(chain[k].piece, c.members()[chain[k].member]));
      if (k + 1 < chain.size()) EXPECT_TRUE(intersect(chain[k].piece, chain[k + 1].piece).has_value());
      if (k + 2 < chain.size()) EXPECT_FALSE(intersect(chain[k].piece, chain[k + 2].piece).has_value());
    }
    EXPECT_EQ(u, RSet(t));
  }
}
