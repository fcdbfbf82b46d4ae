#include <gtest/gtest.h>

#include <random>

#include <sscreen/one_strategies.hpp>
#include <sscreen/sampling.hpp>

#include "oracles.hpp"

using namespace sscreen;

namespace {

const Interval kUnit = Interval::closed(0, 1);

RSet S(const char* s) { return RSet::parse(s); }

/// Random finite family of open intervals with pairwise disjoint closures, each inside some cover member.
std::vector<RSet> random_discrete_refinement(std::mt19937_64& rng, const Cover& cover, const Interval& amb, long den) {
  std::uniform_int_distribution<long> step(1, den / 4 + 1), len(1, den / 3 + 1), coin(0, 2);
  std::vector<RSet> out;
  long pos = 0;
  while (pos < den) {
    long a = pos + step(rng);
    long b = a + len(rng);
    if (b > den) break;
    Rational lo = amb.lo() + amb.length() * Rational(a, den), hi = amb.lo() + amb.length() * Rational(b, den);
    RSet piece = intersect(RSet(Interval::open(lo, hi)), RSet(amb));
    if (a == 0 && coin(rng) == 0) piece = RSet(Interval(lo, hi, false, true));
    bool inside = false;
    for (const auto& m : cover.members()) inside = inside || oracle::set_inside(piece, m);
    if (inside) out.push_back(piece);
    pos = b;
  }
  return out;
}

}  // namespace

TEST(AvoidCover, BlockFormula) {
  Cover c = avoid_cover(Interval::open(Rational(1, 4), Rational(3, 4)), kUnit);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.members()[0], S("[0,3/8);(7/16,1]"));
  EXPECT_EQ(c.members()[1], S("[0,9/16);(5/8,1]"));
}

TEST(AvoidCover, RandomIntervals) {
  Sampler rng(6);
  RSet amb(kUnit);
  for (int i = 0; i < 300; ++i) {
    Interval t = rng.subinterval();
    Interval o = Interval::open(t.lo(), t.hi());
    Cover c = avoid_cover(o, kUnit);
    EXPECT_EQ(c.union_set(), amb);
    for (const auto& m : c.members()) {
      EXPECT_TRUE(is_open_in(m, amb));
      EXPECT_FALSE(oracle::set_inside(RSet(o), closure(m)));
    }
  }
  EXPECT_THROW(avoid_cover(Interval::point(Rational(1, 2)), kUnit), DomainError);
  EXPECT_THROW(avoid_cover(Interval::open(Rational(1, 2), 2), kUnit), DomainError);
}

TEST(AvoidCover, NoDiscreteRefinementSwallowsO) {
  std::mt19937_64 rng(17);
  Sampler pick(18);
  for (int i = 0; i < 400; ++i) {
    Interval t = pick.subinterval();
    Interval o = Interval::open(t.lo(), t.hi());
    Cover c = avoid_cover(o, kUnit);
    auto fam = random_discrete_refinement(rng, c, kUnit, 64);
    ASSERT_TRUE(oracle::pairwise_closures_disjoint(fam));
    RSet shadow;
    for (const auto& m : fam) shadow = set_union(shadow, closure(m));
    EXPECT_FALSE(oracle::set_inside(RSet(o), shadow));
    EXPECT_FALSE(interior(subtract(RSet(o), shadow)).empty());
  }
}

TEST(BanachMazurOne, MiddleThirdOfLargestComponent) {
  EXPECT_EQ(bm_one_move(S("(0,1/2);(3/4,1)")), Interval::parse("(1/6,1/3)"));
  EXPECT_EQ(bm_one_move(S("(0,1)")), Interval::parse("(1/3,2/3)"));
  EXPECT_EQ(bm_one_move(S("(0,1/4);(1/2,3/4)")), Interval::parse("(1/12,1/6)"));
  EXPECT_THROW(bm_one_move(RSet()), InvariantViolation);
}

TEST(BanachMazurOne, CompactStrategy) {
  auto bm = bm_one_compact(kUnit);
  BMState s;
  EXPECT_EQ(bm(s), Interval::parse("(1/4,3/4)"));
  s.one_moves.push_back(S("(1/4,3/4)"));
  s.two_moves.push_back(S("(1/4,1/2);(5/8,3/4)"));
  EXPECT_EQ(bm(s), Interval::parse("(1/3,5/12)"));
}

TEST(BanachMazurOne, DenseGDeltaDeletesTheCurrentPoint) {
  GDeltaSpec spec("farey");
  ASSERT_EQ(spec.points().at(3), Rational(1, 3));
  EXPECT_EQ(bm_one_move(intersect(S("(0,1)"), spec.dense_open(3, kUnit))), Interval::parse("(5/9,7/9)"));
  EXPECT_EQ(bm_one_move(intersect(S("(0,1/4)"), subtract(RSet(kUnit), RSet(Interval::point(Rational(1, 2)))))),
            Interval::parse("(1/12,1/6)"));

  auto bm = bm_one_dense_gdelta(spec, kUnit);
  BMState s;
  for (int n = 0; n < 4; ++n) {
    s.one_moves.push_back(S("(0,1)"));
    s.two_moves.push_back(S("(0,1)"));
  }
  EXPECT_EQ(bm(s), Interval::parse("(5/9,7/9)"));
}

TEST(OneMain, SpecExamples) {
  auto bm = bm_one_compact(kUnit);
  auto start = one_main_start(bm, kUnit);
  EXPECT_EQ(start.state.bm.one_moves.front(), S("(1/4,3/4)"));
  Cover expected = avoid_cover(Interval::parse("(1/4,3/4)"), kUnit);
  EXPECT_EQ(start.cover.members(), expected.members());

  auto empty = one_main_step(bm, start.state, {}, kUnit);
  EXPECT_EQ(empty.state.bm.two_moves.back(), S("(1/4,3/4)"));
  EXPECT_EQ(empty.state.bm.one_moves.back(), S("(5/12,7/12)"));

  auto cut = one_main_step(bm, start.state, {S("(0,3/8)")}, kUnit);
  EXPECT_EQ(cut.state.bm.two_moves.back(), S("(3/8,3/4)"));
  ASSERT_EQ(cut.state.chain.size(), 1u);
  EXPECT_EQ(cut.state.chain[0].o, S("(1/4,3/4)"));
}

TEST(OneMain, NestedClosuresAgainstRandomLegalFamilies) {
  std::mt19937_64 rng(4);
  for (bool gdelta : {false, true}) {
    GDeltaSpec spec("farey");
    BMStrategy bm = gdelta ? bm_one_dense_gdelta(spec, kUnit) : bm_one_compact(kUnit);
    for (int game = 0; game < 20; ++game) {
      auto step = one_main_start(bm, kUnit);
      for (int n = 0; n < 12; ++n) {
        auto fam = random_discrete_refinement(rng, step.cover, kUnit, 1 << (n + 6));
        step = one_main_step(bm, step.state, fam, kUnit);
        const auto& link = step.state.chain.back();
        EXPECT_TRUE(oracle::set_inside(closure(link.o_next), link.t));
        EXPECT_TRUE(oracle::set_inside(link.t, link.o));
        for (const auto& m : fam) EXPECT_FALSE(intersects(closure(m), link.t));
        if (gdelta) {
          for (int k = 0; k <= n; ++k) EXPECT_FALSE(oracle::in_set(closure(link.o_next), spec.points().at(k)));
        }
      }
    }
  }
}

TEST(OneMain, SwallowingFamilyIsAnInvariantViolation) {
  auto bm = bm_one_compact(kUnit);
  auto start = one_main_start(bm, kUnit);
  EXPECT_THROW(one_main_step(bm, start.state, {S("(0,1)")}, kUnit), InvariantViolation);
}
