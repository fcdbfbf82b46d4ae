#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <sscreen/sampling.hpp>
#include <sscreen/transcript_io.hpp>

#include "oracles.hpp"

using namespace sscreen;

namespace {

const Interval kUnit = Interval::closed(0, 1);
const RSet kUnitSet(kUnit);

std::vector<RSet> F(std::initializer_list<const char*> members) {
  std::vector<RSet> out;
  for (const char* m : members) out.push_back(RSet::parse(m));
  return out;
}

GameConfig config(const char* one, const char* two, const char* length, std::uint64_t budget = 8,
                  Ruleset ruleset = Ruleset::Discrete, const char* target = "full") {
  GameConfig c;
  c.ruleset = ruleset;
  c.length = Ordinal::parse(length);
  c.target = TargetSpec::parse(target);
  c.one = one;
  c.two = two;
  c.schedule.main_budget = budget;
  return c;
}

struct ScriptedTwo : TwoPlayer {
  explicit ScriptedTwo(std::vector<std::vector<RSet>> moves) : moves(std::move(moves)) {}
  std::string id() const override { return "two:scripted"; }
  std::vector<RSet> respond(const InningLabel&, const Cover&) override { return next < moves.size() ? moves[next++] : std::vector<RSet>{}; }
  std::vector<std::vector<RSet>> moves;
  std::size_t next = 0;
};

struct FixedOne : OnePlayer {
  explicit FixedOne(std::vector<RSet> members) : members(std::move(members)) {}
  std::string id() const override { return "one:fixed"; }
  Cover cover(const InningLabel&) override { return Cover(RSet(), members); }
  std::vector<RSet> members;
};

}  // namespace

TEST(Referee, PunctureFamilyUnderBothRulesets) {
  auto cover = F({"[0,1/2)", "(1/4,1]"});
  auto fam = F({"[0,3/8)", "(3/8,1]"});
  auto d = referee_step(Ruleset::Discrete, std::span<const RSet>(cover), fam, kUnitSet);
  ASSERT_FALSE(d.accepted());
  EXPECT_EQ(d.rejection->kind, "NotDiscrete");
  EXPECT_EQ(*d.rejection->point, Rational(3, 8));
  EXPECT_TRUE(referee_step(Ruleset::Disjoint, std::span<const RSet>(cover), fam, kUnitSet).accepted());
  for (Ruleset r : {Ruleset::Discrete, Ruleset::Disjoint}) EXPECT_TRUE(referee_step(r, std::span<const RSet>(cover), {}, kUnitSet).accepted());
}

TEST(Referee, RejectionKindsInOrder) {
  auto cover = F({"[0,1/2)", "(1/4,1]"});
  auto judge = [&](std::vector<RSet> fam) { return referee_step(Ruleset::Discrete, std::span<const RSet>(cover), fam, kUnitSet); };
  EXPECT_EQ(judge({RSet()}).rejection->kind, "EmptyMember");
  EXPECT_EQ(judge(F({"[1/8,1/4)"})).rejection->kind, "NotOpen");
  EXPECT_EQ(judge(F({"(1/8,3/4)"})).rejection->kind, "IllegalRefinement");
  auto overlap = referee_step(Ruleset::Disjoint, std::span<const RSet>(cover), F({"(0,1/4)", "(1/8,3/8)"}), kUnitSet);
  EXPECT_EQ(overlap.rejection->kind, "NotDisjoint");
}

TEST(Referee, SoundAgainstPredicateOracle) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(0, 16), count(0, 4), coin(0, 1);
  Sampler covers(10);
  for (int i = 0; i < 500; ++i) {
    Cover c = covers.cover_of(kUnit);
    std::vector<RSet> members;
    for (const auto& m : c.members()) members.push_back(intersect(m, kUnitSet));
    std::vector<RSet> fam;
    for (int k = count(rng); k > 0; --k) {
      int a = coord(rng), b = coord(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      bool lo_open = a != 0 || coin(rng), hi_open = b != 16 || coin(rng);
      fam.emplace_back(Interval(Rational(a, 16), Rational(b, 16), lo_open, hi_open));
    }
    for (Ruleset rs : {Ruleset::Discrete, Ruleset::Disjoint}) {
      bool refining = true;
      for (const auto& m : fam) {
        bool in = false;
        for (const auto& cm : members) in = in || oracle::set_inside(m, cm);
        refining = refining && in;
      }
      bool separated = true;
      for (std::size_t x = 0; x < fam.size(); ++x)
        for (std::size_t y = x + 1; y < fam.size(); ++y)
          separated = separated && (rs == Ruleset::Discrete ? !oracle::closures_meet(fam[x], fam[y]) : !intersects(fam[x], fam[y]));
      auto judged = referee_step(rs, std::span<const RSet>(members), fam, kUnitSet);
      ASSERT_EQ(judged.accepted(), refining && separated);
      if (judged.accepted()) continue;
      const auto& r = *judged.rejection;
      if (r.kind == "NotDiscrete") {
        EXPECT_TRUE(oracle::in_set(closure(fam[*r.member]), *r.point));
        EXPECT_TRUE(oracle::in_set(closure(fam[*r.other]), *r.point));
      } else if (r.kind == "NotDisjoint") {
        EXPECT_TRUE(oracle::in_set(fam[*r.member], *r.point));
        EXPECT_TRUE(oracle::in_set(fam[*r.other], *r.point));
      } else {
        ASSERT_EQ(r.kind, "IllegalRefinement");
        for (const auto& cm : members) EXPECT_FALSE(oracle::set_inside(fam[*r.member], cm));
      }
    }
  }
}

TEST(ValidateCover, ReportsUncoveredPoint) {
  auto bad = validate_cover(F({"[0,1/2)", "(1/2,1]"}), kUnit, TargetSpec{});
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->kind, "NotCovering");
  EXPECT_EQ(*bad->point, Rational(1, 2));
  EXPECT_FALSE(validate_cover(F({"[0,1/2)", "(1/4,1]"}), kUnit, TargetSpec{}));
  EXPECT_EQ(validate_cover(F({"[0,1/2]", "(1/4,1]"}), kUnit, TargetSpec{})->kind, "NotOpen");
  // only the Cantor set needs covering
  EXPECT_FALSE(validate_cover(F({"[0,2/5)", "(3/5,1]"}), kUnit, TargetSpec::parse("cantor")));
}

TEST(Play, OmegaPlusOneHalvingCoversExactly) {
  Transcript tr = play(config("one:grid", "two:halving-omega-plus-1", "w+1"));
  EXPECT_EQ(tr.verdict.outcome, Outcome::TwoWinsCovered);
  EXPECT_EQ(tr.verdict.winner, "two");
  EXPECT_EQ(tr.two_union(), kUnitSet);
  EXPECT_EQ(tr.verdict.exit_code(), 0);
}

TEST(Play, LimitProtocolOrder) {
  Transcript tr = play(config("one:grid", "two:halving-omega-plus-1", "w+1", 3));
  std::vector<std::string> kinds;
  std::optional<std::size_t> limit_at;
  for (std::size_t i = 0; i < tr.records.size(); ++i) {
    if (const auto* l = std::get_if<LimitRecord>(&tr.records[i])) {
      limit_at = i;
      EXPECT_EQ(l->limit, Ordinal::omega());
      EXPECT_EQ(l->digest.innings, 3u);
      EXPECT_EQ(l->digest.covered_measure, Rational(7, 8));
    }
  }
  ASSERT_TRUE(limit_at);
  const auto& limit = std::get<LimitRecord>(tr.records[*limit_at]);
  for (std::size_t k = 1; k <= limit.extensions; ++k) {
    const auto& e = std::get<InningRecord>(tr.records[*limit_at + k]);
    EXPECT_TRUE(e.extension);
    EXPECT_EQ(e.inning, Ordinal(2 + k));
  }
  const auto& last = std::get<InningRecord>(tr.records[*limit_at + limit.extensions + 1]);
  EXPECT_TRUE(last.limit);
  EXPECT_EQ(last.inning, Ordinal::omega());
  EXPECT_EQ(tr.verdict.outcome, Outcome::TwoWinsCovered);
}

TEST(Play, LimitInningNeedsADigest) {
  EXPECT_THROW(play(config("one:main-compact", "two:halving-omega-plus-1", "w+1")), ConfigError);
  EXPECT_NO_THROW(play(config("one:avoid-fixed", "two:halving-omega-plus-1", "w+1", 4)));
}

TEST(Play, MainCompactCertifiesAgainstHalving) {
  Transcript tr = play(config("one:main-compact", "two:halving", "w", 25));
  EXPECT_EQ(tr.verdict.outcome, Outcome::OneWinsCertified);
  const auto& c = tr.verdict.certificate;
  ASSERT_EQ(c.nested.size(), 25u);
  for (const auto& l : c.nested) {
    EXPECT_TRUE(oracle::set_inside(closure(l.o_next), l.t));
    EXPECT_TRUE(oracle::set_inside(l.t, l.o));
  }
  ASSERT_TRUE(c.uncovered_open);
  EXPECT_FALSE(c.uncovered_open->empty());
  EXPECT_FALSE(intersects(*c.uncovered_open, tr.two_union()));
}

TEST(Play, DisjointTwoInningPuncture) {
  Transcript c = play(config("one:grid", "two:chain-puncture", "2", 8, Ruleset::Disjoint));
  EXPECT_EQ(c.verdict.outcome, Outcome::TwoWinsCovered);
  EXPECT_EQ(c.innings().size(), 2u);
  EXPECT_EQ(c.two_union(), kUnitSet);
  Transcript d = play(config("one:grid", "two:chain-puncture", "2"));
  EXPECT_EQ(d.verdict.outcome, Outcome::Forfeit);
  EXPECT_EQ(d.verdict.exit_code(), 2);
  ASSERT_TRUE(d.verdict.certificate.rejection);
  EXPECT_EQ(d.verdict.certificate.rejection->kind, "NotDiscrete");
  EXPECT_EQ(d.verdict.certificate.rejection->offender, "two");
}

TEST(Play, ForfeitsCarryWitnesses) {
  auto cfg = config("one:grid", "two:scripted", "3");
  Transcript bad_two = play(cfg, make_one("one:grid", {}), std::make_unique<ScriptedTwo>(std::vector<std::vector<RSet>>{F({"(0,1)"})}));
  EXPECT_EQ(bad_two.verdict.outcome, Outcome::Forfeit);
  EXPECT_EQ(bad_two.verdict.winner, "one");
  EXPECT_EQ(bad_two.verdict.certificate.rejection->kind, "IllegalRefinement");

  Transcript bad_one = play(cfg, std::make_unique<FixedOne>(F({"[0,1/2)", "(1/2,1]"})), make_two("two:halving", {}));
  EXPECT_EQ(bad_one.verdict.outcome, Outcome::Forfeit);
  EXPECT_EQ(bad_one.verdict.winner, "two");
  EXPECT_EQ(bad_one.verdict.certificate.rejection->kind, "NotCovering");
  EXPECT_EQ(*bad_one.verdict.certificate.rejection->point, Rational(1, 2));
}

TEST(Play, UncoveredFiniteGameGoesToOne) {
  Transcript tr = play(config("one:grid", "two:halving", "3"));
  EXPECT_EQ(tr.verdict.outcome, Outcome::OneWinsUncovered);
  ASSERT_TRUE(tr.verdict.certificate.uncovered_measure);
  EXPECT_EQ(*tr.verdict.certificate.uncovered_measure, Rational(1, 8));
}

TEST(Play, UnknownStrategyIsAConfigError) {
  EXPECT_THROW(play(config("one:nope", "two:halving", "1")), ConfigError);
  EXPECT_THROW(play(config("one:grid", "two:bm-first-category:farey", "1")), ConfigError);
}

TEST(Play, CantorAndCountableTargets) {
  Transcript c = play(config("one:grid", "two:cantor-oneshot", "1", 8, Ruleset::Discrete, "cantor"));
  EXPECT_EQ(c.verdict.outcome, Outcome::TwoWinsCovered);
  Transcript q = play(config("one:avoid-fixed", "two:countable:farey", "w", 10, Ruleset::Discrete, "countable:farey"));
  EXPECT_EQ(q.verdict.outcome, Outcome::TwoWinsCovered);
  EXPECT_EQ(q.verdict.certificate.coverage_basis, "materialized points q_0..q_9");
  RationalEnumeration pts("farey");
  for (std::size_t k = 0; k < 10; ++k) EXPECT_TRUE(oracle::in_set(q.two_union(), pts.at(k)));
}

TEST(Play, GDeltaVariantAvoidsEnumeratedPoints) {
  Transcript tr = play(config("one:main-gdelta:farey", "two:greedy", "w", 25, Ruleset::Discrete, "gdelta:farey"));
  EXPECT_EQ(tr.verdict.outcome, Outcome::OneWinsCertified);
  ASSERT_TRUE(tr.verdict.certificate.avoided_points);
  EXPECT_EQ(*tr.verdict.certificate.avoided_points, 25u);
  const RSet& last = tr.verdict.certificate.nested.back().o_next;
  RationalEnumeration pts("farey");
  for (std::size_t k = 0; k < 25; ++k) EXPECT_FALSE(oracle::in_set(closure(last), pts.at(k)));
}

TEST(Play, DiscreteWinsSurviveTheDisjointRules) {
  for (auto cfg : {config("one:grid", "two:halving-omega-plus-1", "w+1", 6), config("one:grid", "two:cantor-oneshot", "1", 8, Ruleset::Discrete, "cantor"),
                   config("one:avoid-fixed", "two:halving-omega-plus-1", "w+1", 6)}) {
    Transcript tr = play(cfg);
    ASSERT_EQ(tr.verdict.outcome, Outcome::TwoWinsCovered);
    auto re = rereferee(tr, Ruleset::Disjoint);
    EXPECT_TRUE(re.all_accepted);
    if (target_set(cfg)) {
      EXPECT_TRUE(re.covered);
    }
  }
}

TEST(Play, TranscriptsAreDeterministic) {
  auto cfg = config("one:main-compact", "two:greedy", "w", 10);
  EXPECT_EQ(transcript_text(play(cfg)), transcript_text(play(cfg)));
}

TEST(Play, TranscriptRoundTrip) {
  Transcript tr = play(config("one:grid", "two:halving-omega-plus-1", "w+1", 4));
  std::string text = transcript_text(tr);
  std::istringstream in(text);
  Transcript back = read_transcript(in);
  EXPECT_EQ(back.records.size(), tr.records.size());
  EXPECT_EQ(back.verdict.outcome, tr.verdict.outcome);
  EXPECT_EQ(back.verdict.winner, tr.verdict.winner);
  EXPECT_EQ(to_json(back.config), to_json(tr.config));
  back.verdict = tr.verdict;
  EXPECT_EQ(transcript_text(back), text);
  std::istringstream junk("{\"config\":1}\nnot json\n");
  EXPECT_THROW(read_transcript(junk), Error);
}

TEST(Subspace, LiftSetsTarget) {
  GameConfig c = lift_to_closed_subspace(config("one:grid", "two:halving", "1"), RSet::parse("[1/4,1/2]"));
  EXPECT_EQ(effective_ambient(c), Interval::parse("[1/4,1/2]"));
  EXPECT_EQ(*target_set(c), RSet::parse("[1/4,1/2]"));
  EXPECT_THROW(lift_to_closed_subspace(c, RSet::parse("(0,1/2)")), DomainError);
  EXPECT_THROW(lift_to_closed_subspace(c, RSet::parse("[0,2]")), DomainError);
}

TEST(Subspace, TwoWinRestricts) {
  auto cfg = config("one:grid", "two:halving-omega-plus-1", "w+1", 6);
  ASSERT_EQ(play(cfg).verdict.outcome, Outcome::TwoWinsCovered);
  Transcript y = play(lift_to_closed_subspace(cfg, RSet::parse("[1/4,1/2]")));
  EXPECT_EQ(y.verdict.outcome, Outcome::TwoWinsCovered);
  EXPECT_TRUE(is_subset(RSet::parse("[1/4,1/2]"), y.two_union()));
}

TEST(Subspace, LiftedOneWinOnAComponent) {
  auto on_y = lift_to_closed_subspace(config("one:main-compact", "two:halving", "w", 12), RSet::parse("[1/4,1/2]"));
  ASSERT_EQ(play(on_y).verdict.outcome, Outcome::OneWinsCertified);
  auto on_x = config("one:main-compact", "two:halving", "w", 12);
  on_x.one_home = Interval::parse("[1/4,1/2]");
  Transcript x = play(on_x);
  EXPECT_EQ(x.verdict.outcome, Outcome::OneWinsCertified);
  ASSERT_TRUE(x.verdict.certificate.uncovered_open);
  EXPECT_TRUE(is_subset(*x.verdict.certificate.uncovered_open, RSet::parse("[1/4,1/2]")));
}

TEST(Bracket, SweepsAtOmegaAndOmegaPlusOne) {
  auto rep = length_bracket_report(kUnit, TargetSpec{}, one_catalog(), two_catalog(),
                                   {Ordinal(1), Ordinal::omega(), Ordinal::parse("w+1")}, InningSchedule{8});
  ASSERT_EQ(rep.lengths.size(), 3u);
  EXPECT_TRUE(rep.one_sweep[1]);
  EXPECT_FALSE(rep.two_sweep[1]);
  EXPECT_TRUE(rep.two_sweep[2]);
  EXPECT_EQ(rep.two_sweep_from, "w+1");
  EXPECT_TRUE(rep.two_sweeps_persist);
  bool ineligible = false;
  for (const auto& c : rep.cells) ineligible = ineligible || c.outcome == "ineligible";
  EXPECT_TRUE(ineligible);
}

TEST(Bracket, CantorTargetSweepsAtLengthOne) {
  auto rep = length_bracket_report(kUnit, TargetSpec::parse("cantor"), one_catalog(), {"two:cantor-oneshot", "two:empty"},
                                   {Ordinal(1), Ordinal(2)}, InningSchedule{8});
  EXPECT_TRUE(rep.two_sweep[0]);
  EXPECT_TRUE(rep.two_sweep[1]);
  EXPECT_TRUE(rep.two_sweeps_persist);
}

TEST(BanachMazur, TwoAvoidsFirstCategory) {
  BMPlay p = play_banach_mazur(bm_one_compact(kUnit), RationalEnumeration("farey"), 25);
  EXPECT_TRUE(p.ok());
  ASSERT_EQ(p.rounds.size(), 25u);
  RationalEnumeration q("farey");
  for (std::size_t k = 0; k < 25; ++k) EXPECT_FALSE(oracle::in_set(closure(p.rounds.back().two), q.at(k)));
}
