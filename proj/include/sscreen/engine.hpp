#ifndef SSCREEN_ENGINE_HPP
#define SSCREEN_ENGINE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "game.hpp"
#include "players.hpp"

namespace sscreen {

// ---------------------------------------------------------------------------
// Referee

/// Why a move was refused, with an independently checkable witness.
struct Rejection {
  std::string kind;      ///< IllegalRefinement, NotDiscrete, NotDisjoint, NotOpen, EmptyMember, NotCovering, StrategyFailure
  std::string offender;  ///< "one" or "two"
  std::optional<std::size_t> member;
  std::optional<std::size_t> other;
  std::optional<Rational> point;
  std::string message;
};

struct RefereeResult {
  std::optional<Rejection> rejection;
  Refinement refinement;
  std::optional<Rational> min_gap;
  bool accepted() const { return !rejection; }
};

/// Judges TWO's answer: members nonempty and open in the ambient, refinement
/// of the cover, then closure-disjointness (discrete) or disjointness.
inline RefereeResult referee_step(Ruleset ruleset, std::span<const RSet> cover, const std::vector<RSet>& family,
                                  const RSet& ambient) {
  RefereeResult r;
  auto reject = [&](std::string kind, std::optional<std::size_t> m, std::optional<std::size_t> o,
                    std::optional<Rational> p, std::string msg) {
    r.rejection = Rejection{std::move(kind), "two", m, o, std::move(p), std::move(msg)};
    return r;
  };
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) return reject("EmptyMember", i, std::nullopt, std::nullopt, "member " + std::to_string(i) + " is empty");
    if (!is_subset(family[i], ambient) || !is_open_in(family[i], ambient))
      return reject("NotOpen", i, std::nullopt, std::nullopt, "member " + std::to_string(i) + " " + family[i].str() + " is not open in " + ambient.str());
  }
  r.refinement = refines(family, cover);
  if (auto bad = r.refinement.first_failure())
    return reject("IllegalRefinement", *bad, std::nullopt, family[*bad].front().lo(),
                  "member " + std::to_string(*bad) + " " + family[*bad].str() + " lies in no single cover member");
  auto checked = is_discrete(family);
  if (auto* clash = std::get_if<PairClash>(&checked)) {
    if (ruleset == Ruleset::Discrete)
      return reject("NotDiscrete", clash->first, clash->second, clash->shared_point,
                    "closures of members " + std::to_string(clash->first) + " and " + std::to_string(clash->second) + " share " +
                        clash->shared_point.str());
    if (auto overlap = find_overlap(family))
      return reject("NotDisjoint", overlap->first, overlap->second, overlap->shared_point,
                    "members " + std::to_string(overlap->first) + " and " + std::to_string(overlap->second) + " share " +
                        overlap->shared_point.str());
    r.min_gap = Rational(0);
  } else {
    r.min_gap = std::get<DiscreteFamily>(checked).min_gap();
  }
  return r;
}

inline RefereeResult referee_step(Ruleset ruleset, const Cover& cover, const std::vector<RSet>& family, const RSet& ambient) {
  return referee_step(ruleset, std::span<const RSet>(cover.members()), family, ambient);
}

/// Judges ONE's cover: members nonempty, open in the ambient, and covering the target.
inline std::optional<Rejection> validate_cover(std::span<const RSet> members, const Interval& ambient, const TargetSpec& target) {
  RSet amb(ambient);
  auto reject = [](std::string kind, std::optional<std::size_t> m, std::optional<Rational> p, std::string msg) {
    return Rejection{std::move(kind), "one", m, std::nullopt, std::move(p), std::move(msg)};
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].empty()) return reject("EmptyMember", i, std::nullopt, "cover member " + std::to_string(i) + " is empty");
    if (!is_subset(members[i], amb) || !is_open_in(members[i], amb))
      return reject("NotOpen", i, std::nullopt, "cover member " + std::to_string(i) + " " + members[i].str() + " is not open in " + ambient.str());
  }
  RSet u = union_all(members);
  auto first_point = [](const RSet& s) {
    const Interval& f = s.front();
    return f.lo_open() ? midpoint(f.lo(), f.hi()) : f.lo();
  };
  switch (target.kind) {
    case TargetSpec::Kind::Full:
    case TargetSpec::Kind::Countable: {
      RSet rest = subtract(amb, u);
      if (!rest.empty()) return reject("NotCovering", std::nullopt, first_point(rest), "cover misses " + first_point(rest).str());
      break;
    }
    case TargetSpec::Kind::ClosedRSet: {
      RSet rest = subtract(target.closed, u);
      if (!rest.empty()) return reject("NotCovering", std::nullopt, first_point(rest), "cover misses " + first_point(rest).str());
      break;
    }
    case TargetSpec::Kind::Cantor: {
      auto c = cantor_covered(u, CantorSpec{ambient});
      if (!c.covered)
        return reject("NotCovering", std::nullopt, c.missed,
                      c.missed ? "cover misses the Cantor point " + c.missed->str() : "cover coverage of the Cantor set undecided");
      break;
    }
    case TargetSpec::Kind::GDelta: {
      RSet rest = subtract(amb, u);
      for (const auto& iv : rest.components())
        if (!iv.is_point())
          return reject("NotCovering", std::nullopt, midpoint(iv.lo(), iv.hi()), "cover misses the interval " + iv.str());
      break;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Transcript and verdict

struct InningRecord {
  Ordinal inning;
  bool extension = false;  ///< materialized on demand during a limit move
  bool limit = false;      ///< the limit inning itself
  std::vector<RSet> one;
  std::vector<RSet> two;
  bool refines = true;
  Ruleset ruleset = Ruleset::Discrete;
  std::optional<Rational> min_gap;
};

struct LimitRecord {
  Ordinal limit;
  LimitDigest digest;
  std::size_t extensions = 0;
};

using Record = std::variant<InningRecord, LimitRecord>;

enum class Outcome { TwoWinsCovered, OneWinsCertified, OneWinsUncovered, Truncated, Forfeit, InvariantViolated };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::TwoWinsCovered: return "two-wins-covered";
    case Outcome::OneWinsCertified: return "one-wins-certified";
    case Outcome::OneWinsUncovered: return "one-wins-uncovered";
    case Outcome::Truncated: return "truncated";
    case Outcome::Forfeit: return "forfeit";
    case Outcome::InvariantViolated: return "invariant-violation";
  }
  return "truncated";
}

struct Certificate {
  std::optional<RSet> union_set;           ///< union of TWO's moves
  std::string coverage_basis;              ///< "exact" or "materialized points q_0..q_{n-1}"
  std::vector<NestedLink> nested;          ///< closure(O_{n+1}) in T_n in O_n
  std::optional<RSet> uncovered_open;      ///< open set missed by every move
  std::optional<Rational> uncovered_point;
  std::optional<Rational> uncovered_measure;
  std::optional<std::size_t> avoided_points;  ///< q_0..q_{k-1} outside closure(O_N)
  std::optional<Rejection> rejection;
  std::string note;
};

struct Verdict {
  Outcome outcome = Outcome::Truncated;
  std::string winner;
  Certificate certificate;

  int exit_code() const {
    if (outcome == Outcome::Forfeit) return 2;
    if (outcome == Outcome::InvariantViolated) return 3;
    return 0;
  }
};

struct Transcript {
  GameConfig config;
  std::vector<Record> records;
  Verdict verdict;

  std::vector<const InningRecord*> innings() const {
    std::vector<const InningRecord*> out;
    for (const auto& r : records)
      if (const auto* i = std::get_if<InningRecord>(&r)) out.push_back(i);
    return out;
  }
  RSet two_union() const {
    RSet u;
    for (const auto* i : innings()) u = set_union(u, union_all(i->two));
    return u;
  }
};

/// The space TWO plays in: the subspace when the game was lifted to one.
inline Interval effective_ambient(const GameConfig& c) { return c.subspace.value_or(c.ambient); }

inline TargetSpec effective_target(const GameConfig& c) { return c.subspace ? TargetSpec{} : c.target; }

/// The target as an exact set, when it is one.
inline std::optional<RSet> target_set(const GameConfig& c) {
  TargetSpec t = effective_target(c);
  if (t.kind == TargetSpec::Kind::Full) return RSet(effective_ambient(c));
  if (t.kind == TargetSpec::Kind::ClosedRSet) return t.closed;
  return std::nullopt;
}

/// Game restricted to a closed subspace Y: covers are traced on Y and Y is the target.
inline GameConfig lift_to_closed_subspace(GameConfig config, const RSet& subspace) {
  if (subspace.empty()) throw DomainError("subspace is empty");
  if (subspace.size() != 1 || !subspace.front().is_closed() || subspace.front().is_point())
    throw DomainError("subspace must be a single closed interval of positive length, got " + subspace.str());
  if (!config.ambient.contains(subspace.front())) throw DomainError("subspace " + subspace.str() + " is not inside the ambient");
  config.subspace = subspace.front();
  config.target = TargetSpec{};
  return config;
}

namespace detail {

struct ForfeitSignal {
  Rejection rejection;
};

/// Re-derives the nested-closure chain from the transcript instead of trusting ONE's bookkeeping.
inline Certificate verify_nested(const Transcript& tr, const OneMainState& state, const std::optional<GDeltaSpec>& avoided) {
  auto innings = tr.innings();
  const auto& chain = state.chain;
  if (chain.size() != innings.size() || state.bm.one_moves.empty())
    throw InvariantViolation("nested chain has " + std::to_string(chain.size()) + " links for " + std::to_string(innings.size()) + " innings");
  RSet o = state.bm.one_moves.front();
  for (std::size_t n = 0; n < chain.size(); ++n) {
    const auto& link = chain[n];
    std::string at = " at inning " + std::to_string(n);
    if (!(link.o == o)) throw InvariantViolation("O_n does not continue the chain" + at);
    for (const auto& m : innings[n]->one)
      if (is_subset(o, closure(m))) throw InvariantViolation("a cover member's closure contains O_n" + at);
    RSet shadow;
    for (const auto& f : innings[n]->two) shadow = set_union(shadow, closure(f));
    RSet t = subtract(o, shadow);
    if (!(t == link.t)) throw InvariantViolation("T_n differs from O_n minus TWO's closures" + at);
    if (link.o_next.empty() || !is_subset(closure(link.o_next), t) || !is_subset(t, o))
      throw InvariantViolation("closure(O_{n+1}) in T_n in O_n fails" + at);
    o = link.o_next;
  }
  Certificate c;
  c.nested = chain;
  RSet u = tr.two_union();
  if (intersects(o, u)) throw InvariantViolation("final O_N meets TWO's union");
  c.uncovered_open = o;
  if (avoided) {
    for (std::size_t k = 0; k < chain.size(); ++k)
      if (contains_point(closure(o), avoided->points().at(k)))
        throw InvariantViolation("closure(O_N) contains q_" + std::to_string(k));
    c.avoided_points = chain.size();
  }
  c.union_set = u;
  return c;
}

}  // namespace detail

/// Coverage and win adjudication of a finished (or truncated) play.
inline Verdict adjudicate(const Transcript& tr, bool complete, const OnePlayer& one) {
  const GameConfig& cfg = tr.config;
  const Interval amb = effective_ambient(cfg);
  const TargetSpec target = effective_target(cfg);
  const RSet u = tr.two_union();
  const std::size_t n = tr.innings().size();
  Verdict v;
  v.certificate.union_set = u;

  bool covered = false;
  std::optional<Rational> missed;
  std::optional<RSet> missed_open;
  if (auto ts = target_set(cfg)) {
    RSet rest = subtract(*ts, u);
    covered = rest.empty();
    v.certificate.coverage_basis = "exact";
    if (!covered) {
      v.certificate.uncovered_measure = measure(rest);
      const Interval& f = rest.front();
      missed = f.lo_open() ? midpoint(f.lo(), f.hi()) : f.lo();
    }
  } else if (target.kind == TargetSpec::Kind::Cantor) {
    auto c = cantor_covered(u, CantorSpec{amb});
    covered = c.covered;
    missed = c.missed;
    v.certificate.coverage_basis = c.decided ? "exact" : "undecided";
  } else {
    RationalEnumeration points(target.sequence);
    v.certificate.coverage_basis = "materialized points q_0..q_" + std::to_string(n ? n - 1 : 0);
    v.certificate.avoided_points.reset();
    covered = true;
    if (target.kind == TargetSpec::Kind::Countable) {
      for (std::size_t k = 0; k < n && covered; ++k)
        if (!contains_point(u, points.at(k))) {
          covered = false;
          missed = points.at(k);
        }
    } else {
      RSet rest = subtract(RSet(amb), u);
      for (const auto& iv : rest.components()) {
        bool deleted = false;
        if (iv.is_point())
          for (std::size_t k = 0; k < n && !deleted; ++k) deleted = points.at(k) == iv.lo();
        if (!deleted) {
          covered = false;
          if (!iv.is_point()) missed_open = RSet(Interval::open(iv.lo(), iv.hi()));
          break;
        }
      }
    }
  }

  if (covered) {
    v.outcome = Outcome::TwoWinsCovered;
    v.winner = "two";
    return v;
  }

  if (const OneMainState* st = one.nested_state(); st && !st->chain.empty()) {
    Certificate c = detail::verify_nested(tr, *st, one.avoided_points());
    RSet in_target = c.uncovered_open ? *c.uncovered_open : RSet();
    if (auto ts = target_set(cfg)) in_target = interior(intersect(in_target, *ts));
    if (!in_target.empty() && target.kind != TargetSpec::Kind::Cantor) {
      c.uncovered_open = in_target;
      c.coverage_basis = v.certificate.coverage_basis;
      c.uncovered_measure = v.certificate.uncovered_measure;
      v.certificate = std::move(c);
      v.outcome = Outcome::OneWinsCertified;
      v.winner = "one";
      return v;
    }
  }

  if (complete && (missed || missed_open)) {
    v.outcome = Outcome::OneWinsUncovered;
    v.winner = "one";
    v.certificate.uncovered_point = missed;
    v.certificate.uncovered_open = missed_open;
    return v;
  }
  v.outcome = Outcome::Truncated;
  v.certificate.uncovered_point = missed;
  v.certificate.note = "play truncated before a decision; no claim for ONE from mere non-coverage";
  return v;
}

// ---------------------------------------------------------------------------
// Driver

namespace detail {

class Match {
 public:
  explicit Match(GameConfig cfg) : tr_{std::move(cfg), {}, {}} {
    const GameConfig& c = tr_.config;
    check_config();
    PlayContext one_ctx{c.one_home.value_or(effective_ambient(c)), effective_target(c), c.ruleset};
    one_ = make_one(c.one, one_ctx);
    if (c.one_home) one_ = std::make_unique<LiftedOne>(std::move(one_), *c.one_home, c.ambient);
    two_ = make_two(c.two, ctx_);
    prepare();
  }

  Match(GameConfig cfg, std::unique_ptr<OnePlayer> one, std::unique_ptr<TwoPlayer> two)
      : tr_{std::move(cfg), {}, {}}, one_(std::move(one)), two_(std::move(two)) {
    check_config();
    tr_.config.one = one_->id();
    tr_.config.two = two_->id();
    prepare();
  }

  void check_config() {
    const GameConfig& c = tr_.config;
    if (c.length.is_zero()) throw ConfigError("game length must be positive");
    if (!c.ambient.is_closed() || c.ambient.is_point()) throw ConfigError("ambient must be a closed interval of positive length");
    ctx_ = PlayContext{effective_ambient(c), effective_target(c), c.ruleset};
  }

  void prepare() {
    labels_ = inning_iterator(tr_.config.length, tr_.config.schedule);
    for (std::size_t i = 0; i + 1 < labels_.size(); ++i)
      if (has_limit_inning(i) && !one_->declares_digest())
        throw ConfigError(one_->id() + " has no digest-declared limit move; games with a limit inning need one");
  }

  Transcript run() {
    bool complete = true;
    try {
      for (std::size_t i = 0; i < labels_.size(); ++i) {
        const InningLabel& label = labels_[i];
        if (!label.limit_marker) {
          play_inning(label.ordinal, one_call([&] { return one_->cover(label); }), false, false);
          continue;
        }
        if (has_limit_inning(i)) {
          play_limit(label.ordinal);
          ++i;
        } else {
          complete = false;
        }
      }
      tr_.verdict = adjudicate(tr_, complete, *one_);
    } catch (const ForfeitSignal& f) {
      tr_.verdict = Verdict{};
      tr_.verdict.outcome = Outcome::Forfeit;
      tr_.verdict.winner = f.rejection.offender == "one" ? "two" : "one";
      tr_.verdict.certificate.rejection = f.rejection;
    } catch (const InvariantViolation& e) {
      tr_.verdict = Verdict{};
      tr_.verdict.outcome = Outcome::InvariantViolated;
      tr_.verdict.certificate.note = e.what();
    }
    return std::move(tr_);
  }

 private:
  class Extensions : public ExtensionSource {
   public:
    explicit Extensions(Match& m) : m_(m) {}
    std::optional<Cover> next_cover() override {
      label_ = m_.last_.successor();
      pending_.emplace(m_.one_call([&] { return m_.one_->cover(InningLabel{label_, false}); }));
      return pending_;
    }
    void answer(const DiscreteFamily& family) override {
      if (!pending_) throw ProtocolError("extension answer without a cover");
      m_.record_inning(label_, *pending_, family.members(), true, false);
      pending_.reset();
      ++count_;
    }
    std::size_t count() const { return count_; }

   private:
    Match& m_;
    Ordinal label_;
    std::optional<Cover> pending_;
    std::size_t count_ = 0;
  };

  bool has_limit_inning(std::size_t i) const {
    return labels_[i].limit_marker && i + 1 < labels_.size() && !labels_[i + 1].limit_marker &&
           labels_[i + 1].ordinal == labels_[i].ordinal;
  }

  /// ONE's cover traced on the subspace and validated; failures forfeit.
  template <class F>
  Cover one_call(F&& f) {
    std::optional<Cover> raw;
    try {
      raw.emplace(f());
    } catch (const InvariantViolation&) {
      throw;
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ForfeitSignal{Rejection{"StrategyFailure", "one", std::nullopt, std::nullopt, std::nullopt, e.what()}};
    }
    std::vector<RSet> members;
    RSet amb(ctx_.ambient);
    for (const auto& m : raw->members()) {
      if (!tr_.config.subspace) {
        members.push_back(m);
      } else if (RSet t = intersect(m, amb); !t.empty()) {
        members.push_back(std::move(t));
      }
    }
    if (auto bad = validate_cover(members, ctx_.ambient, ctx_.target)) throw ForfeitSignal{*bad};
    return Cover(RSet(), std::move(members));
  }

  template <class F>
  std::vector<RSet> two_call(F&& f) {
    try {
      return f();
    } catch (const InvariantViolation&) {
      throw;
    } catch (const ForfeitSignal&) {
      throw;
    } catch (const Error& e) {
      throw ForfeitSignal{Rejection{"StrategyFailure", "two", std::nullopt, std::nullopt, std::nullopt, e.what()}};
    }
  }

  void record_inning(const Ordinal& label, const Cover& cover, const std::vector<RSet>& family, bool extension, bool limit) {
    auto judged = referee_step(ctx_.ruleset, cover, family, RSet(ctx_.ambient));
    if (!judged.accepted()) throw ForfeitSignal{*judged.rejection};
    tr_.records.push_back(InningRecord{label, extension, limit, cover.members(), family, judged.refinement.ok,
                                       ctx_.ruleset, judged.min_gap});
    last_ = label;
    InningLabel seen{label, false};
    one_->observe(seen, family);
  }

  void play_inning(const Ordinal& label, const Cover& cover, bool extension, bool limit) {
    auto family = two_call([&] { return two_->respond(InningLabel{label, false}, cover); });
    record_inning(label, cover, family, extension, limit);
  }

  void play_limit(const Ordinal& limit) {
    LimitDigest digest;
    digest.innings = tr_.innings().size();
    RSet u = tr_.two_union();
    if (auto ts = target_set(tr_.config)) u = intersect(u, *ts);
    digest.covered_measure = measure(u);
    Cover limit_cover = one_call([&] { return one_->limit_cover(digest); });
    std::size_t marker_at = tr_.records.size();
    tr_.records.push_back(LimitRecord{limit, digest, 0});
    Extensions ext(*this);
    RSet amb(ctx_.ambient);
    Cover judged_cover = limit_cover;
    if (auto full = detail::over_ambient(limit_cover, ctx_.ambient)) judged_cover = *full;
    auto family = two_call([&] { return two_->respond_limit(InningLabel{limit, false}, judged_cover, ext); });
    std::get<LimitRecord>(tr_.records[marker_at]).extensions = ext.count();
    record_inning(limit, limit_cover, family, false, true);
  }

  Transcript tr_;
  PlayContext ctx_;
  std::unique_ptr<OnePlayer> one_;
  std::unique_ptr<TwoPlayer> two_;
  std::vector<InningLabel> labels_;
  Ordinal last_;
};

}  // namespace detail

/// Runs a match to completion or truncation. Illegal moves end the play as a
/// forfeit; ConfigError is thrown for configurations that cannot run.
inline Transcript play(const GameConfig& config) { return detail::Match(config).run(); }

/// Same, with caller-supplied players (interactive sessions, wrappers).
inline Transcript play(const GameConfig& config, std::unique_ptr<OnePlayer> one, std::unique_ptr<TwoPlayer> two) {
  return detail::Match(config, std::move(one), std::move(two)).run();
}

/// Re-judges every recorded inning under another ruleset and re-adjudicates coverage.
struct Rejudgement {
  bool all_accepted = true;
  std::optional<Rejection> first_rejection;
  bool covered = false;
};

inline Rejudgement rereferee(const Transcript& tr, Ruleset ruleset) {
  Rejudgement r;
  RSet amb(effective_ambient(tr.config));
  for (const auto* inning : tr.innings()) {
    auto judged = referee_step(ruleset, std::span<const RSet>(inning->one), inning->two, amb);
    if (!judged.accepted()) {
      r.all_accepted = false;
      if (!r.first_rejection) r.first_rejection = judged.rejection;
    }
  }
  if (auto ts = target_set(tr.config)) r.covered = is_subset(*ts, tr.two_union());
  return r;
}

// ---------------------------------------------------------------------------
// Length brackets

struct BracketCell {
  std::string length;
  std::string one;
  std::string two;
  std::string outcome;  ///< a verdict outcome or "ineligible"
  std::string winner;   ///< "one", "two" or empty
  std::string note;
};

struct BracketReport {
  std::vector<BracketCell> cells;
  std::vector<std::string> lengths;
  std::optional<std::string> two_sweep_from;  ///< smallest length where one TWO bot beat every eligible ONE bot
  std::optional<std::string> one_sweep_upto;  ///< largest length where one ONE bot beat every TWO bot
  bool two_sweeps_persist = true;             ///< a TWO sweep at a length persists at every later length
  std::vector<bool> two_sweep;
  std::vector<bool> one_sweep;
  std::string label = "experimental bracket, not tp_d";
};

inline BracketReport length_bracket_report(const Interval& ambient, const TargetSpec& target,
                                           const std::vector<std::string>& one_catalog_ids,
                                           const std::vector<std::string>& two_catalog_ids,
                                           const std::vector<Ordinal>& lengths, const InningSchedule& schedule,
                                           Ruleset ruleset = Ruleset::Discrete) {
  if (one_catalog_ids.empty() || two_catalog_ids.empty()) throw DomainError("catalogs must be nonempty");
  BracketReport rep;
  for (const auto& len : lengths) {
    rep.lengths.push_back(len.str());
    std::vector<std::vector<std::string>> grid(two_catalog_ids.size(), std::vector<std::string>(one_catalog_ids.size()));
    for (std::size_t t = 0; t < two_catalog_ids.size(); ++t)
      for (std::size_t o = 0; o < one_catalog_ids.size(); ++o) {
        GameConfig cfg;
        cfg.ruleset = ruleset;
        cfg.length = len;
        cfg.ambient = ambient;
        cfg.target = target;
        cfg.one = one_catalog_ids[o];
        cfg.two = two_catalog_ids[t];
        cfg.schedule = schedule;
        BracketCell cell{len.str(), cfg.one, cfg.two, "", "", ""};
        try {
          Verdict v = play(cfg).verdict;
          cell.outcome = to_string(v.outcome);
          cell.winner = v.winner;
          grid[t][o] = v.winner;
        } catch (const ConfigError& e) {
          cell.outcome = "ineligible";
          cell.note = e.what();
          grid[t][o] = "ineligible";
        }
        rep.cells.push_back(std::move(cell));
      }
    bool two_sweep = false;
    for (std::size_t t = 0; t < two_catalog_ids.size() && !two_sweep; ++t) {
      bool all = true, any = false;
      for (std::size_t o = 0; o < one_catalog_ids.size(); ++o) {
        if (grid[t][o] == "ineligible") continue;
        any = true;
        all = all && grid[t][o] == "two";
      }
      two_sweep = any && all;
    }
    bool one_sweep = false;
    for (std::size_t o = 0; o < one_catalog_ids.size() && !one_sweep; ++o) {
      bool all = true;
      for (std::size_t t = 0; t < two_catalog_ids.size(); ++t) {
        all = all && grid[t][o] == "one";
      }
      one_sweep = all;
    }
    rep.two_sweep.push_back(two_sweep);
    rep.one_sweep.push_back(one_sweep);
    if (two_sweep && !rep.two_sweep_from) rep.two_sweep_from = len.str();
    if (one_sweep) rep.one_sweep_upto = len.str();
  }
  bool seen = false;
  for (bool s : rep.two_sweep) {
    if (seen && !s) rep.two_sweeps_persist = false;
    seen = seen || s;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Banach-Mazur matches against a first-category target

struct BMRound {
  RSet one;                  ///< O_n
  RSet two;                  ///< T_n
  RSet nowhere_dense;        ///< F_n
  bool nested = true;        ///< O_n in T_{n-1}, closure(T_n) in O_n
  bool avoids = true;        ///< closure(T_n) misses F_n
};

struct BMPlay {
  std::vector<BMRound> rounds;
  bool ok() const {
    for (const auto& r : rounds)
      if (!r.nested || !r.avoids) return false;
    return true;
  }
};

/// ONE plays `one`; TWO answers with bm_two_first_category against F_n = {q_n}.
inline BMPlay play_banach_mazur(const BMStrategy& one, const RationalEnumeration& points, std::size_t innings) {
  BMPlay play;
  BMState state;
  for (std::size_t n = 0; n < innings; ++n) {
    RSet o(one(state));
    RSet f(Interval::point(points.at(n)));
    RSet t = bm_two_first_category(f, o);
    BMRound r{o, t, f, true, true};
    if (!state.two_moves.empty()) r.nested = is_subset(o, state.two_moves.back());
    r.nested = r.nested && is_subset(closure(t), o);
    r.avoids = !intersects(closure(t), f);
    state.one_moves.push_back(o);
    state.two_moves.push_back(t);
    play.rounds.push_back(std::move(r));
  }
  return play;
}

}  // namespace sscreen

#endif
