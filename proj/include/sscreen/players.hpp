#ifndef SSCREEN_PLAYERS_HPP
#define SSCREEN_PLAYERS_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "game.hpp"
#include "one_strategies.hpp"
#include "two_strategies.hpp"

namespace sscreen {

/// TWO's side of the selection game.
class TwoPlayer {
 public:
  virtual ~TwoPlayer() = default;
  virtual std::string id() const = 0;
  virtual std::vector<RSet> respond(const InningLabel& inning, const Cover& cover) = 0;
  /// Move at a limit inning; may materialize extension innings through `ext` first.
  virtual std::vector<RSet> respond_limit(const InningLabel& inning, const Cover& limit_cover, ExtensionSource& ext) {
    (void)ext;
    return respond(inning, limit_cover);
  }
};

/// ONE's side of the selection game.
class OnePlayer {
 public:
  virtual ~OnePlayer() = default;
  virtual std::string id() const = 0;
  virtual Cover cover(const InningLabel& inning) = 0;
  virtual void observe(const InningLabel& inning, const std::vector<RSet>& family) {
    (void)inning;
    (void)family;
  }
  /// Whether limit moves are a function of the finite digest only.
  virtual bool declares_digest() const { return false; }
  virtual Cover limit_cover(const LimitDigest& digest) {
    (void)digest;
    throw ConfigError(id() + " declares no limit digest");
  }
  /// Banach-Mazur bookkeeping of the main strategies (nullptr for the others).
  virtual const OneMainState* nested_state() const { return nullptr; }
  /// Points the play promises to avoid (G_delta variant).
  virtual std::optional<GDeltaSpec> avoided_points() const { return std::nullopt; }
};

namespace detail {

inline std::string_view strip_prefix(std::string_view id, std::string_view prefix) {
  if (id.substr(0, prefix.size()) == prefix) id.remove_prefix(prefix.size());
  return id;
}

/// Cover of the ambient, or nullopt when the cover leaves part of it open.
inline std::optional<Cover> over_ambient(const Cover& cover, const Interval& ambient) {
  RSet amb(ambient);
  if (!is_subset(amb, cover.union_set())) return std::nullopt;
  return cover.retarget(amb);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// TWO catalog

class EmptyTwo : public TwoPlayer {
 public:
  std::string id() const override { return "two:empty"; }
  std::vector<RSet> respond(const InningLabel&, const Cover&) override { return {}; }
};

/// Answers with the cover's first member.
class FirstMemberTwo : public TwoPlayer {
 public:
  std::string id() const override { return "two:first-member"; }
  std::vector<RSet> respond(const InningLabel&, const Cover& cover) override {
    if (cover.size() == 0) return {};
    return {cover.members().front()};
  }
};

/// One-shot attempt at covering everything: the chain pieces of the cover,
/// pulled back from each puncture by a quarter of the shortest piece.
class GreedyTwo : public TwoPlayer {
 public:
  explicit GreedyTwo(PlayContext ctx) : ctx_(std::move(ctx)) {}
  std::string id() const override { return "two:greedy"; }
  std::vector<RSet> respond(const InningLabel&, const Cover& cover) override {
    auto full = detail::over_ambient(cover, ctx_.ambient);
    if (!full) return {};
    auto chain = chain_puncture_refinement(*full);
    if (chain.punctures.empty()) return chain.family;
    Rational shortest = ctx_.ambient.length();
    for (const auto& m : chain.family) shortest = min(shortest, m.front().length());
    Rational g = shortest / Rational(4);
    std::vector<RSet> out;
    for (const auto& m : chain.family) {
      const Interval& iv = m.front();
      LowerBound lo = iv.lower();
      UpperBound hi = iv.upper();
      if (iv.lo_open()) lo.value = lo.value + g;
      if (iv.hi_open()) hi.value = hi.value - g;
      out.emplace_back(Interval(lo, hi));
    }
    return out;
  }

 private:
  PlayContext ctx_;
};

/// Halving at every materialized inning; with `limit_aware`, the limit move
/// requests extensions and fattens the residual.
class HalvingTwo : public TwoPlayer {
 public:
  HalvingTwo(PlayContext ctx, bool limit_aware)
      : ctx_(std::move(ctx)), limit_aware_(limit_aware), state_(HalvingState::initial(ctx_.ambient)) {}
  std::string id() const override { return limit_aware_ ? "two:halving-omega-plus-1" : "two:halving"; }

  std::vector<RSet> respond(const InningLabel&, const Cover& cover) override {
    if (state_.residual.empty()) return {};
    auto step = halving_step(state_, cover);
    state_ = std::move(step.state);
    return step.family.members();
  }

  std::vector<RSet> respond_limit(const InningLabel& inning, const Cover& limit_cover, ExtensionSource& ext) override {
    if (!limit_aware_) return respond(inning, limit_cover);
    auto move = limit_move(state_, limit_cover, ext, ctx_.ambient);
    state_ = HalvingState{{}, move.state.inning};
    return move.family.members();
  }

  const HalvingState& state() const { return state_; }

 private:
  PlayContext ctx_;
  bool limit_aware_;
  HalvingState state_;
};

class CantorOneShotTwo : public TwoPlayer {
 public:
  explicit CantorOneShotTwo(PlayContext ctx) : spec_{ctx.ambient} {}
  std::string id() const override { return "two:cantor-oneshot"; }
  std::vector<RSet> respond(const InningLabel&, const Cover& cover) override {
    if (done_) return {};
    done_ = true;
    return cantor_one_shot(cover, spec_).family.members();
  }

 private:
  CantorSpec spec_;
  bool done_ = false;
};

/// Covers the k-th enumerated point at its k-th inning.
class CountableTwo : public TwoPlayer {
 public:
  CountableTwo(PlayContext ctx, std::string sequence) : ctx_(std::move(ctx)), points_(std::move(sequence)) {}
  std::string id() const override { return "two:countable:" + points_.id(); }
  std::vector<RSet> respond(const InningLabel&, const Cover& cover) override {
    std::size_t k = next_++;
    if (!contains_point(cover.union_set(), points_.at(k))) return {};
    return countable_target_move(points_, k, cover, ctx_.ambient).members();
  }

 private:
  PlayContext ctx_;
  RationalEnumeration points_;
  std::size_t next_ = 0;
};

/// Disjoint-game win in two innings: punctured chain, then the clean-up.
class ChainPunctureTwo : public TwoPlayer {
 public:
  explicit ChainPunctureTwo(PlayContext ctx) : ctx_(std::move(ctx)) {}
  std::string id() const override { return "two:chain-puncture"; }
  std::vector<RSet> respond(const InningLabel&, const Cover& cover) override {
    switch (turn_++) {
      case 0: {
        auto full = detail::over_ambient(cover, ctx_.ambient);
        if (!full) throw DomainError("chain-puncture needs a cover of the ambient");
        auto chain = chain_puncture_refinement(*full);
        punctures_ = chain.punctures;
        return chain.family;
      }
      case 1: return puncture_cleanup(punctures_, cover, ctx_.ambient).members();
      default: return {};
    }
  }

 private:
  PlayContext ctx_;
  std::vector<Rational> punctures_;
  int turn_ = 0;
};

// ---------------------------------------------------------------------------
// ONE catalog

/// Oblivious ball covers: the k-th materialized inning plays B_{k+1}; the
/// limit inning plays B_{innings+1}.
class GridOne : public OnePlayer {
 public:
  explicit GridOne(PlayContext ctx) : ctx_(std::move(ctx)) {}
  std::string id() const override { return "one:grid"; }
  Cover cover(const InningLabel&) override { return ball_cover({static_cast<int>(++played_)}, ctx_.ambient); }
  bool declares_digest() const override { return true; }
  Cover limit_cover(const LimitDigest& d) override { return ball_cover({static_cast<int>(d.innings + 1)}, ctx_.ambient); }

 private:
  PlayContext ctx_;
  std::uint64_t played_ = 0;
};

/// The same avoid_cover of the ambient's middle half at every inning.
class AvoidFixedOne : public OnePlayer {
 public:
  explicit AvoidFixedOne(PlayContext ctx) : ctx_(std::move(ctx)) {}
  std::string id() const override { return "one:avoid-fixed"; }
  Cover cover(const InningLabel&) override { return avoid_cover(middle_half(ctx_.ambient), ctx_.ambient); }
  bool declares_digest() const override { return true; }
  Cover limit_cover(const LimitDigest&) override { return cover({}); }

 private:
  PlayContext ctx_;
};

/// Banach-Mazur driven cover avoidance.
class MainOne : public OnePlayer {
 public:
  MainOne(PlayContext ctx, std::optional<GDeltaSpec> gdelta) : ctx_(std::move(ctx)), gdelta_(std::move(gdelta)) {
    bm_ = gdelta_ ? bm_one_dense_gdelta(*gdelta_, ctx_.ambient) : bm_one_compact(ctx_.ambient);
    auto start = one_main_start(bm_, ctx_.ambient);
    next_.emplace(std::move(start.cover));
    state_ = std::move(start.state);
  }
  std::string id() const override { return gdelta_ ? "one:main-gdelta:" + gdelta_->enumeration : "one:main-compact"; }
  Cover cover(const InningLabel&) override { return *next_; }
  void observe(const InningLabel&, const std::vector<RSet>& family) override {
    auto step = one_main_step(bm_, std::move(state_), family, ctx_.ambient);
    next_.emplace(std::move(step.cover));
    state_ = std::move(step.state);
  }
  const OneMainState* nested_state() const override { return &state_; }
  std::optional<GDeltaSpec> avoided_points() const override { return gdelta_; }

 private:
  PlayContext ctx_;
  std::optional<GDeltaSpec> gdelta_;
  BMStrategy bm_;
  OneMainState state_;
  std::optional<Cover> next_;
};

/// ONE plays `inner` on a closed subinterval Y of the ambient X: each member M
/// becomes M u (X \ Y), and TWO's sets are traced on Y before `inner` sees them.
class LiftedOne : public OnePlayer {
 public:
  LiftedOne(std::unique_ptr<OnePlayer> inner, Interval home, Interval ambient)
      : inner_(std::move(inner)), home_(std::move(home)), ambient_(std::move(ambient)) {
    if (!ambient_.contains(home_) || !home_.is_closed()) throw ConfigError("ONE's home must be a closed subinterval of the ambient");
  }
  std::string id() const override { return inner_->id() + "@" + home_.str(); }
  Cover cover(const InningLabel& inning) override { return lift(inner_->cover(inning)); }
  void observe(const InningLabel& inning, const std::vector<RSet>& family) override { inner_->observe(inning, trace(family)); }
  bool declares_digest() const override { return inner_->declares_digest(); }
  Cover limit_cover(const LimitDigest& d) override { return lift(inner_->limit_cover(d)); }
  const OneMainState* nested_state() const override { return inner_->nested_state(); }
  std::optional<GDeltaSpec> avoided_points() const override { return inner_->avoided_points(); }

 private:
  Cover lift(const Cover& c) const {
    RSet outside = subtract(RSet(ambient_), RSet(home_));
    std::vector<RSet> members;
    for (const auto& m : c.members()) members.push_back(set_union(m, outside));
    return Cover(RSet(ambient_), std::move(members));
  }
  std::vector<RSet> trace(const std::vector<RSet>& family) const {
    std::vector<RSet> out;
    for (const auto& f : family) out.push_back(intersect(f, RSet(home_)));
    return out;
  }

  std::unique_ptr<OnePlayer> inner_;
  Interval home_;
  Interval ambient_;
};

// ---------------------------------------------------------------------------
// Factories

inline std::vector<std::string> two_catalog() {
  return {"two:empty", "two:first-member", "two:greedy", "two:halving", "two:halving-omega-plus-1", "two:cantor-oneshot",
          "two:countable:farey", "two:countable:triadic", "two:chain-puncture"};
}

inline std::vector<std::string> one_catalog() { return {"one:grid", "one:avoid-fixed", "one:main-compact", "one:main-gdelta:farey"}; }

/// Canonical id with the side prefix.
inline std::string canonical_id(std::string_view id, std::string_view side) {
  std::string prefix = std::string(side) + ":";
  return prefix + std::string(detail::strip_prefix(id, prefix));
}

inline std::unique_ptr<TwoPlayer> make_two(std::string_view id, const PlayContext& ctx) {
  std::string_view s = detail::strip_prefix(id, "two:");
  if (s == "empty") return std::make_unique<EmptyTwo>();
  if (s == "first-member") return std::make_unique<FirstMemberTwo>();
  if (s == "greedy") return std::make_unique<GreedyTwo>(ctx);
  if (s == "halving") return std::make_unique<HalvingTwo>(ctx, false);
  if (s == "halving-omega-plus-1") return std::make_unique<HalvingTwo>(ctx, true);
  if (s == "cantor-oneshot") return std::make_unique<CantorOneShotTwo>(ctx);
  if (s == "chain-puncture") return std::make_unique<ChainPunctureTwo>(ctx);
  if (s.substr(0, 10) == "countable:") {
    try {
      return std::make_unique<CountableTwo>(ctx, std::string(s.substr(10)));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  if (s.substr(0, 18) == "bm-first-category:")
    throw ConfigError("two:bm-first-category is a Banach-Mazur strategy; use `play --game bm`");
  throw ConfigError("unknown TWO strategy '" + std::string(id) + "'");
}

inline std::unique_ptr<OnePlayer> make_one(std::string_view id, const PlayContext& ctx) {
  std::string_view s = detail::strip_prefix(id, "one:");
  if (s == "grid") return std::make_unique<GridOne>(ctx);
  if (s == "avoid-fixed") return std::make_unique<AvoidFixedOne>(ctx);
  if (s == "main-compact") return std::make_unique<MainOne>(ctx, std::nullopt);
  if (s.substr(0, 12) == "main-gdelta:") {
    std::string seq(s.substr(12));
    try {
      RationalEnumeration check(seq);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    return std::make_unique<MainOne>(ctx, GDeltaSpec{seq});
  }
  throw ConfigError("unknown ONE strategy '" + std::string(id) + "'");
}

}  // namespace sscreen

#endif
