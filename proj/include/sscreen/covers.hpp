#ifndef SSCREEN_COVERS_HPP
#define SSCREEN_COVERS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "families.hpp"
#include "rset.hpp"

namespace sscreen {

/// A finite family of nonempty sets whose union contains `target`.
/// Openness is relative to a game's ambient space and checked by the referee.
class Cover {
 public:
  Cover(RSet target, std::vector<RSet> members) : target_(std::move(target)), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (members_[i].empty()) throw DomainError("cover member " + std::to_string(i) + " is empty");
    if (auto gap = uncovered_point()) throw DomainError("members do not cover the target: " + gap->str() + " missed");
  }

  const RSet& target() const { return target_; }
  const std::vector<RSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  RSet union_set() const { return union_all(members_); }

  /// A point of the target outside every member, if any.
  std::optional<Rational> uncovered_point() const {
    RSet rest = subtract(target_, union_set());
    if (rest.empty()) return std::nullopt;
    const Interval& first = rest.front();
    if (!first.lo_open()) return first.lo();
    return midpoint(first.lo(), first.hi());
  }

  /// Same members, new target (must still be covered).
  Cover retarget(RSet target) const { return Cover(std::move(target), members_); }

 private:
  RSet target_;
  std::vector<RSet> members_;
};

/// Index n of the ball cover B_n (members of diameter below 2^-n).
struct BallIndex {
  int n = 1;
};

namespace detail {

inline const Interval& single_closed_target(const Cover& cover) {
  const RSet& t = cover.target();
  if (t.size() != 1 || !t.front().is_closed() || t.front().is_point())
    throw DomainError("target must be a single closed interval of positive length, got " + t.str());
  return t.front();
}

/// Member components that meet [a,b], tagged with their member index.
inline std::vector<TaggedPart> parts_meeting(const Cover& cover, const Rational& a, const Rational& b) {
  std::vector<TaggedPart> out;
  for (std::size_t m = 0; m < cover.size(); ++m)
    for (const auto& iv : cover.members()[m].components())
      if (iv.lo() <= b && a <= iv.hi()) out.push_back({iv, m});
  return out;
}

}  // namespace detail

/// Supremum of the window lengths d for which every closed window [x, x+d]
/// inside the target interval lies in a single member, capped at the target length.
///
/// Between consecutive critical values (component endpoints inside [a,b]) the
/// set of members containing x is constant, so the best reach R(x) - x is
/// linear there; only windows with R(x) < b can block, and their infimum is
/// taken at segment ends.
inline Rational lebesgue_supremum(const Cover& cover) {
  const Interval& target = detail::single_closed_target(cover);
  const Rational& a = target.lo();
  const Rational& b = target.hi();
  auto parts = detail::parts_meeting(cover, a, b);
  std::sort(parts.begin(), parts.end(), [](const detail::TaggedPart& x, const detail::TaggedPart& y) { return x.part.lower() < y.part.lower(); });

  std::vector<Rational> events{a, b};
  for (const auto& p : parts) {
    if (a < p.part.lo() && p.part.lo() < b) events.push_back(p.part.lo());
    if (a < p.part.hi() && p.part.hi() < b) events.push_back(p.part.hi());
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  Rational best = b - a;
  std::size_t next = 0;
  std::optional<UpperBound> reach;
  auto absorb_until = [&](const LowerBound& cut) {
    while (next < parts.size() && !(cut < parts[next].part.lower())) {
      if (!reach || *reach < parts[next].part.upper()) reach = parts[next].part.upper();
      ++next;
    }
  };
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Rational& v = events[i];
    absorb_until(LowerBound{v, false});
    if (!reach || !nonempty(LowerBound{v, false}, *reach))
      throw DomainError("cover leaves " + v.str() + " uncovered");
    if (reach->value < b) best = min(best, reach->value - v);
    if (i + 1 == events.size()) break;
    absorb_until(LowerBound{v, true});
    const Rational& w = events[i + 1];
    if (reach->value < w) throw DomainError("cover leaves (" + v.str() + "," + w.str() + ") partly uncovered");
    if (reach->value < b) best = min(best, reach->value - w);
  }
  if (best.sign() <= 0) throw DomainError("cover has no positive Lebesgue number (members not open)");
  return best;
}

/// A verified Lebesgue number: half the supremum, because the supremum itself may fail.
inline Rational lebesgue_number(const Cover& cover) { return lebesgue_supremum(cover) / Rational(2); }

struct LebesgueCheck {
  bool ok = true;
  std::optional<Interval> counterexample;  ///< a window in no single member
};

/// Every closed window [x, x+delta] inside the target lies in one member iff
/// [a, b-delta] is covered by the shrunken components {x : [x, x+delta] in (l,r)}.
inline LebesgueCheck verify_lebesgue(const Cover& cover, const Rational& delta) {
  if (delta.sign() <= 0) throw DomainError("window length must be positive");
  const Interval& target = detail::single_closed_target(cover);
  const Rational& a = target.lo();
  const Rational& b = target.hi();
  if (b - a < delta) return {};
  std::vector<Interval> shrunk;
  for (const auto& p : detail::parts_meeting(cover, a, b))
    if (auto s = Interval::make(p.part.lower(), UpperBound{p.part.hi() - delta, p.part.hi_open()})) shrunk.push_back(*s);
  RSet starts = subtract(RSet(Interval::closed(a, b - delta)), RSet::normalize(std::move(shrunk)));
  if (starts.empty()) return {};
  const Interval& first = starts.front();
  Rational x = first.lo_open() ? midpoint(first.lo(), first.hi()) : first.lo();
  return {false, Interval::closed(x, x + delta)};
}

/// Finite dyadic substitute for B_n over an ambient interval: the open intervals
/// ((k-1)h, (k+1)h) with h = 2^-(n+2), clipped to the ambient. Over [0,1] this
/// is k = 0..2^(n+2).
inline Cover ball_cover(BallIndex index, const Interval& ambient = Interval::closed(0, 1)) {
  if (index.n < 1) throw DomainError("ball cover index must be >= 1");
  Rational h = Rational::pow2(-(index.n + 2));
  mpz_class k0 = (ambient.lo() / h).floor();
  mpz_class k1 = (ambient.hi() / h).ceil();
  RSet amb(ambient);
  std::vector<RSet> members;
  for (mpz_class k = k0; k <= k1; ++k) {
    Rational c{mpq_class(k)};
    RSet ball = intersect(RSet(Interval::open((c - Rational(1)) * h, (c + Rational(1)) * h)), amb);
    if (!ball.empty()) members.push_back(std::move(ball));
  }
  return Cover(amb, std::move(members));
}

struct ChainLink {
  std::size_t member;  ///< index into the cover
  Interval piece;      ///< the member's component, clipped to the target
};

/// Minimal left-to-right chain of member components covering the target
/// interval: greedy maximal reach, then pruning of links whose neighbours
/// already overlap. Consecutive links overlap; non-consecutive ones are disjoint.
inline std::vector<ChainLink> chain_subcover(const Cover& cover) {
  const Interval& target = detail::single_closed_target(cover);
  std::vector<ChainLink> pieces;
  for (const auto& p : detail::parts_meeting(cover, target.lo(), target.hi()))
    if (auto clipped = intersect(p.part, target)) pieces.push_back({p.member, *clipped});

  std::vector<ChainLink> chain;
  LowerBound frontier = target.lower();
  while (true) {
    const ChainLink* pick = nullptr;
    for (const auto& c : pieces) {
      if (frontier < c.piece.lower() || !nonempty(frontier, c.piece.upper())) continue;
      if (!pick || pick->piece.upper() < c.piece.upper()) pick = &c;
    }
    if (!pick) throw DomainError("cover leaves " + frontier.value.str() + " uncovered");
    chain.push_back(*pick);
    if (!(pick->piece.upper() < target.upper())) break;
    frontier = above(pick->piece.upper());
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
      if (intersect(chain[i - 1].piece, chain[i + 1].piece)) {
        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return chain;
}

}  // namespace sscreen

#endif
