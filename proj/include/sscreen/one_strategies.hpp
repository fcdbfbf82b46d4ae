#ifndef SSCREEN_ONE_STRATEGIES_HPP
#define SSCREEN_ONE_STRATEGIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covers.hpp"
#include "enumerations.hpp"
#include "two_strategies.hpp"

namespace sscreen {

/// Two-member cover of the ambient in which neither member's closure contains
/// O = (c,d): members are the ambient minus the closed blocks
/// X1 = [c+(d-c)/4, c+3(d-c)/8] and X2 = [c+5(d-c)/8, c+3(d-c)/4].
inline Cover avoid_cover(const Interval& o, const Interval& ambient) {
  if (o.is_point()) throw DomainError("avoid_cover needs a nontrivial interval, got " + o.str());
  if (!ambient.contains(o)) throw DomainError(o.str() + " is not inside the ambient " + ambient.str());
  const Rational& c = o.lo();
  const Rational w = o.length();
  Interval x1 = Interval::closed(c + w / Rational(4), c + w * Rational(3, 8));
  Interval x2 = Interval::closed(c + w * Rational(5, 8), c + w * Rational(3, 4));
  RSet amb(ambient);
  return Cover(amb, {subtract(amb, RSet(x1)), subtract(amb, RSet(x2))});
}

/// Dense open sets G_n = ambient minus {q_n}, q_n from a named enumeration.
struct GDeltaSpec {
  explicit GDeltaSpec(std::string seq = "farey") : enumeration(std::move(seq)) {}

  std::string enumeration;

  RSet dense_open(std::size_t n, const Interval& ambient) const {
    return subtract(RSet(ambient), RSet(Interval::point(points().at(n))));
  }
  const RationalEnumeration& points() const {
    if (!cache_ || cache_->id() != enumeration) cache_.emplace(enumeration);
    return *cache_;
  }

 private:
  mutable std::optional<RationalEnumeration> cache_;
};

/// Banach-Mazur history O_0 >= T_0 >= O_1 >= T_1 >= ...
struct BMState {
  std::vector<RSet> one_moves;  ///< O_0, O_1, ...
  std::vector<RSet> two_moves;  ///< T_0, T_1, ...
};

/// ONE's Banach-Mazur strategy: next open interval from the history.
using BMStrategy = std::function<Interval(const BMState&)>;

inline Interval middle_half(const Interval& iv) {
  Rational q = iv.length() / Rational(4);
  return Interval::open(iv.lo() + q, iv.hi() - q);
}

inline Interval middle_third(const Interval& iv) {
  Rational t = iv.length() / Rational(3);
  return Interval::open(iv.lo() + t, iv.hi() - t);
}

/// Middle third of the largest component of `t` (ties: leftmost).
inline Interval bm_one_move(const RSet& t) {
  auto comp = largest_component(t);
  if (!comp || comp->is_point()) throw InvariantViolation("Banach-Mazur move on an empty open set");
  return middle_third(*comp);
}

/// O_0 is the middle half of the ambient; afterwards the middle third of the
/// largest component of TWO's last move.
inline BMStrategy bm_one_compact(const Interval& ambient) {
  return [ambient](const BMState& s) {
    if (s.two_moves.empty()) return middle_half(ambient);
    return bm_one_move(s.two_moves.back());
  };
}

/// As bm_one_compact, but the answer to T_n lives in T_n cap G_n, so the
/// closure of O_{n+1} misses q_0..q_n.
inline BMStrategy bm_one_dense_gdelta(GDeltaSpec spec, const Interval& ambient) {
  return [spec = std::move(spec), ambient](const BMState& s) {
    if (s.two_moves.empty()) return middle_half(ambient);
    std::size_t n = s.two_moves.size() - 1;
    return bm_one_move(intersect(s.two_moves.back(), spec.dense_open(n, ambient)));
  };
}

/// One link of the nested-closure chain: closure(O_{n+1}) in T_n in O_n.
struct NestedLink {
  RSet o;       ///< O_n
  RSet t;       ///< T_n = O_n minus the closures of TWO's family
  RSet o_next;  ///< O_{n+1}
};

struct OneMainState {
  BMState bm;
  std::vector<NestedLink> chain;
};

struct OneMainStep {
  Cover cover;
  OneMainState state;
};

/// Initial move: O_0 from the BM strategy, answered by avoid_cover(O_0).
inline OneMainStep one_main_start(const BMStrategy& bm, const Interval& ambient) {
  OneMainState s;
  Interval o = bm(s.bm);
  s.bm.one_moves.emplace_back(o);
  return {avoid_cover(o, ambient), std::move(s)};
}

/// After TWO's family: T_n = O_n minus the union of closures, O_{n+1} = bm(...),
/// next cover avoid_cover(O_{n+1}).
inline OneMainStep one_main_step(const BMStrategy& bm, OneMainState state, const std::vector<RSet>& two_family,
                                 const Interval& ambient) {
  if (state.bm.one_moves.empty()) throw DomainError("one_main_step before the initial move");
  const RSet o = state.bm.one_moves.back();
  RSet shadow;
  for (const auto& m : two_family) shadow = set_union(shadow, closure(m));
  RSet t = subtract(o, shadow);
  if (interior(t).empty())
    throw InvariantViolation("TWO's closures swallow O_" + std::to_string(state.bm.one_moves.size() - 1) + " = " + o.str());
  t = interior(t);
  state.bm.two_moves.push_back(t);
  Interval next = bm(state.bm);
  RSet next_set(next);
  if (!is_subset(closure(next_set), t) || !is_subset(t, o))
    throw InvariantViolation("nested-closure chain broken at O_" + std::to_string(state.bm.one_moves.size()));
  state.chain.push_back({o, t, next_set});
  state.bm.one_moves.push_back(next_set);
  return {avoid_cover(next, ambient), std::move(state)};
}

}  // namespace sscreen

#endif
