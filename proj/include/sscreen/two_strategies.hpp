#ifndef SSCREEN_TWO_STRATEGIES_HPP
#define SSCREEN_TWO_STRATEGIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantor.hpp"
#include "covers.hpp"
#include "enumerations.hpp"
#include "families.hpp"

namespace sscreen {

namespace detail {

inline DiscreteFamily certify_discrete(std::vector<RSet> members, const char* who) {
  auto checked = is_discrete(std::move(members));
  if (auto* clash = std::get_if<PairClash>(&checked))
    throw InvariantViolation(std::string(who) + " produced members " + std::to_string(clash->first) + " and " +
                             std::to_string(clash->second) + " whose closures share " + clash->shared_point.str());
  return std::get<DiscreteFamily>(std::move(checked));
}

/// Members of `cover` that meet [a,b], retargeted to [a,b].
inline Cover restrict_cover(const Cover& cover, const Interval& piece) {
  std::vector<RSet> kept;
  for (const auto& m : cover.members()) {
    const auto& c = m.components();
    bool meets = std::any_of(c.begin(), c.end(), [&](const Interval& iv) { return intersect(iv, piece).has_value(); });
    if (meets) kept.push_back(m);
  }
  return Cover(RSet(piece), std::move(kept));
}

/// First member (lowest index) with a component containing `iv`, and that component.
inline std::optional<std::pair<std::size_t, Interval>> containing_component(const Cover& cover, const Interval& iv) {
  for (std::size_t m = 0; m < cover.size(); ++m)
    for (const auto& c : cover.members()[m].components())
      if (c.contains(iv)) return std::make_pair(m, c);
  return std::nullopt;
}

/// Half-distance rule: half the distance from x to the nearest obstacle, where
/// obstacles are the open ends of `component` (closed ends lie on the ambient
/// boundary and are clipped instead) and `neighbour_room`, the half spacing to
/// the closest other selected point.
inline Rational half_distance_radius(const Interval& component, const Rational& x,
                                     const std::optional<Rational>& neighbour_room, const Rational& fallback) {
  std::optional<Rational> room = neighbour_room;
  auto take = [&](const Rational& d) {
    if (!room || d < *room) room = d;
  };
  if (component.lo_open()) take(x - component.lo());
  if (component.hi_open()) take(component.hi() - x);
  return room ? *room / Rational(2) : fallback;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Halving

struct HalvingRefinement {
  DiscreteFamily family;
  std::vector<Interval> residual;  ///< closed pieces left uncovered, in order
  long grid = 0;                   ///< M, the even number of grid cells
};

/// Splits [a,b] into an even number M of equal cells small enough to sit in
/// single cover members, answers with the odd-indexed open cells, and leaves
/// the even closed cells (plus the right endpoint b) as residual, so exactly
/// half of the length remains. M = 2 when one member already contains [a,b];
/// otherwise M is the smallest even integer with L/M below the Lebesgue number.
inline HalvingRefinement halving_refinement(const Cover& cover) {
  const Interval& target = detail::single_closed_target(cover);
  const Rational& a = target.lo();
  const Rational& b = target.hi();
  const Rational length = b - a;

  long grid = 2;
  if (!detail::containing_component(cover, target)) {
    Rational delta = lebesgue_number(cover);
    mpz_class m = (length / delta).floor() + 1;
    if (m % 2 != 0) m += 1;
    if (!m.fits_slong_p()) throw DomainError("halving grid too fine");
    grid = m.get_si();
  }
  const Rational cell = length / Rational(grid);

  std::vector<RSet> members;
  std::vector<Interval> residual;
  for (long i = 0; i < grid; ++i) {
    Rational lo = a + cell * Rational(i);
    Rational hi = i + 1 == grid ? b : lo + cell;
    if (i % 2 == 1)
      members.emplace_back(Interval::open(lo, hi));
    else
      residual.push_back(Interval::closed(lo, hi));
  }
  residual.push_back(Interval::point(b));
  return {detail::certify_discrete(std::move(members), "halving_refinement"), std::move(residual), grid};
}

/// TWO's state in the halving strategy: the closed residual pieces (points included).
struct HalvingState {
  std::vector<Interval> residual;
  std::size_t inning = 0;

  static HalvingState initial(const Interval& ambient) { return {{ambient}, 0}; }

  Rational measure() const {
    Rational m(0);
    for (const auto& r : residual) m += r.length();
    return m;
  }
  RSet as_set() const { return RSet::normalize(residual); }

  /// Smallest distance between consecutive residual pieces (nullopt for <= 1 piece).
  std::optional<Rational> min_gap() const {
    std::optional<Rational> g;
    for (std::size_t i = 0; i + 1 < residual.size(); ++i) {
      Rational d = residual[i + 1].lo() - residual[i].hi();
      if (!g || d < *g) g = d;
    }
    return g;
  }
};

struct HalvingStep {
  DiscreteFamily family;
  HalvingState state;
};

/// Applies halving to every residual piece of positive length against the same cover.
inline HalvingStep halving_step(const HalvingState& state, const Cover& cover) {
  if (state.residual.empty()) throw DomainError("halving state has no residual left");
  std::vector<RSet> members;
  HalvingState next{{}, state.inning + 1};
  for (const auto& piece : state.residual) {
    if (piece.is_point()) {
      if (next.residual.empty() || next.residual.back() != piece) next.residual.push_back(piece);
      continue;
    }
    auto split = halving_refinement(detail::restrict_cover(cover, piece));
    members.insert(members.end(), split.family.members().begin(), split.family.members().end());
    for (auto& r : split.residual)
      if (next.residual.empty() || next.residual.back() != r) next.residual.push_back(std::move(r));
  }
  return {detail::certify_discrete(std::move(members), "halving_step"), std::move(next)};
}

/// Supplies ONE's covers for pre-limit innings that are materialized on demand,
/// and receives TWO's answers to them.
class ExtensionSource {
 public:
  virtual ~ExtensionSource() = default;
  /// ONE's cover for the next extension inning; nullopt when none can be produced.
  virtual std::optional<Cover> next_cover() = 0;
  virtual void answer(const DiscreteFamily& family) = 0;
};

/// Whether some residual piece is still too long to sit inside a single member of
/// the limit cover. Never when one member already holds the whole target.
inline bool halving_needs_extension(const HalvingState& state, const Cover& limit_cover) {
  const RSet& target = limit_cover.target();
  if (target.size() == 1 && detail::containing_component(limit_cover, target.front())) return false;
  Rational delta = lebesgue_number(limit_cover);
  return std::any_of(state.residual.begin(), state.residual.end(),
                     [&](const Interval& r) { return !(r.length() < delta); });
}

struct LimitMove {
  DiscreteFamily family;
  HalvingState state;  ///< state after the extension innings
  std::size_t extensions = 0;
};

/// TWO's move at the limit inning: materialize extension innings (halving each)
/// until every residual piece is shorter than the limit cover's Lebesgue number,
/// then fatten each piece [c,d] to (c-g, d+g) clipped to the ambient, with
/// g = min residual gap / 3 capped so the closure stays in a containing member.
inline LimitMove limit_move(HalvingState state, const Cover& limit_cover, ExtensionSource& source,
                            const Interval& ambient, std::size_t max_extensions = 64) {
  std::size_t extensions = 0;
  while (halving_needs_extension(state, limit_cover)) {
    if (extensions == max_extensions) throw ProtocolError("limit move needs more than " + std::to_string(max_extensions) + " extension innings");
    auto cover = source.next_cover();
    if (!cover) throw ProtocolError("extension source exhausted before the residual fit the limit cover");
    auto step = halving_step(state, *cover);
    source.answer(step.family);
    state = std::move(step.state);
    ++extensions;
  }

  const auto gap = state.min_gap();
  const Rational base_gamma = gap ? *gap / Rational(3) : ambient.length();
  std::vector<RSet> members;
  RSet amb(ambient);
  for (const auto& piece : state.residual) {
    auto host = detail::containing_component(limit_cover, piece.closure());
    if (!host) throw InvariantViolation("residual piece " + piece.str() + " fits no member of the limit cover");
    const Interval& comp = host->second;
    Rational gamma = base_gamma;
    if (comp.lo() > ambient.lo() || comp.lo_open()) {
      Rational room = piece.lo() - comp.lo();
      if (room.sign() <= 0 && comp.lo() > ambient.lo()) throw InvariantViolation("limit cover member is not open at " + comp.lo().str());
      if (room.sign() > 0) gamma = min(gamma, room / Rational(2));
    }
    if (comp.hi() < ambient.hi() || comp.hi_open()) {
      Rational room = comp.hi() - piece.hi();
      if (room.sign() <= 0 && comp.hi() < ambient.hi()) throw InvariantViolation("limit cover member is not open at " + comp.hi().str());
      if (room.sign() > 0) gamma = min(gamma, room / Rational(2));
    }
    members.push_back(intersect(RSet(Interval::open(piece.lo() - gamma, piece.hi() + gamma)), amb));
  }
  return {detail::certify_discrete(std::move(members), "limit_move"), std::move(state), extensions};
}

// ---------------------------------------------------------------------------
// Cantor set in one shot

struct CantorMove {
  DiscreteFamily family;
  int level = 0;
  Rational gamma;
};

/// Covers the Cantor set with one discrete family: fatten the 2^n level-n
/// pieces by 3^-(n+1)*len, with n minimal such that the fattened length
/// (5/3)*3^-n*len is below the cover's Lebesgue number over the ambient.
/// Covers that miss parts of the ambient fall back to the smallest level whose
/// fattened pieces each sit in a single member.
inline CantorMove cantor_one_shot(const Cover& cover, const CantorSpec& spec, int max_level = 20) {
  const Rational len = spec.length();
  RSet amb(spec.ambient);
  std::optional<Rational> delta;
  if (is_subset(amb, cover.union_set())) delta = lebesgue_number(cover.retarget(amb));

  auto fattened = [&](int n) {
    Rational gamma = Rational::pow3(-(n + 1)) * len;
    std::vector<RSet> out;
    for (const auto& p : spec.pieces(n)) out.push_back(intersect(RSet(Interval::open(p.lo() - gamma, p.hi() + gamma)), amb));
    return std::make_pair(std::move(out), gamma);
  };

  for (int n = 0; n <= max_level; ++n) {
    if (delta) {
      if (!(Rational(5, 3) * Rational::pow3(-n) * len < *delta)) continue;
      auto [members, gamma] = fattened(n);
      return {detail::certify_discrete(std::move(members), "cantor_one_shot"), n, gamma};
    }
    auto [members, gamma] = fattened(n);
    if (refines(members, cover.members()).ok)
      return {detail::certify_discrete(std::move(members), "cantor_one_shot"), n, gamma};
  }
  throw DomainError("cover too fine for a Cantor one-shot move up to level " + std::to_string(max_level));
}

// ---------------------------------------------------------------------------
// Countable targets

/// Singleton family: a small open interval around the inning-th enumerated
/// point, inside the first member containing it (half-distance rule).
inline DiscreteFamily countable_target_move(const RationalEnumeration& points, std::size_t inning, const Cover& cover,
                                            const Interval& ambient) {
  const Rational& q = points.at(inning);
  auto host = detail::containing_component(cover, Interval::point(q));
  if (!host) throw DomainError("cover misses the enumerated point " + q.str());
  Rational r = detail::half_distance_radius(host->second, q, std::nullopt, ambient.length());
  RSet piece = intersect(intersect(RSet(Interval::open(q - r, q + r)), RSet(ambient)), RSet(host->second));
  return detail::certify_discrete({piece}, "countable_target_move");
}

// ---------------------------------------------------------------------------
// Disjoint-variant strategy: chain with punctures, then clean-up

struct ChainPuncture {
  std::vector<RSet> family;  ///< pairwise disjoint, relatively open in [a,b]
  std::vector<Rational> punctures;
  std::vector<std::size_t> chain;  ///< cover member hosting each family member
};

/// Cuts [a,b] at the midpoints p_i of consecutive chain overlaps:
/// [a,p_1), (p_1,p_2), ..., (p_{k-1},b]. The pieces are disjoint and cover
/// [a,b] except the punctures, but adjacent closures share the p_i.
inline ChainPuncture chain_puncture_refinement(const Cover& cover) {
  const Interval& target = detail::single_closed_target(cover);
  auto chain = chain_subcover(cover);
  ChainPuncture out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto overlap = intersect(chain[i].piece, chain[i + 1].piece);
    if (!overlap) throw InvariantViolation("consecutive chain links do not overlap");
    out.punctures.push_back(midpoint(overlap->lo(), overlap->hi()));
  }
  LowerBound lo = target.lower();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    UpperBound hi = i + 1 < chain.size() ? UpperBound{out.punctures[i], true} : target.upper();
    out.family.emplace_back(Interval(lo, hi));
    out.chain.push_back(chain[i].member);
    if (i + 1 < chain.size()) lo = LowerBound{out.punctures[i], true};
  }
  return out;
}

/// Second inning of the disjoint-game win: one small interval per puncture,
/// each inside a member of the new cover, with pairwise disjoint closures.
inline DiscreteFamily puncture_cleanup(std::vector<Rational> punctures, const Cover& cover, const Interval& ambient) {
  std::sort(punctures.begin(), punctures.end());
  punctures.erase(std::unique(punctures.begin(), punctures.end()), punctures.end());
  std::vector<RSet> members;
  for (std::size_t i = 0; i < punctures.size(); ++i) {
    const Rational& p = punctures[i];
    auto host = detail::containing_component(cover, Interval::point(p));
    if (!host) throw DomainError("cover misses the puncture " + p.str());
    std::optional<Rational> spacing;
    if (i > 0) spacing = p - punctures[i - 1];
    if (i + 1 < punctures.size()) {
      Rational s = punctures[i + 1] - p;
      if (!spacing || s < *spacing) spacing = s;
    }
    std::optional<Rational> neighbour_room;
    if (spacing) neighbour_room = *spacing / Rational(2);
    Rational r = detail::half_distance_radius(host->second, p, neighbour_room, ambient.length());
    members.push_back(intersect(intersect(RSet(Interval::open(p - r, p + r)), RSet(ambient)), RSet(host->second)));
  }
  return detail::certify_discrete(std::move(members), "puncture_cleanup");
}

// ---------------------------------------------------------------------------
// Banach-Mazur, TWO against a first-category target

/// Largest component of an open set (ties: leftmost).
inline std::optional<Interval> largest_component(const RSet& s) {
  const Interval* best = nullptr;
  for (const auto& c : s.components())
    if (!best || best->length() < c.length()) best = &c;
  if (!best) return std::nullopt;
  return *best;
}

/// T_n: the middle half of the largest component of O_n minus closure(F_n).
inline RSet bm_two_first_category(const RSet& nowhere_dense, const RSet& one_move) {
  auto comp = largest_component(subtract(one_move, closure(nowhere_dense)));
  if (!comp || comp->is_point()) throw InvariantViolation("O_n minus a nowhere dense set is empty: " + one_move.str());
  Rational q = comp->length() / Rational(4);
  return RSet(Interval::open(comp->lo() + q, comp->hi() - q));
}

}  // namespace sscreen

#endif
