#ifndef SSCREEN_CANTOR_HPP
#define SSCREEN_CANTOR_HPP

#include <optional>
#include <vector>

#include "rset.hpp"

namespace sscreen {

/// The middle-thirds Cantor set built on a closed ambient interval.
/// Level n consists of 2^n closed pieces of length 3^-n * len, pairwise at
/// distance >= 3^-n * len.
struct CantorSpec {
  Interval ambient = Interval::closed(0, 1);

  Rational length() const { return ambient.length(); }

  std::vector<Interval> pieces(int level) const {
    std::vector<Interval> cur{ambient};
    for (int d = 0; d < level; ++d) {
      std::vector<Interval> next;
      next.reserve(cur.size() * 2);
      for (const auto& p : cur) {
        Rational third = p.length() / Rational(3);
        next.push_back(Interval::closed(p.lo(), p.lo() + third));
        next.push_back(Interval::closed(p.hi() - third, p.hi()));
      }
      cur = std::move(next);
    }
    return cur;
  }
};

struct CantorCoverage {
  bool covered = false;
  bool decided = true;
  std::optional<Rational> missed;  ///< a Cantor point (piece endpoint) outside the set
};

/// Whether `set` contains the whole Cantor set. A piece inside the set settles
/// its subtree; a piece endpoint outside it is a missed Cantor point. For a
/// relatively open set that covers C the recursion stops by compactness.
inline CantorCoverage cantor_covered(const RSet& set, const CantorSpec& spec, int max_depth = 48) {
  std::vector<Interval> frontier{spec.ambient};
  for (int depth = 0; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<Interval> open;
    for (const auto& p : frontier) {
      if (is_subset(RSet(p), set)) continue;
      if (!contains_point(set, p.lo())) return {false, true, p.lo()};
      if (!contains_point(set, p.hi())) return {false, true, p.hi()};
      Rational third = p.length() / Rational(3);
      open.push_back(Interval::closed(p.lo(), p.lo() + third));
      open.push_back(Interval::closed(p.hi() - third, p.hi()));
    }
    frontier = std::move(open);
  }
  if (frontier.empty()) return {true, true, std::nullopt};
  return {false, false, std::nullopt};
}

}  // namespace sscreen

#endif
