#ifndef SSCREEN_SAMPLING_HPP
#define SSCREEN_SAMPLING_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "covers.hpp"

namespace sscreen {

/// Seeded generators of rational test inputs.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Rational in [lo, hi] on a grid of 1/den.
  Rational rational(const Rational& lo, const Rational& hi, long den = 64) {
    Rational span = hi - lo;
    return lo + span * Rational(uniform(0, den), den);
  }

  /// Closed subinterval of [0,1] of positive length.
  Interval subinterval(long den = 48) {
    long a = uniform(0, den - 1);
    long b = uniform(a + 1, den);
    return Interval::closed(Rational(a, den), Rational(b, den));
  }

  /// Open cover of [a,b]: a chain of overlapping open intervals reaching past
  /// both ends, shuffled, some members merged into two-component sets, plus a
  /// few stray intervals.
  Cover cover_of(const Interval& target, int max_links = 7) {
    const Rational& a = target.lo();
    const Rational& b = target.hi();
    Rational len = b - a;
    int links = static_cast<int>(uniform(1, max_links));
    Rational step = len / Rational(links);
    std::vector<Interval> chain;
    Rational lo = a - len * Rational(uniform(1, 8), 32);
    for (int i = 0; i < links; ++i) {
      Rational reach = a + step * Rational(i + 1);
      Rational hi = reach + step * Rational(uniform(1, 6), 8);
      if (i + 1 == links) hi = b + len * Rational(uniform(1, 8), 32);
      chain.push_back(Interval::open(lo, hi));
      Rational back = (hi - lo) * Rational(uniform(1, 6), 16);
      lo = max(hi - back, reach - step * Rational(1, 4));
      if (!(lo < hi)) lo = hi - step / Rational(8);
    }
    std::vector<RSet> members;
    for (const auto& iv : chain) members.emplace_back(iv);
    for (int extra = static_cast<int>(uniform(0, 2)); extra > 0; --extra) {
      Rational c = rational(a, b);
      Rational r = len * Rational(uniform(1, 16), 64);
      members.emplace_back(Interval::open(c - r, c + r));
    }
    if (members.size() >= 3 && uniform(0, 2) == 0) {
      RSet merged = set_union(members[0], members[2]);
      members.erase(members.begin() + 2);
      members[0] = merged;
    }
    std::shuffle(members.begin(), members.end(), rng_);
    return Cover(RSet(target), std::move(members));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace sscreen

#endif
