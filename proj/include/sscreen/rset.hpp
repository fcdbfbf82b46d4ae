#ifndef SSCREEN_RSET_HPP
#define SSCREEN_RSET_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "interval.hpp"

namespace sscreen {

/// A finite union of rational intervals in canonical form: components sorted,
/// pairwise disjoint and never mergeable into a single interval.
class RSet {
 public:
  RSet() = default;
  RSet(const Interval& iv) : parts_{iv} {}  // NOLINT(google-explicit-constructor)

  /// Canonicalizes an arbitrary list of intervals (merging overlaps and touching ends).
  static RSet normalize(std::vector<Interval> ivs) {
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.lower() < b.lower(); });
    RSet out;
    for (auto& iv : ivs) {
      if (!out.parts_.empty()) {
        Interval& cur = out.parts_.back();
        if (mergeable(cur, iv)) {
          if (cur.upper() < iv.upper()) cur = Interval(cur.lower(), iv.upper());
          continue;
        }
      }
      out.parts_.push_back(std::move(iv));
    }
    return out;
  }

  /// Parses a `;`-joined list of intervals. The empty string and `{}` denote the empty set.
  static RSet parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty() || text == "{}" || text == "empty") return {};
    std::vector<Interval> ivs;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto semi = text.find(';', start);
      auto piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
      ivs.push_back(Interval::parse(piece));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return normalize(std::move(ivs));
  }

  const std::vector<Interval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  const Interval& front() const { return parts_.front(); }
  const Interval& back() const { return parts_.back(); }

  /// Canonical text, `{}` for the empty set.
  std::string str() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ";";
      s += parts_[i].str();
    }
    return s;
  }

  friend bool operator==(const RSet&, const RSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RSet& s) { return os << s.str(); }

 private:
  static bool mergeable(const Interval& cur, const Interval& next) {
    if (next.lo() < cur.hi()) return true;
    if (next.lo() == cur.hi()) return !cur.hi_open() || !next.lo_open();
    return false;
  }
  std::vector<Interval> parts_;
};

inline RSet set_union(const RSet& a, const RSet& b) {
  std::vector<Interval> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return RSet::normalize(std::move(all));
}

inline RSet union_all(std::span<const RSet> sets) {
  std::vector<Interval> all;
  for (const auto& s : sets) all.insert(all.end(), s.components().begin(), s.components().end());
  return RSet::normalize(std::move(all));
}

inline RSet intersect(const RSet& a, const RSet& b) {
  std::vector<Interval> out;
  const auto& x = a.components();
  const auto& y = b.components();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (auto iv = intersect(x[i], y[j])) out.push_back(*iv);
    if (x[i].upper() < y[j].upper())
      ++i;
    else
      ++j;
  }
  return RSet::normalize(std::move(out));
}

/// a minus b.
inline RSet subtract(const RSet& a, const RSet& b) {
  std::vector<Interval> out;
  const auto& y = b.components();
  std::size_t j0 = 0;
  for (const auto& iv : a.components()) {
    while (j0 < y.size() && !nonempty(iv.lower(), y[j0].upper())) ++j0;
    LowerBound cursor = iv.lower();
    bool exhausted = false;
    for (std::size_t j = j0; j < y.size(); ++j) {
      if (!nonempty(y[j].lower(), iv.upper())) break;
      if (auto left = Interval::make(cursor, min(iv.upper(), below(y[j].lower())))) out.push_back(*left);
      cursor = max(cursor, above(y[j].upper()));
      if (!nonempty(cursor, iv.upper())) {
        exhausted = true;
        break;
      }
    }
    if (!exhausted)
      if (auto rest = Interval::make(cursor, iv.upper())) out.push_back(*rest);
  }
  return RSet::normalize(std::move(out));
}

inline RSet closure(const RSet& a) {
  std::vector<Interval> out;
  out.reserve(a.size());
  for (const auto& iv : a.components()) out.push_back(iv.closure());
  return RSet::normalize(std::move(out));
}

inline RSet interior(const RSet& a) {
  std::vector<Interval> out;
  for (const auto& iv : a.components())
    if (!iv.is_point()) out.push_back(Interval::open(iv.lo(), iv.hi()));
  return RSet::normalize(std::move(out));
}

inline Rational measure(const RSet& a) {
  Rational m(0);
  for (const auto& iv : a.components()) m += iv.length();
  return m;
}

inline bool is_subset(const RSet& a, const RSet& b) { return subtract(a, b).empty(); }

inline bool contains_point(const RSet& a, const Rational& x) {
  const auto& p = a.components();
  auto it = std::lower_bound(p.begin(), p.end(), x, [](const Interval& iv, const Rational& v) { return iv.hi() < v; });
  for (; it != p.end() && it->lo() <= x; ++it)
    if (it->contains(x)) return true;
  return false;
}

inline bool intersects(const RSet& a, const RSet& b) { return !intersect(a, b).empty(); }

/// Open relative to `ambient`: a subset of the ambient whose closed endpoints
/// are matching closed endpoints of the ambient's components.
inline bool is_open_in(const RSet& a, const RSet& ambient) {
  if (!is_subset(a, ambient)) return false;
  for (const auto& iv : a.components()) {
    if (!iv.lo_open()) {
      bool ok = std::any_of(ambient.components().begin(), ambient.components().end(),
                            [&](const Interval& c) { return !c.lo_open() && c.lo() == iv.lo(); });
      if (!ok) return false;
    }
    if (!iv.hi_open()) {
      bool ok = std::any_of(ambient.components().begin(), ambient.components().end(),
                            [&](const Interval& c) { return !c.hi_open() && c.hi() == iv.hi(); });
      if (!ok) return false;
    }
  }
  return true;
}

inline bool is_closed_set(const RSet& a) { return closure(a) == a; }

/// Distance from x to the closure of a (nullopt for the empty set).
inline std::optional<Rational> distance(const RSet& a, const Rational& x) {
  std::optional<Rational> best;
  for (const auto& iv : a.components()) {
    Rational d = distance(iv, x);
    if (!best || d < *best) best = d;
  }
  return best;
}

/// Smallest distance between the closures of two nonempty sets (0 when they meet).
inline Rational closure_distance(const RSet& a, const RSet& b) {
  std::optional<Rational> best;
  for (const auto& x : a.components())
    for (const auto& y : b.components()) {
      Rational d(0);
      if (x.hi() < y.lo())
        d = y.lo() - x.hi();
      else if (y.hi() < x.lo())
        d = x.lo() - y.hi();
      if (!best || d < *best) best = d;
    }
  return best.value_or(Rational(0));
}

/// Diameter of the set (hi of last component minus lo of first).
inline Rational diameter(const RSet& a) { return a.empty() ? Rational(0) : a.back().hi() - a.front().lo(); }

}  // namespace sscreen

#endif
