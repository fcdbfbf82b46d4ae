#ifndef SSCREEN_INTERVAL_HPP
#define SSCREEN_INTERVAL_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace sscreen {

// Endpoint bounds ordered as cuts of the line: a closed lower bound at v sits
// below an open one at v; an open upper bound at v sits below a closed one.
struct LowerBound {
  Rational value;
  bool open = false;
  friend bool operator==(const LowerBound&, const LowerBound&) = default;
  friend bool operator<(const LowerBound& a, const LowerBound& b) {
    if (a.value != b.value) return a.value < b.value;
    return !a.open && b.open;
  }
};

struct UpperBound {
  Rational value;
  bool open = false;
  friend bool operator==(const UpperBound&, const UpperBound&) = default;
  friend bool operator<(const UpperBound& a, const UpperBound& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.open && !b.open;
  }
};

inline const LowerBound& max(const LowerBound& a, const LowerBound& b) { return a < b ? b : a; }
inline const UpperBound& min(const UpperBound& a, const UpperBound& b) { return b < a ? b : a; }

/// True when some point satisfies both bounds.
inline bool nonempty(const LowerBound& lo, const UpperBound& hi) {
  if (lo.value < hi.value) return true;
  return lo.value == hi.value && !lo.open && !hi.open;
}

/// Upper bound of everything strictly below `lo` (the complement's right edge).
inline UpperBound below(const LowerBound& lo) { return {lo.value, !lo.open}; }
/// Lower bound of everything strictly above `hi`.
inline LowerBound above(const UpperBound& hi) { return {hi.value, !hi.open}; }

/// A nonempty interval of the line with rational endpoints. Degenerate intervals
/// are closed points; `(v,v)`, `[v,v)` and `(v,v]` are rejected.
class Interval {
 public:
  Interval(Rational lo, Rational hi, bool lo_open, bool hi_open)
      : lo_{std::move(lo), lo_open}, hi_{std::move(hi), hi_open} {
    if (!sscreen::nonempty(lo_, hi_))
      throw ConstructionError("malformed interval " + str());
  }
  Interval(const LowerBound& lo, const UpperBound& hi) : Interval(lo.value, hi.value, lo.open, hi.open) {}

  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval point(const Rational& x) { return {x, x, false, false}; }

  /// Builds the interval when the bounds describe a nonempty set.
  static std::optional<Interval> make(const LowerBound& lo, const UpperBound& hi) {
    if (!sscreen::nonempty(lo, hi)) return std::nullopt;
    return Interval(lo, hi);
  }

  /// Parses `(lo,hi)`, `[lo,hi]`, `[lo,hi)` or `(lo,hi]`.
  static Interval parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.size() < 5) throw ParseError("not an interval: '" + std::string(text) + "'");
    char open_c = text.front(), close_c = text.back();
    if ((open_c != '(' && open_c != '[') || (close_c != ')' && close_c != ']'))
      throw ParseError("interval must start with ( or [ and end with ) or ]: '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("interval needs exactly one comma: '" + std::string(text) + "'");
    Rational lo = Rational::parse(body.substr(0, comma));
    Rational hi = Rational::parse(body.substr(comma + 1));
    return Interval(lo, hi, open_c == '(', close_c == ')');
  }

  const Rational& lo() const { return lo_.value; }
  const Rational& hi() const { return hi_.value; }
  bool lo_open() const { return lo_.open; }
  bool hi_open() const { return hi_.open; }
  const LowerBound& lower() const { return lo_; }
  const UpperBound& upper() const { return hi_; }

  bool is_point() const { return lo_.value == hi_.value; }
  bool is_open() const { return lo_.open && hi_.open; }
  bool is_closed() const { return !lo_.open && !hi_.open; }
  Rational length() const { return hi_.value - lo_.value; }

  bool contains(const Rational& x) const {
    bool above_lo = lo_.open ? lo_.value < x : lo_.value <= x;
    bool below_hi = hi_.open ? x < hi_.value : x <= hi_.value;
    return above_lo && below_hi;
  }
  bool contains(const Interval& o) const { return !(o.lo_ < lo_) && !(hi_ < o.hi_); }

  Interval closure() const { return closed(lo_.value, hi_.value); }

  std::string str() const {
    return std::string(lo_.open ? "(" : "[") + lo_.value.str() + "," + hi_.value.str() + (hi_.open ? ")" : "]");
  }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.str(); }

 private:
  LowerBound lo_;
  UpperBound hi_;
};

inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  return Interval::make(max(a.lower(), b.lower()), min(a.upper(), b.upper()));
}

/// Distance from a point to the closure of an interval.
inline Rational distance(const Interval& iv, const Rational& x) {
  if (x < iv.lo()) return iv.lo() - x;
  if (iv.hi() < x) return x - iv.hi();
  return Rational(0);
}

}  // namespace sscreen

#endif
