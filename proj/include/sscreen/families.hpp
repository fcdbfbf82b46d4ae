#ifndef SSCREEN_FAMILIES_HPP
#define SSCREEN_FAMILIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rset.hpp"

namespace sscreen {

/// Two members that share a point: of their closures (discreteness) or of the sets (disjointness).
struct PairClash {
  std::size_t first = 0;
  std::size_t second = 0;
  Rational shared_point;
};

class DiscreteFamily;
std::variant<DiscreteFamily, PairClash> is_discrete(std::vector<RSet> members);

/// A finite family whose members have pairwise disjoint closures, with the
/// smallest closure gap as certificate (nullopt when the family has <= 1 member).
class DiscreteFamily {
 public:
  DiscreteFamily() = default;

  const std::vector<RSet>& members() const { return members_; }
  const std::optional<Rational>& min_gap() const { return min_gap_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  RSet union_set() const { return union_all(members_); }

 private:
  DiscreteFamily(std::vector<RSet> members, std::optional<Rational> gap)
      : members_(std::move(members)), min_gap_(std::move(gap)) {}
  friend std::variant<DiscreteFamily, PairClash> is_discrete(std::vector<RSet> members);

  std::vector<RSet> members_;
  std::optional<Rational> min_gap_;
};

namespace detail {

struct TaggedPart {
  Interval part;
  std::size_t member;
};

inline std::vector<TaggedPart> tagged_parts(std::span<const RSet> members, bool take_closure) {
  std::vector<TaggedPart> parts;
  for (std::size_t m = 0; m < members.size(); ++m)
    for (const auto& iv : members[m].components()) parts.push_back({take_closure ? iv.closure() : iv, m});
  std::stable_sort(parts.begin(), parts.end(),
                   [](const TaggedPart& a, const TaggedPart& b) { return a.part.lower() < b.part.lower(); });
  return parts;
}

}  // namespace detail

/// Accepts iff the closures of the members are pairwise disjoint.
///
/// Components of all members are swept in order of their left ends; two
/// closures from different members meet iff some adjacent pair in that order
/// meets, and the nearest cross-member pair is adjacent as well, so one pass
/// yields both the verdict and the exact minimal gap.
inline std::variant<DiscreteFamily, PairClash> is_discrete(std::vector<RSet> members) {
  auto parts = detail::tagged_parts(members, true);
  std::optional<Rational> gap;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const auto& a = parts[i];
    const auto& b = parts[i + 1];
    if (a.member == b.member) continue;
    if (b.part.lo() <= a.part.hi()) {
      auto [lo, hi] = std::minmax(a.member, b.member);
      return PairClash{lo, hi, b.part.lo()};
    }
    Rational d = b.part.lo() - a.part.hi();
    if (!gap || d < *gap) gap = d;
  }
  if (members.size() < 2) gap.reset();
  return DiscreteFamily(std::move(members), std::move(gap));
}

/// Pairwise disjointness of the sets themselves (closures may touch).
inline std::optional<PairClash> find_overlap(std::span<const RSet> members) {
  auto parts = detail::tagged_parts(members, false);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const auto& a = parts[i];
    const auto& b = parts[i + 1];
    if (a.member == b.member) continue;
    if (auto common = intersect(a.part, b.part)) {
      auto [lo, hi] = std::minmax(a.member, b.member);
      Rational p = common->is_point() ? common->lo() : midpoint(common->lo(), common->hi());
      return PairClash{lo, hi, p};
    }
  }
  return std::nullopt;
}

/// Supremum radius r such that (x-r, x+r) meets at most one member: the second
/// smallest distance from x to the members' closures. nullopt stands for +infinity.
inline std::optional<Rational> witness_radius(std::span<const RSet> family, const Rational& x) {
  if (family.size() <= 1) return std::nullopt;
  std::vector<Rational> d;
  d.reserve(family.size());
  for (const auto& m : family) {
    auto dist = distance(m, x);
    if (dist) d.push_back(*dist);
  }
  if (d.size() <= 1) return std::nullopt;
  std::nth_element(d.begin(), d.begin() + 1, d.end());
  return std::max(d[0], d[1]);
}

struct Refinement {
  bool ok = true;
  /// Index of the first containing cover element per family member (nullopt: none contains it).
  std::vector<std::optional<std::size_t>> witness;
  std::optional<std::size_t> first_failure() const {
    for (std::size_t i = 0; i < witness.size(); ++i)
      if (!witness[i]) return i;
    return std::nullopt;
  }
};

namespace detail {

/// Member components sorted by left end, for finding the members whose
/// components contain a given interval without scanning the whole cover.
class ContainmentIndex {
 public:
  explicit ContainmentIndex(std::span<const RSet> cover) : parts_(tagged_parts(cover, false)) {
    for (const auto& p : parts_)
      if (max_len_ < p.part.length()) max_len_ = p.part.length();
  }

  /// Ascending member indices having a component that contains `iv`.
  std::vector<std::size_t> containing(const Interval& iv) const {
    std::vector<std::size_t> out;
    auto it = std::upper_bound(parts_.begin(), parts_.end(), iv.lower(),
                               [](const LowerBound& lb, const TaggedPart& p) { return lb < p.part.lower(); });
    Rational reach_floor = iv.hi() - max_len_;
    while (it != parts_.begin()) {
      --it;
      if (it->part.lo() < reach_floor) break;
      if (it->part.contains(iv)) out.push_back(it->member);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::vector<TaggedPart> parts_;
  Rational max_len_{0};
};

}  // namespace detail

inline Refinement refines(std::span<const RSet> family, std::span<const RSet> cover) {
  Refinement r;
  r.witness.reserve(family.size());
  const bool indexed = cover.size() > 16;
  std::optional<detail::ContainmentIndex> index;
  if (indexed) index.emplace(cover);
  for (const auto& member : family) {
    std::optional<std::size_t> w;
    if (member.empty()) {
      if (!cover.empty()) w = 0;
    } else if (indexed) {
      for (std::size_t k : index->containing(member.front()))
        if (is_subset(member, cover[k])) {
          w = k;
          break;
        }
    } else {
      for (std::size_t k = 0; k < cover.size() && !w; ++k)
        if (is_subset(member, cover[k])) w = k;
    }
    r.ok = r.ok && w.has_value();
    r.witness.push_back(w);
  }
  return r;
}

/// The level-N truncation {[1/(2n+1), 1/(2n)] : 1 <= n <= N} of the classic
/// family of disjoint closed sets that fails to be discrete at 0.
inline std::vector<RSet> harmonic_truncation(long levels) {
  std::vector<RSet> out;
  for (long n = 1; n <= levels; ++n) out.emplace_back(Interval::closed(Rational(1, 2 * n + 1), Rational(1, 2 * n)));
  return out;
}

}  // namespace sscreen

#endif
