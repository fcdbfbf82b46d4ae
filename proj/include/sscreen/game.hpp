#ifndef SSCREEN_GAME_HPP
#define SSCREEN_GAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cantor.hpp"
#include "enumerations.hpp"
#include "ordinal.hpp"
#include "rset.hpp"

namespace sscreen {

enum class Ruleset { Discrete, Disjoint };

inline std::string to_string(Ruleset r) { return r == Ruleset::Discrete ? "discrete" : "disjoint"; }

inline Ruleset parse_ruleset(std::string_view s) {
  if (s == "d" || s == "discrete") return Ruleset::Discrete;
  if (s == "c" || s == "disjoint") return Ruleset::Disjoint;
  throw ParseError("unknown ruleset '" + std::string(s) + "' (d|discrete|c|disjoint)");
}

/// What TWO has to cover. Text forms: `full`, `closed:<rset>`, `cantor`,
/// `countable:<enum>`, `gdelta:<enum>` (ambient minus the enumerated points).
struct TargetSpec {
  enum class Kind { Full, ClosedRSet, Cantor, Countable, GDelta };
  Kind kind = Kind::Full;
  RSet closed;
  std::string sequence;

  static TargetSpec parse(std::string_view text) {
    TargetSpec t;
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view tail = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
    if (head == "full" && tail.empty()) return t;
    if (head == "cantor" && tail.empty()) {
      t.kind = Kind::Cantor;
      return t;
    }
    if (head == "closed") {
      t.kind = Kind::ClosedRSet;
      t.closed = RSet::parse(tail);
      if (!is_closed_set(t.closed) || t.closed.empty()) throw ParseError("closed target must be a nonempty closed set");
      return t;
    }
    if (head == "countable" || head == "gdelta") {
      t.kind = head == "countable" ? Kind::Countable : Kind::GDelta;
      t.sequence = tail.empty() ? "farey" : std::string(tail);
      RationalEnumeration check(t.sequence);
      return t;
    }
    throw ParseError("unknown target '" + std::string(text) + "' (full|closed:<set>|cantor|countable:<enum>|gdelta:<enum>)");
  }

  std::string str() const {
    switch (kind) {
      case Kind::Full: return "full";
      case Kind::ClosedRSet: return "closed:" + closed.str();
      case Kind::Cantor: return "cantor";
      case Kind::Countable: return "countable:" + sequence;
      case Kind::GDelta: return "gdelta:" + sequence;
    }
    return "full";
  }
};

struct GameConfig {
  Ruleset ruleset = Ruleset::Discrete;
  Ordinal length = Ordinal(1);
  Interval ambient = Interval::closed(0, 1);
  TargetSpec target;
  std::string one = "one:grid";
  std::string two = "two:halving";
  InningSchedule schedule;
  /// Closed subspace Y the game is restricted to: covers are traced on Y and Y is the target.
  std::optional<Interval> subspace;
  /// ONE's strategy is played on this closed subinterval and lifted to the ambient.
  std::optional<Interval> one_home;
};

/// The finite history summary ONE's limit move may depend on.
struct LimitDigest {
  std::uint64_t innings = 0;
  Rational covered_measure{0};
};

/// What the players see: the space they play in and the rules.
struct PlayContext {
  Interval ambient = Interval::closed(0, 1);
  TargetSpec target;
  Ruleset ruleset = Ruleset::Discrete;
};

}  // namespace sscreen

#endif
