#ifndef SSCREEN_ANALYZER_HPP
#define SSCREEN_ANALYZER_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "engine.hpp"

namespace sscreen {

/// Fresh instances of a deterministic TWO strategy, so plays can be replayed.
using TwoFactory = std::function<std::unique_ptr<TwoPlayer>()>;

inline TwoFactory two_factory(std::string id, PlayContext ctx = {}) {
  make_two(id, ctx);
  return [id = std::move(id), ctx = std::move(ctx)] { return make_two(id, ctx); };
}

/// Raised when a replayed strategy answers illegally.
struct RefereeError : DomainError {
  RefereeError(const Rejection& r) : DomainError(r.kind + ": " + r.message), rejection(r) {}  // NOLINT
  Rejection rejection;
};

/// TWO's answer to the last of the ball covers B_{n_1}, ..., B_{n_k}, refereed inning by inning.
inline std::vector<RSet> replay_last(const TwoFactory& two, const std::vector<int>& indices, const Interval& ambient) {
  auto player = two();
  std::vector<RSet> last;
  RSet amb(ambient);
  for (std::size_t j = 0; j < indices.size(); ++j) {
    Cover cover = ball_cover({indices[j]}, ambient);
    last = player->respond(InningLabel{Ordinal(j), false}, cover);
    auto judged = referee_step(Ruleset::Discrete, cover, last, amb);
    if (!judged.accepted()) throw RefereeError(*judged.rejection);
  }
  return last;
}

struct CoreApproximation {
  std::vector<int> tau;
  int depth_m = 1;
  RSet set;
  std::vector<RSet> levels;  ///< the approximation after m = 1..depth_m
};

/// Intersection over m <= depth_m of closure(union of TWO's answer to B_tau, B_m).
/// Decreasing in depth_m and always above the true core.
inline CoreApproximation strategy_core(const TwoFactory& two, const std::vector<int>& tau, int depth_m,
                                       const Interval& ambient = Interval::closed(0, 1)) {
  if (depth_m < 1) throw DomainError("depth must be positive");
  for (int t : tau)
    if (t < 1) throw DomainError("tau entries must be positive");
  CoreApproximation c{tau, depth_m, RSet(ambient), {}};
  for (int m = 1; m <= depth_m; ++m) {
    std::vector<int> seq = tau;
    seq.push_back(m);
    c.set = intersect(c.set, closure(union_all(replay_last(two, seq, ambient))));
    c.levels.push_back(c.set);
  }
  return c;
}

struct EscapeStep {
  int index = 0;
  RSet response_closure;  ///< closure of the union of TWO's answer at this prefix
};

struct EscapeCertificate {
  Rational witness;
  std::vector<EscapeStep> steps;
  std::vector<int> indices() const {
    std::vector<int> out;
    for (const auto& s : steps) out.push_back(s.index);
    return out;
  }
};

struct EscapeSearch {
  std::optional<EscapeCertificate> certificate;
  std::size_t depth_reached = 0;
  std::vector<std::size_t> exhausted_at;  ///< steps where no index kept the witness outside
  EscapeCertificate partial;
};

/// Greedy search for a play B_{n_1}, B_{n_2}, ... against which every answer's
/// closure misses the witness. Failure is reported as exhaustion, never as a TWO win.
inline EscapeSearch find_escape(const TwoFactory& two, const Rational& witness, int depth_k, int search_m,
                                const Interval& ambient = Interval::closed(0, 1)) {
  if (!ambient.contains(witness)) throw DomainError("witness " + witness.str() + " lies outside the ambient");
  EscapeSearch out;
  out.partial.witness = witness;
  std::vector<int> prefix;
  for (int step = 0; step < depth_k; ++step) {
    bool found = false;
    for (int m = 1; m <= search_m && !found; ++m) {
      prefix.push_back(m);
      RSet cl = closure(union_all(replay_last(two, prefix, ambient)));
      if (!contains_point(cl, witness)) {
        out.partial.steps.push_back({m, cl});
        found = true;
      } else {
        prefix.pop_back();
      }
    }
    if (!found) {
      out.exhausted_at.push_back(static_cast<std::size_t>(step));
      break;
    }
    out.depth_reached = static_cast<std::size_t>(step + 1);
  }
  if (out.depth_reached == static_cast<std::size_t>(depth_k)) out.certificate = out.partial;
  return out;
}

/// Replays every prefix of the certificate and checks the witness stays outside each answer's closure.
inline bool verify_escape(const TwoFactory& two, const EscapeCertificate& cert,
                          const Interval& ambient = Interval::closed(0, 1)) {
  std::vector<int> prefix;
  for (const auto& s : cert.steps) {
    prefix.push_back(s.index);
    RSet cl = closure(union_all(replay_last(two, prefix, ambient)));
    if (contains_point(cl, cert.witness) || !(cl == s.response_closure)) return false;
  }
  return true;
}

/// A part of the connected ambient that a finite discrete family of open sets
/// leaves uncovered: an open gap between closures when there is one, else a
/// missing point of the single dense member (interior points preferred).
inline std::variant<Interval, Rational> dense_discrete_witness(const std::vector<RSet>& family,
                                                              const Interval& ambient = Interval::closed(0, 1)) {
  if (auto clash = is_discrete(family); std::holds_alternative<PairClash>(clash))
    throw DomainError("family is not discrete");
  RSet amb(ambient);
  RSet shadow;
  for (const auto& m : family) shadow = set_union(shadow, closure(m));
  RSet rest = subtract(amb, shadow);
  for (const auto& iv : rest.components())
    if (!iv.is_point()) return Interval::open(iv.lo(), iv.hi());
  if (family.size() >= 2)
    throw InvariantViolation("closures of " + std::to_string(family.size()) + " discrete members cover the connected ambient");
  RSet missing = subtract(amb, union_all(family));
  if (missing.empty()) throw DomainError("family covers the whole ambient");
  for (const auto& iv : missing.components())
    if (ambient.lo() < iv.lo() && iv.lo() < ambient.hi()) return iv.lo();
  return missing.front().lo();
}

}  // namespace sscreen

#endif
