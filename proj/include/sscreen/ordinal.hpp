#ifndef SSCREEN_ORDINAL_HPP
#define SSCREEN_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace sscreen {

/// An ordinal below w^w in Cantor normal form: w^e1*c1 + ... + w^ek*ck with
/// e1 > ... > ek >= 0 and every coefficient >= 1. The empty sum is 0.
class Ordinal {
 public:
  struct Term {
    std::uint32_t exponent = 0;
    std::uint64_t coefficient = 1;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Ordinal() = default;
  Ordinal(std::uint64_t n) {  // NOLINT(google-explicit-constructor)
    if (n) terms_.push_back({0, n});
  }
  explicit Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coefficient == 0) throw ConstructionError("CNF coefficient must be positive");
      if (i && terms_[i - 1].exponent <= terms_[i].exponent)
        throw ConstructionError("CNF exponents must strictly decrease");
    }
  }

  static Ordinal omega_power(std::uint32_t e, std::uint64_t c = 1) { return Ordinal({{e, c}}); }
  static Ordinal omega() { return omega_power(1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0); }
  bool is_limit() const { return !terms_.empty() && terms_.back().exponent > 0; }
  bool is_successor() const { return !terms_.empty() && terms_.back().exponent == 0; }
  std::uint64_t finite_part() const { return is_successor() ? terms_.back().coefficient : 0; }
  std::uint64_t as_finite() const {
    if (!is_finite()) throw DomainError("ordinal " + str() + " is infinite");
    return finite_part();
  }

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    for (std::size_t i = 0; i < a.terms_.size() && i < b.terms_.size(); ++i) {
      if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
      if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  /// Ordinal sum a + b: terms of a below b's leading exponent are absorbed.
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    std::uint32_t lead = b.terms_.front().exponent;
    std::vector<Term> out;
    for (const auto& t : a.terms_) {
      if (t.exponent < lead) break;
      out.push_back(t);
    }
    auto it = b.terms_.begin();
    if (!out.empty() && out.back().exponent == lead) {
      out.back().coefficient += it->coefficient;
      ++it;
    }
    out.insert(out.end(), it, b.terms_.end());
    return Ordinal(std::move(out));
  }

  Ordinal successor() const { return *this + Ordinal(1); }

  /// Canonical text: `w^e*c` for e >= 2, `w` / `w*c` for e = 1, plain naturals, joined by `+`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      if (i) s += "+";
      if (t.exponent == 0)
        s += std::to_string(t.coefficient);
      else if (t.exponent == 1)
        s += t.coefficient == 1 ? "w" : "w*" + std::to_string(t.coefficient);
      else
        s += "w^" + std::to_string(t.exponent) + "*" + std::to_string(t.coefficient);
    }
    return s;
  }

  /// Parses `term ("+" term)*` with term := `w^e*c` | `w^e` | `w*c` | `w` | nat.
  /// Non-normal sums are evaluated with ordinal addition (`1+w` is `w`).
  static Ordinal parse(std::string_view text) {
    std::string clean;
    for (char c : text)
      if (c != ' ') clean += c;
    if (clean.empty()) throw ParseError("empty ordinal");
    Ordinal total;
    std::size_t pos = 0;
    auto fail = [&] { return ParseError("bad ordinal syntax: '" + std::string(text) + "'"); };
    auto read_nat = [&](std::uint64_t& out) {
      std::size_t start = pos;
      out = 0;
      while (pos < clean.size() && clean[pos] >= '0' && clean[pos] <= '9') {
        if (out > (UINT64_MAX - 9) / 10) throw ParseError("ordinal coefficient too large");
        out = out * 10 + static_cast<std::uint64_t>(clean[pos++] - '0');
      }
      if (pos == start) throw fail();
    };
    while (true) {
      Ordinal term;
      if (clean[pos] == 'w') {
        ++pos;
        std::uint64_t e = 1, c = 1;
        if (pos < clean.size() && clean[pos] == '^') {
          ++pos;
          read_nat(e);
          if (e > UINT32_MAX) throw ParseError("ordinal exponent too large");
        }
        if (pos < clean.size() && clean[pos] == '*') {
          ++pos;
          read_nat(c);
        }
        if (c) term = e == 0 ? Ordinal(c) : omega_power(static_cast<std::uint32_t>(e), c);
      } else {
        std::uint64_t n = 0;
        read_nat(n);
        term = Ordinal(n);
      }
      total = total + term;
      if (pos == clean.size()) break;
      if (clean[pos] != '+') throw fail();
      ++pos;
      if (pos == clean.size()) throw fail();
    }
    return total;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ordinal& o) { return os << o.str(); }

 private:
  std::vector<Term> terms_;
};

/// alpha^- for infinite alpha = w^b1*n1 + ... + w^bm*nm + n:
///   alpha                                  if n = 0 and bm > 1,
///   w^b1*n1 + ... + w^bm*(nm - 1) + 1      if n = 0 and bm = 1,
///   w^b1*n1 + ... + w^bm*nm + 1            otherwise.
inline Ordinal alpha_minus(const Ordinal& alpha) {
  if (alpha.is_finite()) throw DomainError("alpha_minus is defined for infinite ordinals only, got " + alpha.str());
  std::vector<Ordinal::Term> t = alpha.terms();
  if (t.back().exponent == 0) {
    t.back().coefficient = 1;
    return Ordinal(std::move(t));
  }
  if (t.back().exponent > 1) return alpha;
  if (--t.back().coefficient == 0) t.pop_back();
  t.push_back({0, 1});
  return Ordinal(std::move(t));
}

/// How a transfinite game is materialized: `main_budget` innings are played
/// before each limit stage; further pre-limit innings appear only on demand.
struct InningSchedule {
  std::uint64_t main_budget = 8;
  std::string extension_policy = "on-demand";
};

struct InningLabel {
  Ordinal ordinal;
  bool limit_marker = false;  ///< the stage reached at `ordinal` after its predecessors
  std::string str() const { return limit_marker ? "limit(" + ordinal.str() + ")" : ordinal.str(); }
  friend bool operator==(const InningLabel&, const InningLabel&) = default;
};

namespace detail {

inline void enumerate_block(const Ordinal& base, std::uint32_t exponent, const InningSchedule& sched,
                            std::vector<InningLabel>& out) {
  if (exponent == 0) {
    out.push_back({base, false});
    return;
  }
  for (std::uint64_t i = 0; i < sched.main_budget; ++i) {
    Ordinal start = i == 0 ? base : base + Ordinal::omega_power(exponent - 1, i);
    enumerate_block(start, exponent - 1, sched, out);
  }
  out.push_back({base + Ordinal::omega_power(exponent), true});
}

}  // namespace detail

/// The innings actually simulated for a game of the given length, in order:
/// successor tails in full, and before every limit stage the first
/// `main_budget` predecessor blocks followed by a limit marker.
inline std::vector<InningLabel> inning_iterator(const Ordinal& length, const InningSchedule& sched) {
  if (length.is_zero()) throw DomainError("game length must be positive");
  if (sched.main_budget < 1) throw DomainError("schedule budget must be >= 1");
  std::vector<InningLabel> out;
  Ordinal base;
  for (const auto& term : length.terms()) {
    for (std::uint64_t c = 0; c < term.coefficient; ++c) {
      detail::enumerate_block(base, term.exponent, sched, out);
      base = base + Ordinal::omega_power(term.exponent);
    }
  }
  return out;
}

}  // namespace sscreen

#endif
