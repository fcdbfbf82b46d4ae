#ifndef SSCREEN_RATIONAL_HPP
#define SSCREEN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace sscreen {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw ConstructionError("rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses `p`, `-p`, `p/q`, `-p/q` (decimal integers, q != 0).
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto is_int = [](std::string_view s, bool allow_sign) {
      if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false))
      throw ParseError("not a rational: '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(zn, zd));
  }

  static Rational pow2(long e) {
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(mpz_class(1), p));
  }
  static Rational pow3(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(mpz_class(1), p));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Largest integer <= this.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// Canonical text: `p` for integers, `p/q` otherwise.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  /// Always `p/q` (used where the wire format demands it).
  std::string fraction_str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

  double approx() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace sscreen

#endif
