#ifndef SSCREEN_ENUMERATIONS_HPP
#define SSCREEN_ENUMERATIONS_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace sscreen {

/// An injective enumeration of rational points of [0,1], identified by name.
///
///   farey   : 1/2, 0, 1, then p/q in lowest terms by increasing q, then p (all of Q in [0,1])
///   triadic : 0, 1, then k/3^j with 3 not dividing k, by increasing j (never hits 1/2)
class RationalEnumeration {
 public:
  explicit RationalEnumeration(std::string id) : id_(std::move(id)) {
    if (id_ != "farey" && id_ != "triadic") throw DomainError("unknown enumeration '" + id_ + "' (farey|triadic)");
  }

  const std::string& id() const { return id_; }

  const Rational& at(std::size_t k) const {
    while (cache_.size() <= k) extend();
    return cache_[k];
  }

  std::vector<Rational> prefix(std::size_t n) const {
    at(n ? n - 1 : 0);
    return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(n)};
  }

 private:
  void extend() const {
    if (cache_.empty()) {
      if (id_ == "farey") cache_ = {Rational(1, 2), Rational(0), Rational(1)};
      else cache_ = {Rational(0), Rational(1)};
      level_ = id_ == "farey" ? 2 : 0;
      return;
    }
    ++level_;
    if (id_ == "farey") {
      long q = level_;
      for (long p = 1; p < q; ++p)
        if (std::gcd(p, q) == 1) cache_.emplace_back(p, q);
    } else {
      long den = 1;
      for (long i = 0; i < level_; ++i) den *= 3;
      for (long k = 1; k < den; ++k)
        if (k % 3 != 0) cache_.emplace_back(k, den);
    }
  }

  std::string id_;
  mutable std::vector<Rational> cache_;
  mutable long level_ = 0;
};

}  // namespace sscreen

#endif
