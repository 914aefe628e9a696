#pragma once

#include <map>
#include <string>

#include "bce/numbers.hpp"

namespace bce {

/// Exact sum  q_1 + q_2 sqrt(2) + q_3 sqrt(3) + ...  over squarefree radicands.
///
/// Keys are squarefree positive integers (1 is the rational part) and no
/// stored coefficient is zero. The product rule sqrt(s) sqrt(t) =
/// g sqrt(s t / g^2) with g = gcd(s, t) keeps keys squarefree.
class SqrtRational {
 public:
  using Terms = std::map<Int, Rat>;

  SqrtRational() = default;
  explicit SqrtRational(const Rat& q);

  /// sqrt(n) for any n >= 0, simplified to f sqrt(s).
  static SqrtRational sqrt(const Int& n);
  /// q sqrt(s) with s squarefree.
  static SqrtRational term(const Int& s, const Rat& q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when only the rational part is present.
  bool is_rational() const;
  Rat rational_part() const;

  SqrtRational operator+(const SqrtRational& o) const;
  SqrtRational operator-(const SqrtRational& o) const;
  SqrtRational operator-() const;
  SqrtRational operator*(const SqrtRational& o) const;

  /// Multiplicative inverse via repeated conjugation; throws on zero.
  SqrtRational inverse() const;

  std::string str() const;

  friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(const Int& s, const Rat& q);

  Terms terms_;
};

}  // namespace bce
