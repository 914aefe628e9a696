#pragma once

// Torsion labels r in Q/Z and monomial degrees a/b in Q*_+.

#include <string>
#include <utility>
#include <vector>

#include "bce/numbers.hpp"

namespace bce {

/// A class r = num/den in Q/Z, kept in [0, 1) with gcd(num, den) = 1.
class QmodZ {
 public:
  QmodZ() : num_(0), den_(1) {}
  /// Any integers with den != 0; reduced mod 1 and to lowest terms.
  QmodZ(const Int& num, const Int& den);
  explicit QmodZ(const Rat& q);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  Rat value() const { return Rat(num_, den_); }

  QmodZ operator+(const QmodZ& o) const;
  QmodZ operator-(const QmodZ& o) const;
  QmodZ operator-() const;

  /// Parses "num/den" or an integer.
  static QmodZ parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const QmodZ& a, const QmodZ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Ordered by (den, num).
  friend bool operator<(const QmodZ& a, const QmodZ& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

 private:
  Int num_;
  Int den_;
};

/// A reduced positive rational a/b.
class PosRational {
 public:
  PosRational() : a_(1), b_(1) {}
  PosRational(const Int& a, const Int& b);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  bool is_one() const { return a_ == 1 && b_ == 1; }

  PosRational operator*(const PosRational& o) const;
  PosRational inverse() const { return PosRational(b_, a_); }

  static PosRational parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const PosRational& x, const PosRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Ordered by (b, a), the printing order for crossed-product monomials.
  friend bool operator<(const PosRational& x, const PosRational& y) {
    if (x.b_ != y.b_) return x.b_ < y.b_;
    return x.a_ < y.a_;
  }

 private:
  Int a_;
  Int b_;
};

/// n * r mod 1.
QmodZ qmodz_scale(const Int& n, const QmodZ& r);

/// All s with n * s = r, sorted by (den, num).
std::vector<QmodZ> qmodz_preimages(const Int& n, const QmodZ& r);

/// Splits r = r_p + r' with den(r_p) a power of p and den(r') prime to p.
std::pair<QmodZ, QmodZ> p_decompose(const QmodZ& r, const Int& p);

}  // namespace bce
