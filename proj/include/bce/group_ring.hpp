#pragma once

// The group ring K[Q/Z] with its endomorphisms sigma_n, the integral partial
// inverses rho~_n, rational rho_n and idempotents pi_n, Galois twists,
// augmentation, and the cyclotomic level algebras K[T]/(T^n - 1).

#include <vector>

#include "bce/lincomb.hpp"
#include "bce/qmodz.hpp"

namespace bce {

/// Sparse combination of the symbols e(r), r in Q/Z.
using GroupRingElem = LinComb<QmodZ>;

GroupRingElem gr_e(const Ring& ring, const QmodZ& r);
GroupRingElem gr_one(const Ring& ring);
GroupRingElem gr_scalar(const Ring& ring, const Coeff& c);

/// Bilinear extension of e(a) e(b) = e(a + b).
GroupRingElem gr_mul(const GroupRingElem& x, const GroupRingElem& y);
GroupRingElem gr_pow(const GroupRingElem& x, const Int& exponent);

/// e(r) -> e(n r), a ring endomorphism.
GroupRingElem sigma(const Int& n, const GroupRingElem& x);

/// e(g) -> sum of e(g') over the n solutions of n g' = g. Linear only.
GroupRingElem rho_tilde(const Int& n, const GroupRingElem& x);

/// (1/n) rho~_n; throws NotInvertible when n vanishes in the ring.
GroupRingElem rho(const Int& n, const GroupRingElem& x);

/// The idempotent rho_n(1).
GroupRingElem pi(const Int& n, const Ring& ring);

/// e(r) -> e(alpha r) on the level-N subalgebra, for alpha a unit mod N.
GroupRingElem galois_twist(const Int& alpha, const Int& level, const GroupRingElem& x);

/// e(r) -> 1.
Coeff augmentation(const GroupRingElem& x);

/// True if every label's denominator divides n.
bool has_level(const GroupRingElem& x, const Int& n);

/// A residue class modulo T^n - 1: exactly n coefficient slots.
class CyclotomicPoly {
 public:
  CyclotomicPoly(Ring ring, const Int& level);
  CyclotomicPoly(Ring ring, std::vector<Coeff> coeffs);

  /// The class u(n) of T.
  static CyclotomicPoly generator(const Ring& ring, const Int& level);

  const Ring& ring() const { return ring_; }
  const Int& level() const { return level_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  CyclotomicPoly operator+(const CyclotomicPoly& o) const;
  CyclotomicPoly operator*(const CyclotomicPoly& o) const;
  CyclotomicPoly pow(unsigned long e) const;

  bool operator==(const CyclotomicPoly& o) const;

 private:
  void check(const CyclotomicPoly& o) const;

  Ring ring_;
  Int level_;
  std::vector<Coeff> coeffs_;
};

/// u(n)^k -> e(k/n).
GroupRingElem poly_to_gr(const CyclotomicPoly& poly);

/// The level morphism u(n) -> u(m)^(m/n); requires n | m.
CyclotomicPoly level_map(const Int& m, const CyclotomicPoly& poly);

}  // namespace bce
