#pragma once

// The integral crossed product A = K[Q/Z] x| N generated by the group ring,
// mu~_n and mu*_n, stored in the normal-form basis mu~_a e(r) mu*_b with
// gcd(a, b) = 1.

#include "bce/group_ring.hpp"

namespace bce {

/// Basis monomial mu~_a e(r) mu*_b, with deg = a/b.
struct BCMonomial {
  QmodZ r;
  PosRational deg;

  friend bool operator==(const BCMonomial& x, const BCMonomial& y) {
    return x.deg == y.deg && x.r == y.r;
  }
  /// Printing order: (deg.b, deg.a, r.den, r.num).
  friend bool operator<(const BCMonomial& x, const BCMonomial& y) {
    if (!(x.deg == y.deg)) return x.deg < y.deg;
    return x.r < y.r;
  }
};

/// Basis vector xi(e(r), c/d) of the regular module E = K[Q/Z x Q*_+].
struct EBasis {
  QmodZ r;
  PosRational deg;

  friend bool operator==(const EBasis& x, const EBasis& y) { return x.deg == y.deg && x.r == y.r; }
  friend bool operator<(const EBasis& x, const EBasis& y) {
    if (!(x.deg == y.deg)) return x.deg < y.deg;
    return x.r < y.r;
  }
};

using BCElem = LinComb<BCMonomial>;
using EElem = LinComb<EBasis>;

BCElem bc_one(const Ring& ring);
BCElem bc_scalar(const Ring& ring, const Coeff& c);
BCElem bc_monomial(const Ring& ring, const Int& a, const QmodZ& r, const Int& b);
BCElem mu_tilde(const Ring& ring, const Int& n);
BCElem mu_star(const Ring& ring, const Int& n);
BCElem embed_gr(const GroupRingElem& x);

/// True if every term has degree 1, i.e. x lies in the group ring.
bool is_abelian(const BCElem& x);
/// Inverse of embed_gr; throws DomainError when x is not abelian.
GroupRingElem abelian_part(const BCElem& x);

BCElem bc_mul(const BCElem& x, const BCElem& y);
BCElem bc_pow(const BCElem& x, const Int& exponent);

/// The involution over Q or Q(sqrt): e(g)* = e(-g), mu~_n* = n mu*_n,
/// mu*_n* = (1/n) mu~_n. Complex conjugation is trivial on these rings.
BCElem bc_star(const BCElem& x);

/// Left action of A on E (the faithful regular representation).
EElem bc_act(const BCElem& x, const EElem& v);

/// xi(1, 1/1).
EElem e_vacuum(const Ring& ring);

/// x . xi(1, 1); relabels mu~_a e(r) mu*_b as xi(e(r), a/b).
EElem bc_normal_coords(const BCElem& x);

/// Reads a vector of E back as an element of A (inverse of bc_normal_coords).
BCElem from_normal_coords(const EElem& v);

/// The representation theta on the group ring: e(r) acts by multiplication,
/// mu~_n by rho~_n and mu*_n by sigma_n.
GroupRingElem theta_act(const BCElem& x, const GroupRingElem& xi);

}  // namespace bce
