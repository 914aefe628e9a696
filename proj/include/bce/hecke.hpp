#pragma once

// The Hecke presentation with generators nu_n, nu*_n over the group ring,
// its isomorphism phi with the crossed product, the Hecke involution, the
// rescaled isomorphism psi over Q(sqrt) and the sigma_{i/2} scaling.

#include "bce/bc_algebra.hpp"

namespace bce {

/// Basis monomial nu_a e(r) nu*_b, deg = a/b, gcd(a, b) = 1.
struct NuMonomial {
  QmodZ r;
  PosRational deg;

  friend bool operator==(const NuMonomial& x, const NuMonomial& y) {
    return x.deg == y.deg && x.r == y.r;
  }
  friend bool operator<(const NuMonomial& x, const NuMonomial& y) {
    if (!(x.deg == y.deg)) return x.deg < y.deg;
    return x.r < y.r;
  }
};

using HeckeElem = LinComb<NuMonomial>;

HeckeElem hecke_one(const Ring& ring);
HeckeElem nu(const Ring& ring, const Int& n);
HeckeElem nu_star(const Ring& ring, const Int& n);
HeckeElem hecke_embed_gr(const GroupRingElem& x);
HeckeElem hecke_monomial(const Ring& ring, const Int& a, const QmodZ& r, const Int& b);

/// nu_n -> mu~_n, nu*_n -> mu*_n, identity on e(r): coefficient-preserving.
BCElem phi(const HeckeElem& x);
HeckeElem phi_inv(const BCElem& x);

/// Product transported through phi.
HeckeElem hecke_mul(const HeckeElem& x, const HeckeElem& y);
HeckeElem hecke_pow(const HeckeElem& x, const Int& exponent);

/// e(g)* = e(-g), nu_n* = nu*_n; needs Q or Q(sqrt).
HeckeElem hecke_star(const HeckeElem& x);

struct InvolutionWitness {
  HeckeElem w;
  BCElem phi_of_star;  // phi(w*)
  BCElem star_of_phi;  // phi(w)*
  bool mismatch() const { return phi_of_star != star_of_phi; }
};

/// Compares phi(w*) with phi(w)* over Q; the default witness is nu_2.
InvolutionWitness involution_mismatch_witness();
InvolutionWitness involution_mismatch_witness(const HeckeElem& w);

/// psi(nu_n) = n^(-1/2) mu~_n, psi(nu*_n) = n^(1/2) mu*_n; Q(sqrt) only.
BCElem psi(const HeckeElem& x);

/// Scales mu~_a e(r) mu*_b by a^(-1/2) b^(1/2); Q(sqrt) only.
BCElem sigma_i_half(const BCElem& x);

/// sqrt(b/a) in Q(sqrt).
Coeff sqrt_ratio(const Ring& ring, const PosRational& deg);

}  // namespace bce
