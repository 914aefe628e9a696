#include "bce/hecke.hpp"

namespace bce {

namespace {

void require_sqrt_ring(const Ring& ring, const char* op) {
  if (ring.kind() != RingKind::SqrtRational) {
    throw DomainError(std::string(op) + " needs the ring qsqrt, not " + ring.name());
  }
}

}  // namespace

HeckeElem hecke_one(const Ring& ring) { return HeckeElem::basis(ring, NuMonomial{}); }

HeckeElem hecke_monomial(const Ring& ring, const Int& a, const QmodZ& r, const Int& b) {
  return phi_inv(bc_monomial(ring, a, r, b));
}

HeckeElem nu(const Ring& ring, const Int& n) { return phi_inv(mu_tilde(ring, n)); }

HeckeElem nu_star(const Ring& ring, const Int& n) { return phi_inv(mu_star(ring, n)); }

HeckeElem hecke_embed_gr(const GroupRingElem& x) { return phi_inv(embed_gr(x)); }

BCElem phi(const HeckeElem& x) {
  BCElem out(x.ring());
  for (const auto& [m, c] : x.terms()) out.add_term(BCMonomial{m.r, m.deg}, c);
  return out;
}

HeckeElem phi_inv(const BCElem& x) {
  HeckeElem out(x.ring());
  for (const auto& [m, c] : x.terms()) out.add_term(NuMonomial{m.r, m.deg}, c);
  return out;
}

HeckeElem hecke_mul(const HeckeElem& x, const HeckeElem& y) { return phi_inv(bc_mul(phi(x), phi(y))); }

HeckeElem hecke_pow(const HeckeElem& x, const Int& exponent) { return phi_inv(bc_pow(phi(x), exponent)); }

HeckeElem hecke_star(const HeckeElem& x) {
  if (!x.ring().divides_integers()) {
    throw DomainError("the Hecke involution is defined here over q or qsqrt, not " + x.ring().name());
  }
  HeckeElem out(x.ring());
  for (const auto& [m, c] : x.terms()) out.add_term(NuMonomial{-m.r, m.deg.inverse()}, c);
  return out;
}

InvolutionWitness involution_mismatch_witness() { return involution_mismatch_witness(nu(Ring::rationals(), 2)); }

InvolutionWitness involution_mismatch_witness(const HeckeElem& w) {
  return InvolutionWitness{w, phi(hecke_star(w)), bc_star(phi(w))};
}

Coeff sqrt_ratio(const Ring& ring, const PosRational& deg) {
  require_sqrt_ring(ring, "sqrt ratio");
  // sqrt(b/a) = sqrt(a b) / a
  return Coeff(SqrtRational::sqrt(deg.a() * deg.b())) * Coeff::from_rat(ring, Rat(Int(1), deg.a()));
}

BCElem sigma_i_half(const BCElem& x) {
  require_sqrt_ring(x.ring(), "sigma_{i/2}");
  BCElem out(x.ring());
  for (const auto& [m, c] : x.terms()) out.add_term(m, c * sqrt_ratio(x.ring(), m.deg));
  return out;
}

BCElem psi(const HeckeElem& x) {
  require_sqrt_ring(x.ring(), "psi");
  const Ring& ring = x.ring();
  BCElem out(ring);
  // psi(nu_a e(r) nu*_b) = psi(nu_a) e(r) psi(nu*_b), from the generator images
  for (const auto& [m, c] : x.terms()) {
    const Coeff inv_sqrt_a = Coeff::sqrt(ring, m.deg.a()) * Coeff::from_rat(ring, Rat(Int(1), m.deg.a()));
    const Coeff sqrt_b = Coeff::sqrt(ring, m.deg.b());
    BCElem image = bc_mul(mu_tilde(ring, m.deg.a()).scaled(inv_sqrt_a),
                          bc_mul(embed_gr(gr_e(ring, m.r)), mu_star(ring, m.deg.b()).scaled(sqrt_b)));
    out.add_scaled(image, c);
  }
  return out;
}

}  // namespace bce
