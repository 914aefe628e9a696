#include "bce/bc_algebra.hpp"

namespace bce {

BCElem bc_one(const Ring& ring) { return BCElem::basis(ring, BCMonomial{}); }

BCElem bc_scalar(const Ring& ring, const Coeff& c) { return BCElem(ring, BCMonomial{}, c); }

BCElem bc_monomial(const Ring& ring, const Int& a, const QmodZ& r, const Int& b) {
  if (a < 1 || b < 1) throw DomainError("mu~_a and mu*_b need a, b >= 1");
  if (gcd(a, b) != 1) {
    throw DomainError("normal-form monomials need gcd(a, b) = 1; got " + to_string(a) + ", " + to_string(b));
  }
  return BCElem::basis(ring, BCMonomial{r, PosRational(a, b)});
}

BCElem mu_tilde(const Ring& ring, const Int& n) {
  if (n < 1) throw DomainError("mu~_n needs n >= 1");
  return bc_monomial(ring, n, QmodZ(), 1);
}

BCElem mu_star(const Ring& ring, const Int& n) {
  if (n < 1) throw DomainError("mu*_n needs n >= 1");
  return bc_monomial(ring, 1, QmodZ(), n);
}

BCElem embed_gr(const GroupRingElem& x) {
  BCElem out(x.ring());
  for (const auto& [r, c] : x.terms()) out.add_term(BCMonomial{r, PosRational()}, c);
  return out;
}

bool is_abelian(const BCElem& x) {
  for (const auto& [m, c] : x.terms()) {
    if (!m.deg.is_one()) return false;
  }
  return true;
}

GroupRingElem abelian_part(const BCElem& x) {
  GroupRingElem out(x.ring());
  for (const auto& [m, c] : x.terms()) {
    if (!m.deg.is_one()) {
      throw DomainError("expected a group-ring element, found a term of degree " + m.deg.str());
    }
    out.add_term(m.r, c);
  }
  return out;
}

namespace {

// n mu~_u rho~_m(z) mu*_v for the product of two basis monomials; z = e(label).
void add_monomial_product(BCElem& out, const BCMonomial& x, const BCMonomial& y, const Coeff& c) {
  const Int& a = x.deg.a();
  const Int& b = x.deg.b();
  const Int& cc = y.deg.a();
  const Int& d = y.deg.b();
  const Int n = gcd(b, cc);
  const Int b1 = b / n;
  const Int c1 = cc / n;
  const QmodZ label = qmodz_scale(c1, x.r) + qmodz_scale(b1, y.r);
  const Int m = gcd(a * c1, b1 * d);
  const PosRational deg(a * c1 / m, b1 * d / m);
  const Coeff scaled = n == 1 ? c : c * Coeff::from_int(out.ring(), n);
  if (scaled.is_zero()) return;
  if (m == 1) {
    out.add_term(BCMonomial{label, deg}, scaled);
    return;
  }
  for (const auto& t : qmodz_preimages(m, label)) out.add_term(BCMonomial{t, deg}, scaled);
}

}  // namespace

BCElem bc_mul(const BCElem& x, const BCElem& y) {
  x.check_ring(y);
  BCElem out(x.ring());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) add_monomial_product(out, mx, my, cx * cy);
  }
  return out;
}

BCElem bc_pow(const BCElem& x, const Int& exponent) {
  if (exponent < 0) throw DomainError("negative powers are not defined");
  BCElem result = bc_one(x.ring());
  BCElem base = x;
  Int k = exponent;
  while (k > 0) {
    if (k % 2 == 1) result = bc_mul(result, base);
    k /= 2;
    if (k > 0) base = bc_mul(base, base);
  }
  return result;
}

BCElem bc_star(const BCElem& x) {
  if (!x.ring().divides_integers()) {
    throw DomainError("the involution needs division by integers (ring q or qsqrt), not " +
                      x.ring().name());
  }
  BCElem out(x.ring());
  for (const auto& [m, c] : x.terms()) {
    const Coeff factor = Coeff::from_rat(x.ring(), Rat(m.deg.a(), m.deg.b()));
    out.add_term(BCMonomial{-m.r, m.deg.inverse()}, c * factor);
  }
  return out;
}

namespace {

// Applies the monomial mu~_a e(r) mu*_b to xi(e(t), c/d), accumulating c * result.
void act_monomial(EElem& out, const BCMonomial& mono, const EBasis& v, const Coeff& c) {
  // mu*_b xi(y, c/d) = (b, c) xi(sigma_{b/n}(y), c/(b d)), n = (b, c)
  const Int& b = mono.deg.b();
  const Int n = gcd(b, v.deg.a());
  const QmodZ t1 = qmodz_scale(b / n, v.r);
  const PosRational deg1(v.deg.a(), b * v.deg.b());
  // e(s) xi(e(t), c/d) = xi(e(c s + t), c/d)
  const QmodZ t2 = qmodz_scale(deg1.a(), mono.r) + t1;
  // mu~_a xi(y, c/d) = xi(rho~_m(y), a c/d), m = (a, d)
  const Int& a = mono.deg.a();
  const Int m = gcd(a, deg1.b());
  const PosRational deg2(a * deg1.a(), deg1.b());
  const Coeff scaled = n == 1 ? c : c * Coeff::from_int(out.ring(), n);
  if (scaled.is_zero()) return;
  for (const auto& t : qmodz_preimages(m, t2)) out.add_term(EBasis{t, deg2}, scaled);
}

}  // namespace

EElem bc_act(const BCElem& x, const EElem& v) {
  if (!(x.ring() == v.ring())) {
    throw RingMismatch("ring mismatch: " + x.ring().name() + " vs " + v.ring().name());
  }
  EElem out(x.ring());
  for (const auto& [mono, cx] : x.terms()) {
    for (const auto& [basis, cv] : v.terms()) act_monomial(out, mono, basis, cx * cv);
  }
  return out;
}

EElem e_vacuum(const Ring& ring) { return EElem::basis(ring, EBasis{}); }

EElem bc_normal_coords(const BCElem& x) { return bc_act(x, e_vacuum(x.ring())); }

BCElem from_normal_coords(const EElem& v) {
  BCElem out(v.ring());
  for (const auto& [basis, c] : v.terms()) out.add_term(BCMonomial{basis.r, basis.deg}, c);
  return out;
}

GroupRingElem theta_act(const BCElem& x, const GroupRingElem& xi) {
  x.check_ring(embed_gr(xi));
  GroupRingElem out(x.ring());
  for (const auto& [m, c] : x.terms()) {
    GroupRingElem step = sigma(m.deg.b(), xi);
    step = gr_mul(gr_e(x.ring(), m.r), step);
    step = rho_tilde(m.deg.a(), step);
    out.add_scaled(step, c);
  }
  return out;
}

}  // namespace bce
