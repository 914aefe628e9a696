#include "bce/group_ring.hpp"

namespace bce {

GroupRingElem gr_e(const Ring& ring, const QmodZ& r) { return GroupRingElem::basis(ring, r); }

GroupRingElem gr_one(const Ring& ring) { return gr_e(ring, QmodZ()); }

GroupRingElem gr_scalar(const Ring& ring, const Coeff& c) { return GroupRingElem(ring, QmodZ(), c); }

GroupRingElem gr_mul(const GroupRingElem& x, const GroupRingElem& y) {
  x.check_ring(y);
  GroupRingElem out(x.ring());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add_term(a + b, ca * cb);
  }
  return out;
}

GroupRingElem gr_pow(const GroupRingElem& x, const Int& exponent) {
  if (exponent < 0) throw DomainError("negative powers are not defined in the group ring");
  GroupRingElem result = gr_one(x.ring());
  GroupRingElem base = x;
  Int k = exponent;
  while (k > 0) {
    if (k % 2 == 1) result = gr_mul(result, base);
    k /= 2;
    if (k > 0) base = gr_mul(base, base);
  }
  return result;
}

GroupRingElem sigma(const Int& n, const GroupRingElem& x) {
  if (n < 1) throw DomainError("sigma_n needs n >= 1");
  GroupRingElem out(x.ring());
  for (const auto& [r, c] : x.terms()) out.add_term(qmodz_scale(n, r), c);
  return out;
}

GroupRingElem rho_tilde(const Int& n, const GroupRingElem& x) {
  if (n < 1) throw DomainError("rho~_n needs n >= 1");
  if (n == 1) return x;
  GroupRingElem out(x.ring());
  for (const auto& [r, c] : x.terms()) {
    for (const auto& s : qmodz_preimages(n, r)) out.add_term(s, c);
  }
  return out;
}

namespace {

// 1/n, or an error in the form "rho_2 undefined over F_2: 2 is not invertible".
Coeff inverse_for(const std::string& op, const Int& n, const Ring& ring) {
  if (Coeff::from_int(ring, n).is_zero() || ring.kind() == RingKind::Integer) {
    if (ring.kind() != RingKind::Integer || (n != 1 && n != -1)) {
      std::string msg = op + "_" + to_string(n) + " undefined over " + ring.name() + ": " +
                        to_string(n) + " is not invertible";
      if (ring.is_finite_field()) msg += " (characteristic " + std::to_string(ring.characteristic()) + ")";
      throw NotInvertible(msg);
    }
  }
  return inverse_of_integer(ring, n);
}

}  // namespace

GroupRingElem rho(const Int& n, const GroupRingElem& x) {
  if (n < 1) throw DomainError("rho_n needs n >= 1");
  return rho_tilde(n, x).scaled(inverse_for("rho", n, x.ring()));
}

GroupRingElem pi(const Int& n, const Ring& ring) {
  if (n < 1) throw DomainError("pi_n needs n >= 1");
  return rho_tilde(n, gr_one(ring)).scaled(inverse_for("pi", n, ring));
}

bool has_level(const GroupRingElem& x, const Int& n) {
  for (const auto& [r, c] : x.terms()) {
    if (n % r.den() != 0) return false;
  }
  return true;
}

GroupRingElem galois_twist(const Int& alpha, const Int& level, const GroupRingElem& x) {
  if (level < 1) throw DomainError("twist level must be positive");
  if (gcd(alpha, level) != 1) {
    throw DomainError("twist by " + to_string(alpha) + " is not invertible at level " +
                      to_string(level));
  }
  if (!has_level(x, level)) {
    throw DomainError("element has terms outside level " + to_string(level));
  }
  GroupRingElem out(x.ring());
  for (const auto& [r, c] : x.terms()) out.add_term(QmodZ(alpha * r.num(), r.den()), c);
  return out;
}

Coeff augmentation(const GroupRingElem& x) {
  Coeff sum = Coeff::zero(x.ring());
  for (const auto& [r, c] : x.terms()) sum = sum + c;
  return sum;
}

CyclotomicPoly::CyclotomicPoly(Ring ring, const Int& level) : ring_(std::move(ring)), level_(level) {
  if (level < 1) throw DomainError("cyclotomic level must be positive");
  coeffs_.assign(to_u64(level), Coeff::zero(ring_));
}

CyclotomicPoly::CyclotomicPoly(Ring ring, std::vector<Coeff> coeffs)
    : ring_(std::move(ring)), level_(static_cast<unsigned long>(coeffs.size())), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("cyclotomic level must be positive");
}

CyclotomicPoly CyclotomicPoly::generator(const Ring& ring, const Int& level) {
  CyclotomicPoly u(ring, level);
  u.coeffs_[level == 1 ? 0 : 1] = Coeff::one(ring);
  return u;
}

void CyclotomicPoly::check(const CyclotomicPoly& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("cyclotomic ring mismatch");
  if (level_ != o.level_) throw DomainError("cyclotomic level mismatch");
}

CyclotomicPoly CyclotomicPoly::operator+(const CyclotomicPoly& o) const {
  check(o);
  CyclotomicPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return out;
}

CyclotomicPoly CyclotomicPoly::operator*(const CyclotomicPoly& o) const {
  check(o);
  const std::size_t n = coeffs_.size();
  CyclotomicPoly out(ring_, level_);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      auto& slot = out.coeffs_[(i + j) % n];
      slot = slot + coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

CyclotomicPoly CyclotomicPoly::pow(unsigned long e) const {
  CyclotomicPoly result(ring_, level_);
  result.coeffs_[0] = Coeff::one(ring_);
  for (unsigned long i = 0; i < e; ++i) result = result * *this;
  return result;
}

bool CyclotomicPoly::operator==(const CyclotomicPoly& o) const {
  return ring_ == o.ring_ && level_ == o.level_ && coeffs_ == o.coeffs_;
}

GroupRingElem poly_to_gr(const CyclotomicPoly& poly) {
  GroupRingElem out(poly.ring());
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
    out.add_term(QmodZ(static_cast<unsigned long>(k), poly.level()), poly.coeffs()[k]);
  }
  return out;
}

CyclotomicPoly level_map(const Int& m, const CyclotomicPoly& poly) {
  if (m < 1 || m % poly.level() != 0) {
    throw DomainError("level map needs " + to_string(poly.level()) + " | " + to_string(m));
  }
  const Int a = m / poly.level();
  std::vector<Coeff> slots(to_u64(m), Coeff::zero(poly.ring()));
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
    std::size_t target = to_u64(mod(a * static_cast<unsigned long>(k), m));
    slots[target] = slots[target] + poly.coeffs()[k];
  }
  return CyclotomicPoly(poly.ring(), std::move(slots));
}

}  // namespace bce
