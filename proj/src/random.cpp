#include "bce/random.hpp"

namespace bce {

std::uint64_t RandomSource::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

long RandomSource::signed_uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

QmodZ RandomSource::qmodz(std::uint64_t max_den) {
  std::uint64_t den = uniform(1, max_den);
  return QmodZ(Int(static_cast<unsigned long>(uniform(0, den - 1))), Int(static_cast<unsigned long>(den)));
}

Coeff RandomSource::coeff(const Ring& ring) {
  for (;;) {
    Coeff c = [&]() -> Coeff {
      switch (ring.kind()) {
        case RingKind::Integer:
          return Coeff::from_int(ring, signed_uniform(-5, 5));
        case RingKind::Rational:
          return Coeff::from_rat(ring, Rat(signed_uniform(-5, 5), static_cast<unsigned long>(uniform(1, 4))));
        case RingKind::PrimeField:
          return Coeff::from_int(ring, static_cast<unsigned long>(uniform(0, ring.characteristic() - 1)));
        case RingKind::ExtensionField: {
          ExtensionField::Elem v(ring.field()->k());
          for (auto& d : v) d = uniform(0, ring.characteristic() - 1);
          return Coeff(FqValue{ring.field(), v});
        }
        case RingKind::SqrtRational: {
          static const unsigned long radicands[] = {1, 2, 3, 5, 6, 7};
          Coeff out = Coeff::zero(ring);
          for (int i = 0, n = static_cast<int>(uniform(1, 2)); i < n; ++i) {
            Rat q(signed_uniform(-4, 4), static_cast<unsigned long>(uniform(1, 3)));
            q.canonicalize();
            out = out + Coeff(SqrtRational::term(radicands[uniform(0, 5)], q));
          }
          return out;
        }
      }
      return Coeff::zero(ring);
    }();
    if (!c.is_zero()) return c;
  }
}

GroupRingElem RandomSource::group_ring(const Ring& ring, std::size_t max_terms, std::uint64_t max_den) {
  GroupRingElem out(ring);
  const auto terms = uniform(1, max_terms);
  for (std::uint64_t i = 0; i < terms; ++i) out.add_term(qmodz(max_den), coeff(ring));
  return out;
}

BCElem RandomSource::bc_monomial(const Ring& ring, std::uint64_t max_deg, std::uint64_t max_den) {
  Int a, b;
  do {
    a = static_cast<unsigned long>(uniform(1, max_deg));
    b = static_cast<unsigned long>(uniform(1, max_deg));
  } while (gcd(a, b) != 1);
  return BCElem(ring, BCMonomial{qmodz(max_den), PosRational(a, b)}, coeff(ring));
}

BCElem RandomSource::bc_element(const Ring& ring, std::size_t max_terms, std::uint64_t max_deg,
                                std::uint64_t max_den) {
  BCElem out(ring);
  const auto terms = uniform(1, max_terms);
  for (std::uint64_t i = 0; i < terms; ++i) out = out + bc_monomial(ring, max_deg, max_den);
  return out;
}

HeckeElem RandomSource::hecke_element(const Ring& ring, std::size_t max_terms, std::uint64_t max_deg,
                                      std::uint64_t max_den) {
  return phi_inv(bc_element(ring, max_terms, max_deg, max_den));
}

PAdicFrac RandomSource::padic(Residue p, unsigned long max_level) {
  const unsigned long level = static_cast<unsigned long>(uniform(0, max_level));
  const Int size = pow(Int(std::to_string(p)), level);
  const Int j = static_cast<unsigned long>(uniform(0, to_u64(size) - 1));
  return PAdicFrac(p, Rat(j, size));
}

TpElem RandomSource::tp_element(const Ring& ring, std::size_t max_terms, unsigned long max_level) {
  TpElem out(ring);
  const auto terms = uniform(1, max_terms);
  for (std::uint64_t i = 0; i < terms; ++i) out.add_term(padic(ring.characteristic(), max_level), coeff(ring));
  return out;
}

CpElem RandomSource::cp_element(const Ring& ring, std::size_t max_terms, long max_k, unsigned long max_level) {
  for (;;) {
    CpElem out(ring);
    const auto terms = uniform(1, max_terms);
    for (std::uint64_t i = 0; i < terms; ++i) {
      out.add_term(CpKey{signed_uniform(-max_k, max_k), padic(ring.characteristic(), max_level)}, coeff(ring));
    }
    if (!out.is_zero()) return out;
  }
}

}  // namespace bce
