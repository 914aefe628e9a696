#pragma once

// Seeded generators of random algebra elements for property checks.

#include <cstdint>
#include <random>

#include "bce/char_p.hpp"
#include "bce/hecke.hpp"

namespace bce {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);  // inclusive
  long signed_uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// r with den <= max_den.
  QmodZ qmodz(std::uint64_t max_den);
  /// Nonzero coefficient; integers in [-5, 5], small fractions, random field
  /// elements or short sqrt sums according to the ring.
  Coeff coeff(const Ring& ring);
  /// Up to max_terms terms with den <= max_den.
  GroupRingElem group_ring(const Ring& ring, std::size_t max_terms, std::uint64_t max_den);
  /// Random normal-form monomial c mu~_a e(r) mu*_b, a, b <= max_deg.
  BCElem bc_monomial(const Ring& ring, std::uint64_t max_deg, std::uint64_t max_den);
  BCElem bc_element(const Ring& ring, std::size_t max_terms, std::uint64_t max_deg, std::uint64_t max_den);
  HeckeElem hecke_element(const Ring& ring, std::size_t max_terms, std::uint64_t max_deg,
                          std::uint64_t max_den);
  /// a = j / p^n with n <= max_level.
  PAdicFrac padic(Residue p, unsigned long max_level);
  TpElem tp_element(const Ring& ring, std::size_t max_terms, unsigned long max_level);
  /// Nonzero element of C_p with |k| <= max_k.
  CpElem cp_element(const Ring& ring, std::size_t max_terms, long max_k, unsigned long max_level);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bce
