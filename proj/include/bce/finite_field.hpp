#pragma once

// Prime fields F_p and extensions F_{p^k} = F_p[t]/(m(t)).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bce {

using Residue = std::uint64_t;

/// Residue arithmetic modulo a prime p < 2^63.
struct PrimeField {
  static Residue add(Residue a, Residue b, Residue p);
  static Residue sub(Residue a, Residue b, Residue p);
  static Residue mul(Residue a, Residue b, Residue p);
  static Residue pow(Residue a, std::uint64_t e, Residue p);
  /// Throws NotInvertible for a = 0.
  static Residue inv(Residue a, Residue p);
};

/// Polynomial over F_p, coefficients low degree first, no trailing zeros.
using FpPoly = std::vector<Residue>;

/// F_p[t]/(m) for a monic irreducible m of degree k >= 1.
class ExtensionField {
 public:
  /// Builds the field; without a modulus the built-in default is used
  /// (t^2+t+1, t^3+t+1, t^2+1 for q = 4, 8, 9; otherwise the first monic
  /// irreducible in lexicographic order). Throws if m is reducible.
  static std::shared_ptr<const ExtensionField> make(Residue p, unsigned k,
                                                    std::optional<FpPoly> modulus = {});

  Residue p() const { return p_; }
  unsigned k() const { return k_; }
  const FpPoly& modulus() const { return modulus_; }
  std::uint64_t order() const;

  /// Elements are vectors of exactly k residues.
  using Elem = std::vector<Residue>;

  Elem zero() const { return Elem(k_, 0); }
  Elem constant(Residue c) const;
  /// The class of t.
  Elem generator() const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;

  /// Every element, for exhaustive checks on small fields.
  std::vector<Elem> elements() const;

  /// Modulus as "t^2+t+1".
  std::string modulus_str() const;

  bool operator==(const ExtensionField& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  ExtensionField(Residue p, unsigned k, FpPoly modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {}

  Residue p_;
  unsigned k_;
  FpPoly modulus_;
};

/// True if the monic polynomial m over F_p has no factor of degree 1..deg/2.
bool is_irreducible(const FpPoly& m, Residue p);

/// Parses a polynomial in t over F_p, e.g. "t^2+t+1" or "t^2+2".
FpPoly parse_fp_poly(const std::string& text, Residue p);

/// Prints a polynomial in t, highest degree first.
std::string fp_poly_str(const FpPoly& poly);

}  // namespace bce
