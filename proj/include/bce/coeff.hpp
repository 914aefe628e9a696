#pragma once

// The coefficient rings every algebra in this library is generic over:
// Z, Q, F_p, F_{p^k} and Q adjoined square roots of integers.

#include <memory>
#include <string>
#include <variant>

#include "bce/finite_field.hpp"
#include "bce/numbers.hpp"
#include "bce/sqrt_rational.hpp"

namespace bce {

enum class RingKind { Integer, Rational, PrimeField, ExtensionField, SqrtRational };

/// Descriptor of a coefficient ring. Cheap to copy; compared by value.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring prime_field(Residue p);
  static Ring extension_field(std::shared_ptr<const ExtensionField> field);
  static Ring sqrt_rationals();

  /// Parses the CLI spelling: z | q | fp:<p> | fq:<p>,<k>[,<poly>] | qsqrt.
  static Ring parse(const std::string& tag);

  RingKind kind() const { return kind_; }
  /// 0 for Z, Q and Q(sqrt); p for the finite fields.
  Residue characteristic() const { return p_; }
  bool is_finite_field() const { return p_ != 0; }
  /// Q and Q(sqrt): every nonzero integer is invertible.
  bool divides_integers() const {
    return kind_ == RingKind::Rational || kind_ == RingKind::SqrtRational;
  }
  const std::shared_ptr<const ExtensionField>& field() const { return field_; }

  /// Canonical tag, round-trips through parse(); fq tags always carry the modulus.
  std::string tag() const;
  /// Human name: Z, Q, F_5, F_4, Q(sqrt).
  std::string name() const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  RingKind kind_ = RingKind::Integer;
  Residue p_ = 0;
  std::shared_ptr<const ExtensionField> field_;
};

struct FpValue {
  Residue p;
  Residue v;
};

struct FqValue {
  std::shared_ptr<const ExtensionField> field;
  ExtensionField::Elem v;
};

/// One coefficient. The active alternative determines its ring.
class Coeff {
 public:
  using Value = std::variant<Int, Rat, FpValue, FqValue, SqrtRational>;

  explicit Coeff(Value v) : v_(std::move(v)) {
    if (auto q = std::get_if<Rat>(&v_)) q->canonicalize();
  }

  static Coeff zero(const Ring& ring) { return from_int(ring, 0); }
  static Coeff one(const Ring& ring) { return from_int(ring, 1); }
  /// Image of an integer under the structure map Z -> ring.
  static Coeff from_int(const Ring& ring, const Int& n);
  /// Image of a rational; throws NotInvertible if its denominator vanishes.
  static Coeff from_rat(const Ring& ring, const Rat& q);
  /// sqrt(n); only in Q(sqrt).
  static Coeff sqrt(const Ring& ring, const Int& n);
  /// The field generator t of F_{p^k}.
  static Coeff field_generator(const Ring& ring);

  const Value& value() const { return v_; }
  Ring ring() const;
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator-() const;
  Coeff pow(const Int& e) const;
  /// Throws NotInvertible when no inverse exists (including non-units of Z).
  Coeff inverse() const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Text form; needs_parens() tells printers when to wrap it in a product.
  std::string str() const;
  bool needs_parens() const;
  /// Leading sign of the text form, for printing sums.
  bool is_negative() const;

 private:
  Value v_;
};

/// 1/n in the ring, or a NotInvertible error naming the characteristic.
Coeff inverse_of_integer(const Ring& ring, const Int& n);

/// x^(p^l) for x in F_p or F_{p^k}; rejects characteristic-zero rings.
Coeff frobenius_coeff(const Coeff& x, unsigned long l);

/// Maps an integer or rational coefficient into another ring.
Coeff change_ring(const Coeff& x, const Ring& target);

}  // namespace bce
