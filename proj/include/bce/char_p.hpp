#pragma once

// Characteristic p: the convolution algebra T(p) on p-adic fractions in
// [0, 1), its identification with the p-power group ring, the nilpotent
// crossed product C_p with its lower-triangular representation, the affine
// semigroup G+, reduction of the group ring and Frobenius identities.

#include <optional>
#include <string>
#include <vector>

#include "bce/group_ring.hpp"

namespace bce {

/// a = k / p^n in [0, 1), canonical (p does not divide k unless k = 0).
class PAdicFrac {
 public:
  PAdicFrac(Residue p, const Int& k, unsigned long n);
  /// Zero.
  explicit PAdicFrac(Residue p) : p_(p), value_(0) {}
  /// Any rational in [0, 1) whose denominator is a power of p.
  PAdicFrac(Residue p, const Rat& value);

  Residue p() const { return p_; }
  const Rat& value() const { return value_; }
  Int k() const { return value_.get_num(); }
  unsigned long n() const;

  /// "k/p^n", e.g. "3/2^2"; zero is "0/2^0".
  std::string str() const;
  static PAdicFrac parse(Residue p, const std::string& text);

  friend bool operator==(const PAdicFrac& a, const PAdicFrac& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }
  friend bool operator<(const PAdicFrac& a, const PAdicFrac& b) { return a.value_ < b.value_; }

 private:
  Residue p_;
  Rat value_;
};

/// Finite combination of delta_a; the unit is delta_0.
using TpElem = LinComb<PAdicFrac>;

/// Characteristic of the ring, or DomainError when it is zero.
Residue char_of(const Ring& ring);

TpElem tp_delta(const Ring& ring, const PAdicFrac& a);
TpElem tp_one(const Ring& ring);

/// delta_a * delta_b = delta_{a+b}, dropping sums >= 1.
TpElem tp_mul(const TpElem& f, const TpElem& g);
TpElem tp_pow(const TpElem& f, const Int& exponent);

/// The isomorphism K[Q_p/Z_p] -> T(p) with e(1/p^l) -> delta_0 - delta_{p^-l}.
TpElem iota(const GroupRingElem& x);
GroupRingElem iota_inv(const TpElem& f);

/// sigma_p: delta_a -> delta_{pa} (dropped when pa >= 1).
TpElem tp_sigma(const TpElem& f);
/// rho~_p: delta_a -> delta_{(a+p-1)/p}.
TpElem tp_rho(const TpElem& f);

/// Membership in Ker sigma_p: f vanishes on [0, 1/p).
bool in_ker_sigma(const TpElem& f);
/// For members of Ker sigma_p, checks f^p = 0; false for non-members.
bool ker_sigma_nilpotency(const TpElem& f);

/// tau_m = rho~_p^m(1) = delta_{(p^m - 1)/p^m}.
TpElem tau(const Ring& ring, unsigned long m);

struct RelationCheck {
  std::string name;
  bool ok;
};
/// tau_m tau_n = 0, rho~_p^m(tau_n) = tau_{m+n}, sigma_p(tau_n) = 0 for 1 <= m, n <= bound.
std::vector<RelationCheck> tau_relations_check(const Ring& ring, unsigned long bound);

/// Basis monomial of C_p: k >= 1 encodes mu~_p^k delta_a, k <= 0 encodes delta_a mu*_p^(-k).
struct CpKey {
  long k = 0;
  PAdicFrac a;

  friend bool operator==(const CpKey& x, const CpKey& y) { return x.k == y.k && x.a == y.a; }
  friend bool operator<(const CpKey& x, const CpKey& y) {
    if (x.k != y.k) return x.k < y.k;
    return x.a < y.a;
  }
};

using CpElem = LinComb<CpKey>;

CpElem cp_from_tp(const TpElem& f);
CpElem cp_one(const Ring& ring);
CpElem cp_mu_tilde(const Ring& ring);
CpElem cp_mu_star(const Ring& ring);
bool cp_is_abelian(const CpElem& x);
TpElem cp_abelian_part(const CpElem& x);

CpElem cp_mul(const CpElem& x, const CpElem& y);
CpElem cp_pow(const CpElem& x, const Int& exponent);

/// theta(x) applied to a vector of K[S n [0,1)], written in the basis xi_a
/// (stored like T(p) elements, xi_a <-> delta_a; xi_c = 0 for c >= 1).
TpElem cp_act(const CpElem& x, const TpElem& xi);

/// All a = j / p^level, j = 0 .. p^level - 1, ascending.
std::vector<PAdicFrac> truncated_basis(Residue p, unsigned long level);

/// theta(x) restricted to the truncated basis. Rows whose label needs a
/// denominator beyond p^level are absent, not zero.
struct TriangularMatrix {
  Residue p;
  unsigned long level;
  std::vector<PAdicFrac> basis;
  /// entries[i][j] = T_{basis[i], basis[j]}.
  std::vector<std::vector<Coeff>> entries;

  bool is_lower_triangular() const;
  /// Aligned text grid, '.' for zero.
  std::string grid() const;
};

TriangularMatrix cp_matrix(const CpElem& x, unsigned long level);

/// Searches basis vectors xi_b with b = j/p^L, L <= max_level, for one with
/// x xi_b != 0. Returns the first such b.
std::optional<PAdicFrac> faithfulness_witness(const CpElem& x, unsigned long max_level);

/// Affine map b -> p^n b + a of the group S x| Z.
struct GElem {
  Residue p;
  long n;
  Rat a;

  Rat apply(const Rat& b) const;
  /// (this o other)(b) = this(other(b)).
  GElem compose(const GElem& other) const;
  bool operator==(const GElem& o) const { return p == o.p && n == o.n && a == o.a; }
};

/// Membership in G+ = { g : x >= c implies g(x) >= c for all c in [0, 1] }.
/// Affine maps are monotone, so testing x = 0 (for n >= 0) or x = 1 (n < 0)
/// suffices: n >= 0 and a >= 0, or n = -m < 0 and a >= 1 - p^-m.
bool g_in_plus(const GElem& g);

/// Factorization g = g_a beta^n (n >= 0) or g = g_b alpha^m (n = -m < 0),
/// with alpha = (-1, (p-1)/p), beta = (1, 0), g_a = (0, a).
struct GWord {
  Rat translation;
  enum class Letter { Alpha, Beta } letter;
  unsigned long power;

  std::string str() const;
  GElem evaluate(Residue p) const;
};
/// Throws DomainError if g is not in G+.
GWord g_decompose(const GElem& g);

/// Ring homomorphism e(r) -> e(r') killing the p-part of each label.
GroupRingElem reduce_mod_p(const GroupRingElem& x, const Int& p);

/// On the reduced (prime-to-p) algebra: the inverse of sigma_n for p | n
/// composed with rho_{n'} for the prime-to-p part n'.
GroupRingElem reduced_rho(const Int& n, const GroupRingElem& x, const Int& p);

/// Compares (sigma_{p^l} (x) Frob^l)(f) with f^(p^l).
bool frobenius_identity_check(const GroupRingElem& f, unsigned long l);
/// Left side of the identity on its own.
GroupRingElem frobenius_twist(const GroupRingElem& f, unsigned long l);

}  // namespace bce
