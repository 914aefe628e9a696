#pragma once

#include <map>
#include <utility>

#include "bce/coeff.hpp"
#include "bce/error.hpp"

namespace bce {

/// Finite linear combination of basis keys with coefficients in one ring.
///
/// Invariant: no stored coefficient is zero, so the empty map is zero and
/// equality is structural.
template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, Coeff>;

  explicit LinComb(Ring ring) : ring_(std::move(ring)) {}
  LinComb(Ring ring, const Key& key, const Coeff& c) : ring_(std::move(ring)) { add_term(key, c); }
  /// The basis element key with coefficient 1.
  static LinComb basis(const Ring& ring, const Key& key) {
    return LinComb(ring, key, Coeff::one(ring));
  }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff::zero(ring_) : it->second;
  }

  /// Adds c to the coefficient of key; entries that cancel are removed.
  void add_term(const Key& key, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * other
  void add_scaled(const LinComb& other, const Coeff& c) {
    check_ring(other);
    if (c.is_zero()) return;
    const bool unit = c.is_one();
    for (const auto& [k, v] : other.terms_) add_term(k, unit ? v : v * c);
  }

  LinComb operator+(const LinComb& o) const {
    LinComb out = *this;
    out.add_scaled(o, Coeff::one(ring_));
    return out;
  }
  LinComb operator-(const LinComb& o) const {
    LinComb out = *this;
    out.add_scaled(o, -Coeff::one(ring_));
    return out;
  }
  LinComb operator-() const { return scaled(-Coeff::one(ring_)); }

  LinComb scaled(const Coeff& c) const {
    LinComb out(ring_);
    out.add_scaled(*this, c);
    return out;
  }
  LinComb scaled(const Int& n) const { return scaled(Coeff::from_int(ring_, n)); }

  /// Applies f: Coeff -> Coeff in the target ring, key by key.
  template <class F>
  LinComb map_coeffs(const Ring& target, F&& f) const {
    LinComb out(target);
    for (const auto& [k, v] : terms_) out.add_term(k, f(v));
    return out;
  }

  void check_ring(const LinComb& o) const {
    if (!(ring_ == o.ring_)) {
      throw RingMismatch("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
    }
  }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, v] : a.terms_) {
      if (!(k == it->first) || v != it->second) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

 private:
  Ring ring_;
  Terms terms_;
};

}  // namespace bce
