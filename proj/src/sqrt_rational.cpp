#include "bce/sqrt_rational.hpp"

#include "bce/error.hpp"

namespace bce {

namespace {

Int smallest_prime_factor(const Int& n) {
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

}  // namespace

SqrtRational::SqrtRational(const Rat& q) { add_term(1, q); }

SqrtRational SqrtRational::sqrt(const Int& n) {
  if (n < 0) throw DomainError("sqrt of a negative integer");
  SqrtRational out;
  if (n == 0) return out;
  auto [f, s] = squarefree_split(n);
  out.add_term(s, Rat(f));
  return out;
}

SqrtRational SqrtRational::term(const Int& s, const Rat& q) {
  if (!is_squarefree(s)) throw DomainError("radicand " + to_string(s) + " is not squarefree");
  SqrtRational out;
  out.add_term(s, q);
  return out;
}

bool SqrtRational::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat SqrtRational::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SqrtRational::add_term(const Int& s, const Rat& value) {
  Rat q = value;
  q.canonicalize();
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

SqrtRational SqrtRational::operator+(const SqrtRational& o) const {
  SqrtRational out = *this;
  for (const auto& [s, q] : o.terms_) out.add_term(s, q);
  return out;
}

SqrtRational SqrtRational::operator-(const SqrtRational& o) const { return *this + (-o); }

SqrtRational SqrtRational::operator-() const {
  SqrtRational out;
  for (const auto& [s, q] : terms_) out.terms_.emplace(s, -q);
  return out;
}

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
  SqrtRational out;
  for (const auto& [s, q] : terms_) {
    for (const auto& [t, r] : o.terms_) {
      Int g = gcd(s, t);
      out.add_term((s / g) * (t / g), q * r * g);
    }
  }
  return out;
}

SqrtRational SqrtRational::inverse() const {
  if (is_zero()) throw NotInvertible("0 has no inverse");
  if (is_rational()) return SqrtRational(1 / rational_part());
  // Pick a prime l dividing some radicand and write x = A + B sqrt(l) with
  // A, B free of l; then x (A - B sqrt(l)) = A^2 - l B^2 involves fewer primes.
  Int l;
  for (const auto& [s, q] : terms_) {
    if (s != 1) {
      l = smallest_prime_factor(s);
      break;
    }
  }
  SqrtRational conj;
  for (const auto& [s, q] : terms_) conj.add_term(s, s % l == 0 ? Rat(-q) : q);
  SqrtRational norm = *this * conj;
  return conj * norm.inverse();
}

std::string SqrtRational::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, q] : terms_) {
    std::string part;
    Rat mag = q < 0 ? Rat(-q) : q;
    if (s == 1) {
      part = to_string(mag);
    } else if (mag == 1) {
      part = "sqrt(" + to_string(s) + ")";
    } else {
      part = to_string(mag) + "*sqrt(" + to_string(s) + ")";
    }
    if (out.empty()) {
      out = (q < 0 ? "-" : "") + part;
    } else {
      out += (q < 0 ? " - " : " + ") + part;
    }
  }
  return out;
}

}  // namespace bce
