#include "bce/finite_field.hpp"

#include <cctype>

#include "bce/error.hpp"

namespace bce {

namespace {

using u128 = unsigned __int128;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
FpPoly poly_rem(FpPoly a, const FpPoly& m, Residue p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Residue lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = PrimeField::sub(a[shift + i], PrimeField::mul(lead, m[i], p), p);
    }
    trim(a);
  }
  return a;
}

// Advances a counter over all polynomials of the given size (low digit first).
bool next_poly(FpPoly& c, Residue p) {
  for (auto& digit : c) {
    if (++digit < p) return true;
    digit = 0;
  }
  return false;
}

}  // namespace

Residue PrimeField::add(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

Residue PrimeField::sub(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + (p - b); }

Residue PrimeField::mul(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((static_cast<u128>(a) * b) % p);
}

Residue PrimeField::pow(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv(Residue a, Residue p) {
  if (a % p == 0) throw NotInvertible("0 has no inverse in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

bool is_irreducible(const FpPoly& m, Residue p) {
  if (m.size() < 2 || m.back() != 1) return false;
  const std::size_t deg = m.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    FpPoly low(d, 0);
    do {
      FpPoly candidate = low;
      candidate.push_back(1);
      if (poly_rem(m, candidate, p).empty()) return false;
    } while (next_poly(low, p));
  }
  return true;
}

std::shared_ptr<const ExtensionField> ExtensionField::make(Residue p, unsigned k,
                                                           std::optional<FpPoly> modulus) {
  if (k == 0) throw DomainError("extension degree must be at least 1");
  if (p < 2) throw DomainError("characteristic must be prime");
  for (Residue d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw DomainError(std::to_string(p) + " is not prime");
  }
  FpPoly m;
  if (modulus) {
    m = *modulus;
    trim(m);
    if (m.size() != k + 1) {
      throw DomainError("modulus degree does not match extension degree " + std::to_string(k));
    }
    if (!is_irreducible(m, p)) {
      throw DomainError("modulus " + fp_poly_str(m) + " is reducible over F_" + std::to_string(p));
    }
  } else if (p == 2 && k == 2) {
    m = {1, 1, 1};
  } else if (p == 2 && k == 3) {
    m = {1, 1, 0, 1};
  } else if (p == 3 && k == 2) {
    m = {1, 0, 1};
  } else {
    FpPoly low(k, 0);
    bool found = false;
    do {
      FpPoly candidate = low;
      candidate.push_back(1);
      if (is_irreducible(candidate, p)) {
        m = candidate;
        found = true;
        break;
      }
    } while (next_poly(low, p));
    if (!found) throw DomainError("no irreducible polynomial found");
  }
  return std::shared_ptr<const ExtensionField>(new ExtensionField(p, k, std::move(m)));
}

std::uint64_t ExtensionField::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  return q;
}

ExtensionField::Elem ExtensionField::constant(Residue c) const {
  Elem e(k_, 0);
  e[0] = c % p_;
  return e;
}

ExtensionField::Elem ExtensionField::generator() const {
  if (k_ == 1) return constant(p_ - modulus_[0]);  // root of t + m0
  Elem e(k_, 0);
  e[1] = 1;
  return e;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = PrimeField::add(a[i], b[i], p_);
  return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = PrimeField::sub(a[i], b[i], p_);
  return r;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const { return sub(zero(), a); }

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
  FpPoly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = PrimeField::add(prod[i + j], PrimeField::mul(a[i], b[j], p_), p_);
    }
  }
  FpPoly rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(k_, 0);
  return rem;
}

ExtensionField::Elem ExtensionField::pow(Elem a, std::uint64_t e) const {
  Elem r = constant(1);
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  if (is_zero(a)) throw NotInvertible("0 has no inverse in F_" + std::to_string(order()));
  return pow(a, order() - 2);
}

bool ExtensionField::is_zero(const Elem& a) const {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<ExtensionField::Elem> ExtensionField::elements() const {
  std::vector<Elem> out;
  Elem e(k_, 0);
  do {
    out.push_back(e);
  } while (next_poly(e, p_));
  return out;
}

std::string ExtensionField::modulus_str() const { return fp_poly_str(modulus_); }

FpPoly parse_fp_poly(const std::string& text, Residue p) {
  FpPoly poly;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("bad polynomial '" + text + "': " + why);
  };
  auto read_number = [&]() -> std::uint64_t {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected digits");
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
      ++i;
    }
    return v;
  };
  bool negative = false;
  if (text.empty()) fail("empty");
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] == '-') {
      negative = true;
      ++i;
      continue;
    }
    std::uint64_t coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = read_number();
      has_coeff = true;
      if (i < text.size() && text[i] == '*') ++i;
    }
    std::uint64_t degree = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      degree = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        degree = read_number();
      }
    } else if (!has_coeff) {
      fail("expected a term");
    }
    if (poly.size() <= degree) poly.resize(degree + 1, 0);
    Residue c = coeff % p;
    if (negative) c = PrimeField::sub(0, c, p);
    poly[degree] = PrimeField::add(poly[degree], c, p);
    negative = false;
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size()) {
      if (text[i] == '+') {
        ++i;
      } else if (text[i] != '-') {
        fail(std::string("unexpected '") + text[i] + "'");
      }
    }
  }
  trim(poly);
  return poly;
}

std::string fp_poly_str(const FpPoly& poly) {
  std::string out;
  for (std::size_t d = poly.size(); d-- > 0;) {
    Residue c = poly[d];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace bce
