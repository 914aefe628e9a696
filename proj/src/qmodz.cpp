#include "bce/qmodz.hpp"

#include <algorithm>

#include "bce/error.hpp"

namespace bce {

QmodZ::QmodZ(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("Q/Z label with zero denominator");
  Int n = num;
  Int d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  n = mod(n, d);
  Int g = gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

QmodZ::QmodZ(const Rat& q) : QmodZ(q.get_num(), q.get_den()) {}

QmodZ QmodZ::operator+(const QmodZ& o) const {
  return QmodZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QmodZ QmodZ::operator-(const QmodZ& o) const {
  return QmodZ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QmodZ QmodZ::operator-() const { return QmodZ(-num_, den_); }

QmodZ QmodZ::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return QmodZ(parse_int(text), 1);
  return QmodZ(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string QmodZ::str() const { return to_string(num_) + "/" + to_string(den_); }

PosRational::PosRational(const Int& a, const Int& b) {
  if (a <= 0 || b <= 0) throw DomainError("degree labels must be positive");
  Int g = gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

PosRational PosRational::operator*(const PosRational& o) const {
  return PosRational(a_ * o.a_, b_ * o.b_);
}

PosRational PosRational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return PosRational(parse_int(text), 1);
  return PosRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string PosRational::str() const { return to_string(a_) + "/" + to_string(b_); }

QmodZ qmodz_scale(const Int& n, const QmodZ& r) { return QmodZ(n * r.num(), r.den()); }

std::vector<QmodZ> qmodz_preimages(const Int& n, const QmodZ& r) {
  if (n < 1) throw DomainError("preimages need n >= 1");
  std::vector<QmodZ> out;
  const Int den = n * r.den();
  for (Int k = 0; k < n; ++k) out.emplace_back(r.num() + k * r.den(), den);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<QmodZ, QmodZ> p_decompose(const QmodZ& r, const Int& p) {
  auto [k, rest] = split_prime_power(r.den(), p);
  const Int pk = pow(p, k);
  // r = num/(pk*rest); find x, y with x*rest + y*pk = num, so r = x/pk + y/rest.
  if (pk == 1) return {QmodZ(), r};
  if (rest == 1) return {r, QmodZ()};
  Int x = mod(r.num() * inverse_mod(rest, pk), pk);
  Int y = (r.num() - x * rest) / pk;
  return {QmodZ(x, pk), QmodZ(y, rest)};
}

}  // namespace bce
